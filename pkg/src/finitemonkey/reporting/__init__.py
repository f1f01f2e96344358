"""
Report building and rendering for finitemonkey commands.
"""
