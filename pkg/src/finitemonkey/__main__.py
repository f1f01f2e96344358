"""
Entry point for python -m finitemonkey
"""

from finitemonkey.cli import main

if __name__ == "__main__":
    main()
