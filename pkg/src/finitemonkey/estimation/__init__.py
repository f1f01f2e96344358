"""Entropy-rate estimators, Markov sources and published estimates."""
