"""finitemonkey - waiting times for typing monkeys, random and educated."""

__version__ = "0.1.0"
