"""Monte Carlo simulation of typing monkeys."""
