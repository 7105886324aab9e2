"""
Test suite for the monomial quiver pipeline.

This package contains unit tests and integration tests for:
- Core configuration and models (config.py, models.py)
- Input parsing, class transforms and the class pipeline
- The word automaton, Ufnarovskii graph, arrow splitting and path counts
- Truncated graded representations and the verification suites
- The command-line driver
"""
