"""
CLI commands for the monomial quiver pipeline.

Available commands:
    python -m cli.main check|classify|ufgraph|normalize|connectify|hilbert|pipeline|verify
"""
