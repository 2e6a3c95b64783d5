# src/__init__.py

# Top-level package for the quantum-matrix H-prime toolkit.
# No runtime logic needed here.
