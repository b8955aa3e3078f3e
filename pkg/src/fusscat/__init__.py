"""Series reversion, Catalan-family counts and brute-force dissection enumeration."""

__version__ = "0.1.0"
