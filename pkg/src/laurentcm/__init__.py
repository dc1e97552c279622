"""Laurent expansions of modular forms at CM points."""
__version__ = "0.1.0"
