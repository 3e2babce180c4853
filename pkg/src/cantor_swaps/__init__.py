"""Thompson's group V acting on Cantor space by prefix replacement, with
swap-based verification of several finite presentations."""

__version__ = "0.1.0"
