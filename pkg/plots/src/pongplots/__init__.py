"""Figure rendering for ponglab experiment logs (CSV in, PNG out)."""

__version__ = "0.1.0"
