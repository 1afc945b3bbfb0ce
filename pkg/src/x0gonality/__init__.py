"""Gonality of modular curves X_0(N) over finite fields and number fields."""

__version__ = "0.1.0"
