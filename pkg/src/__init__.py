"""sln-sheaves - exact character-sheaf and almost-character data for SL_n(F_q)."""

__version__ = "0.1.0"
