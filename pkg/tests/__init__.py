"""Test suite for sln-sheaves."""
