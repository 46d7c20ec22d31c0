"""Test init for UI utils."""
