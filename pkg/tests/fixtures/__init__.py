"""Shared expected values for tests."""
