"""Utility functions for heatedstring."""
