"""Byte layouts used for heatedstring binary files."""
