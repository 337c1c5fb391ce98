"""Tests for heatedstring."""
