"""End-to-end and acceptance tests for heatedstring."""
