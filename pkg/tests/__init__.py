"""Tests for the Zeckendorf game toolkit."""
