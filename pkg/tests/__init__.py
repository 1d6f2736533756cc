"""Tests package for jordanum."""
