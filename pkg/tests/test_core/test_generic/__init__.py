"""Tests for the generic module."""
