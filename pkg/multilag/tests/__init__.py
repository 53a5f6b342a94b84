"""Tests for multilag."""
