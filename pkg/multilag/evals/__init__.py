"""Acceptance evaluation for multilag."""
