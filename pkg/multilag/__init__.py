"""Exact Darboux-Crum transformations of the radial oscillator."""
