"""Metadata catalogue of Earth-observation datasets for health research."""

__version__ = "0.1.0"
