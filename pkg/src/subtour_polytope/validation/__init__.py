"""Validation utilities and JSON Schema helpers."""
