"""Pydantic models for the documents the command line emits."""
