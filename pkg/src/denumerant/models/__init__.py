"""Pydantic models shared across the package."""
