"""Stateful services: configuration, value oracle, sweep executor."""
