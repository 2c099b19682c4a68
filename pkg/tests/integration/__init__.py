"""Integration tests for the application."""
