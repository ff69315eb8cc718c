"""Test package for Agentic Trust."""
