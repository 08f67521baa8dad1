"""Utilities for bandrg."""
