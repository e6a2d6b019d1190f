"""Output — CSV tables and JSON reports."""
