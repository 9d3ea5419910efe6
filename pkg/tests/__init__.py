"""Unit test package for flowpart."""
