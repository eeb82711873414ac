"""Test suite for the regional controllability toolkit."""
