"""Tests for the rle_sups package."""
