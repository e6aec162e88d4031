"""
WildColor Test Suite
====================

Tests for the chi engine, the counting oracles and the sequence identities.
"""
