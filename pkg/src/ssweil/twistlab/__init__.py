"""Twists: Frobenius conjugacy classes and the classification pipelines."""
