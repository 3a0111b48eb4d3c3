"""Shared exact linear algebra, sampling, check results and error types"""
