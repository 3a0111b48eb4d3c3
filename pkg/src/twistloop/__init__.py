"""Twisted loop algebras: windows, polarisations, the quotient map and generator families"""
