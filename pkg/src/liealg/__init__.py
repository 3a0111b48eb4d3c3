"""Lie algebras, automorphisms, periodic gradings and contractions"""
