"""Supersingular Weil data: point counts, L-polynomials and the
fully maximal / fully minimal / mixed classification of curves and
abelian varieties over small finite fields."""

__version__ = "0.1.0"
