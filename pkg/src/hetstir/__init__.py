"""Exact heterogeneous Stirling numbers, heterogeneous Bell polynomials and
their r-analogues, with lambda carried symbolically."""

from .bellpoly import dobinski, het_bell, het_bell_r
from .powerseries import Series, compose, exp, gen_deg_exp, gen_deg_log, powi
from .ring import LamPoly, Rat, XPoly, classic_factorial_poly, limit_eval, rising_deg, to_basis
from .triangles import Triangle, het1, het2, het2_r

__all__ = [
    "LamPoly",
    "Rat",
    "Series",
    "Triangle",
    "XPoly",
    "classic_factorial_poly",
    "compose",
    "dobinski",
    "exp",
    "gen_deg_exp",
    "gen_deg_log",
    "het1",
    "het2",
    "het2_r",
    "het_bell",
    "het_bell_r",
    "limit_eval",
    "powi",
    "rising_deg",
    "to_basis",
]
