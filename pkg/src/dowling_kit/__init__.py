"""Exact generalized Stirling numbers, Bell and higher-order r-Dowling polynomials."""
from __future__ import annotations

__version__ = "0.1.0"

from .dowling import DowlingParams, dowling_egf, dowling_poly, power_form
from .exact import BiPoly, binomial, gen_binomial, gen_falling, multinomial
from .gbell import bell_egf, gbell_poly
from .gstirling import ExcludedParameters, GStirlingParams, gstirling, gstirling_explicit, gstirling_table
from .hurwitz import HurwitzSeries, hz_bpa, hz_deg_exp, hz_exp, hz_mul, hz_pow
from .kernels import BACKEND

__all__ = [
    "BACKEND",
    "BiPoly",
    "DowlingParams",
    "ExcludedParameters",
    "GStirlingParams",
    "HurwitzSeries",
    "bell_egf",
    "binomial",
    "dowling_egf",
    "dowling_poly",
    "gbell_poly",
    "gen_binomial",
    "gen_falling",
    "gstirling",
    "gstirling_explicit",
    "gstirling_table",
    "hz_bpa",
    "hz_deg_exp",
    "hz_exp",
    "hz_mul",
    "hz_pow",
    "multinomial",
    "power_form",
]
