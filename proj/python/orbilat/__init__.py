"""Exact lattice, isometry and orbifold computations (C++ core)."""

import json
from fractions import Fraction

from ._core import (
    InconsistencyError,
    Isometry,
    Lattice,
    PreconditionError,
    case1_non_prime_power,
    case2,
    find_isometry,
    leech_from_golay,
    named_lattice,
    negation,
)
from . import _core

__all__ = [
    "InconsistencyError",
    "Isometry",
    "Lattice",
    "PreconditionError",
    "case1_non_prime_power",
    "case1_prime_power",
    "case2",
    "case_i",
    "construction_a",
    "determinant",
    "epsilon_cfpf",
    "find_isometry",
    "gram",
    "leech_from_golay",
    "matrix",
    "named_lattice",
    "negation",
    "self_dual_check",
    "trace_on_vplus_two",
    "verdict",
]


def _int_matrix(rows):
    return [[int(x) for x in row] for row in rows]


def gram(lattice):
    return _int_matrix(lattice._gram)


def determinant(lattice):
    return int(lattice._determinant)


def matrix(isometry):
    return _int_matrix(isometry._matrix)


def verdict(isometry):
    return json.loads(isometry._verdict())


def trace_on_vplus_two(isometry):
    return json.loads(isometry._trace_on_vplus_two())


def epsilon_cfpf(ell, n, s):
    return Fraction(_core._epsilon_cfpf(ell, n, s))


def case1_prime_power(bound=128):
    return json.loads(_core._case1_prime_power(bound))


def case_i(n):
    return json.loads(_core._case_i(n))


def self_dual_check(ell, n):
    return json.loads(_core._self_dual_check(ell, n))


def construction_a(code):
    return _core._construction_a(code)
