"""Deterministic random generators for experiments and reproduction runs.

Everything takes an explicit ``random.Random`` so a single seed makes a
whole experiment bit-reproducible.  Rejection sampling is used freely:
the degenerate loci are measure zero, so retries are rare.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from .arrangement import (
    Arrangement,
    ArrangementError,
    conic_arrangement_normal_crossings,
    quadric_poly,
)
from .exactpoly import HomogeneousPoly, monomial_basis
from .linalg import RationalMatrix
from .torelli import QuadricPair


def random_fraction(rng, lo=-9, hi=9, den=4):
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_point(rng, n, lo=-9, hi=9):
    while True:
        p = [Fraction(rng.randint(lo, hi)) for _ in range(n + 1)]
        if any(x != 0 for x in p):
            return p


def random_invertible_matrix(rng, size, lo=-5, hi=5):
    while True:
        m = RationalMatrix(
            [[Fraction(rng.randint(lo, hi)) for _ in range(size)] for _ in range(size)]
        )
        if m.det() != 0:
            return m


def random_line(rng, n):
    """An (n+1) x 2 parametrization through two independent points."""
    while True:
        p0 = random_point(rng, n)
        p1 = random_point(rng, n)
        m = RationalMatrix.from_columns([p0, p1])
        if m.rank() == 2:
            return m


def random_poly(rng, num_vars, degree, lo=-5, hi=5):
    while True:
        terms = {}
        for exp in monomial_basis(num_vars, degree):
            c = rng.randint(lo, hi)
            if c:
                terms[exp] = Fraction(c)
        if terms:
            return HomogeneousPoly(num_vars, degree, terms)


def random_arrangement(rng, n, degrees):
    """Mixed-degree arrangement with pairwise non-proportional members."""
    while True:
        polys = tuple(random_poly(rng, n + 1, d) for d in degrees)
        try:
            return Arrangement(n, polys)
        except ArrangementError:
            continue


def random_smooth_conic(rng, lo=-4, hi=4):
    while True:
        raw = [[rng.randint(lo, hi) for _ in range(3)] for _ in range(3)]
        m = RationalMatrix(
            [
                [Fraction(raw[i][j] + raw[j][i], 2) for j in range(3)]
                for i in range(3)
            ]
        )
        if m.det() != 0:
            return m


def random_conic_arrangement(rng, ell, max_tries=400):
    """ell smooth conics on P^2 in normal crossings position."""
    for _ in range(max_tries):
        mats = [random_smooth_conic(rng) for _ in range(ell)]
        try:
            arr = Arrangement(2, tuple(quadric_poly(m) for m in mats))
        except ArrangementError:
            continue
        if conic_arrangement_normal_crossings(arr):
            return arr
    raise ArrangementError("failed to sample a normal-crossings conic arrangement")


def random_diagonal_pair(rng, n, lo=1, hi=12):
    """Normal-crossings pair of diagonal quadrics with distinct ratios."""
    while True:
        a = [Fraction(rng.randint(lo, hi)) for _ in range(n)] + [Fraction(-1)]
        b = [Fraction(rng.randint(lo, hi)) for _ in range(n)] + [Fraction(-1)]
        ratios = [x / y for x, y in zip(a, b)]
        if len(set(ratios)) == n + 1:
            return QuadricPair.from_diagonals(a, b)


def dual_pencil_partner(rng, pair, max_tries=100):
    """A pair with the same dual pencil: both members replaced by other
    rational members (A^{-1} + t B^{-1})^{-1} of the dual pencil."""
    n = pair.ambient_dim
    a = [pair.a[i, i] for i in range(n + 1)]
    b = [pair.b[i, i] for i in range(n + 1)]

    def member(t):
        entries = []
        for ak, bk in zip(a, b):
            den = bk + t * ak
            if den == 0:
                return None
            entries.append(ak * bk * (1 + t) / den)
        return entries

    for _ in range(max_tries):
        t1 = random_fraction(rng, -6, 6)
        t2 = random_fraction(rng, -6, 6)
        if t1 == t2:
            continue
        m1, m2 = member(t1), member(t2)
        if m1 is None or m2 is None:
            continue
        if any(x == 0 for x in m1) or any(x == 0 for x in m2):
            continue
        try:
            cand = QuadricPair.from_diagonals(m1, m2)
        except ArrangementError:
            continue
        if cand.normal_crossings():
            return cand
    raise ArrangementError("failed to sample a dual-pencil partner")


def random_pair_of_pairs(rng, n):
    """(pair1, pair2, related): related pairs share the dual pencil."""
    pair1 = random_diagonal_pair(rng, n)
    if rng.random() < 0.5:
        return pair1, dual_pencil_partner(rng, pair1), True
    while True:
        pair2 = random_diagonal_pair(rng, n)
        from .torelli import dual_pencil_equal

        if not dual_pencil_equal(pair1, pair2):
            return pair1, pair2, False


def rnc_sample_points(parameters, ts):
    """Points [1/(t-a_0) : ... : 1/(t-a_N)] of the standard-frame curve,
    cleared to integer-free rational coordinates."""
    pts = []
    for t in ts:
        t = Fraction(t)
        if any(t == a for a in parameters):
            raise ArrangementError("parameter hits a coordinate point")
        pts.append([1 / (t - a) for a in parameters])
    return pts
