"""Arrangements of smooth hypersurfaces on projective space.

Normal-crossings verification is implemented exactly for the cases the
theory exercises: hyperplane arrangements, pairs of quadrics, and conic
arrangements in the plane.  Smoothness is verified for degrees 1 and 2;
for higher degree the caller asserts it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb

from .exactpoly import (
    BinaryForm,
    HomogeneousPoly,
    binary_form_distinct_roots,
    dim_forms,
    graded_piece_matrix,
    monomial_basis,
)
from .linalg import RationalMatrix, vectors_rank


class ArrangementError(ValueError):
    pass


@dataclass(frozen=True)
class Arrangement:
    """An ordered family of smooth hypersurfaces on P^n, no two of which
    are projectively equal."""

    ambient_dim: int
    hypersurfaces: tuple
    smoothness_asserted: tuple = None

    def __post_init__(self):
        n = self.ambient_dim
        polys = tuple(self.hypersurfaces)
        object.__setattr__(self, "hypersurfaces", polys)
        if not polys:
            raise ArrangementError("an arrangement needs at least one hypersurface")
        for f in polys:
            if f.num_vars != n + 1:
                raise ArrangementError("polynomial variable count must be n+1")
            if f.is_zero():
                raise ArrangementError("hypersurface polynomial must be nonzero")
            if f.degree < 1:
                raise ArrangementError("hypersurface degree must be positive")
        for f, g in combinations(polys, 2):
            if f.proportional_to(g):
                raise ArrangementError("two hypersurfaces are projectively equal")
        flags = self.smoothness_asserted
        if flags is None:
            flags = tuple(f.degree >= 3 for f in polys)
        object.__setattr__(self, "smoothness_asserted", tuple(flags))

    def __len__(self):
        return len(self.hypersurfaces)

    @property
    def degrees(self):
        return [f.degree for f in self.hypersurfaces]

    def equal_degree(self):
        ds = set(self.degrees)
        return ds.pop() if len(ds) == 1 else None

    def transform(self, p: RationalMatrix) -> "Arrangement":
        """Apply the coordinate substitution x -> P x to every polynomial."""
        cols = [[p[i, j] for j in range(p.cols)] for i in range(p.rows)]
        return Arrangement(
            self.ambient_dim,
            tuple(f.compose_linear(cols) for f in self.hypersurfaces),
            self.smoothness_asserted,
        )

    def to_json(self):
        return {
            "n": self.ambient_dim,
            "hypersurfaces": [f.to_json() for f in self.hypersurfaces],
        }

    @classmethod
    def from_json(cls, data):
        n = data["n"]
        polys = tuple(
            HomogeneousPoly.from_json(h, n + 1) for h in data["hypersurfaces"]
        )
        return cls(n, polys)


@dataclass(frozen=True)
class HyperplaneArrangement:
    """Hyperplanes on P^N given by their normal coefficient vectors."""

    ambient_dim: int
    normals: tuple

    def __post_init__(self):
        normals = tuple(tuple(Fraction(c) for c in v) for v in self.normals)
        object.__setattr__(self, "normals", normals)
        for v in normals:
            if len(v) != self.ambient_dim + 1:
                raise ArrangementError("normal vector has wrong length")
            if all(c == 0 for c in v):
                raise ArrangementError("zero normal vector")
        for v, w in combinations(normals, 2):
            if vectors_rank([list(v), list(w)]) < 2:
                raise ArrangementError("two proportional hyperplanes")

    def __len__(self):
        return len(self.normals)


def hyperplanes_normal_crossings(h: HyperplaneArrangement) -> bool:
    """Every k of the normals, k <= min(l, N+1), must be independent."""
    k = min(len(h), h.ambient_dim + 1)
    return all(
        vectors_rank([list(v) for v in subset]) == k
        for subset in combinations(h.normals, k)
    )


# ---------------------------------------------------------------------------
# Quadrics
# ---------------------------------------------------------------------------


def quadric_matrix(f: HomogeneousPoly) -> RationalMatrix:
    """Symmetric matrix M with f = x^T M x for a quadratic form."""
    if f.degree != 2:
        raise ArrangementError("not a quadratic form")
    m = f.num_vars
    a = [[Fraction(0)] * m for _ in range(m)]
    for exp, c in f.terms.items():
        support = [j for j, e in enumerate(exp) if e]
        if len(support) == 1:
            a[support[0]][support[0]] = c
        else:
            i, j = support
            a[i][j] = a[j][i] = c / 2
    return RationalMatrix(a)


def quadric_poly(m: RationalMatrix) -> HomogeneousPoly:
    """The quadratic form x^T M x of a symmetric matrix."""
    if not m.is_symmetric():
        raise ArrangementError("matrix is not symmetric")
    terms = {}
    k = m.rows
    for i in range(k):
        for j in range(i, k):
            c = m[i, j] if i == j else 2 * m[i, j]
            if c == 0:
                continue
            exp = [0] * k
            exp[i] += 1
            exp[j] += 1
            terms[tuple(exp)] = c
    return HomogeneousPoly(k, 2, terms)


def pencil_determinant(a: RationalMatrix, b: RationalMatrix) -> BinaryForm:
    """det(s*A + t*B) as a binary form, computed by exact interpolation."""
    if a.rows != a.cols or b.rows != b.cols or a.rows != b.rows:
        raise ArrangementError("pencil matrices must be square of equal size")
    m = a.rows
    # p(s) = det(s*A + B) has degree <= m; interpolate at m+1 nodes.
    nodes = list(range(m + 1))
    values = [(a.scale(s) + b).det() for s in nodes]
    # Newton / Lagrange interpolation with exact fractions.
    coeffs = [Fraction(0)] * (m + 1)
    for k, xk in enumerate(nodes):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for x in nodes:
            if x == xk:
                continue
            # multiply basis polynomial by (s - x)
            new = [Fraction(0)] * (len(basis) + 1)
            for i, c in enumerate(basis):
                new[i] -= c * x
                new[i + 1] += c
            basis = new
            denom *= xk - x
        w = values[k] / denom
        for i, c in enumerate(basis):
            coeffs[i] += w * c
    return BinaryForm(m, coeffs)


def quadric_pair_normal_crossings(a: RationalMatrix, b: RationalMatrix) -> bool:
    """Pencil-of-quadrics criterion: n+1 distinct singular members."""
    for m in (a, b):
        if not m.is_symmetric():
            raise ArrangementError("quadric matrix is not symmetric")
        if m.det() == 0:
            raise ArrangementError("quadric is singular (not smooth)")
    n = a.rows - 1
    return binary_form_distinct_roots(pencil_determinant(a, b)) == n + 1


def _triple_has_common_point(f, g, h) -> bool:
    """Common projective zero of three plane conics, decided exactly.

    Three forms of degrees (2,2,2) on P^2 have no common zero iff their
    ideal contains every form of degree 4, i.e. the multiplication map
    S_2^3 -> S_4 is surjective (Macaulay bound d1+d2+d3-2 = 4).
    """
    mat = graded_piece_matrix([[f, g, h]], [0], [-2, -2, -2], 4, 3)
    return mat.rank() < dim_forms(3, 4)


def conic_arrangement_normal_crossings(arr: Arrangement) -> bool:
    """Normal crossings for an arrangement of smooth conics on P^2."""
    if arr.ambient_dim != 2 or arr.equal_degree() != 2:
        raise ArrangementError("expected an arrangement of conics on P^2")
    mats = [quadric_matrix(f) for f in arr.hypersurfaces]
    for m in mats:
        if m.det() == 0:
            raise ArrangementError("conic is singular (not smooth)")
    for ma, mb in combinations(mats, 2):
        if not quadric_pair_normal_crossings(ma, mb):
            return False
    for f, g, h in combinations(arr.hypersurfaces, 3):
        if _triple_has_common_point(f, g, h):
            return False
    return True


def veronese_lift(arr: Arrangement) -> HyperplaneArrangement:
    """Degree-d hypersurfaces as hyperplanes on P^N, N = C(n+d,d)-1.

    The lift of f is its coefficient vector in the canonical monomial
    order, so that f(p) = <lift, nu_d(p)> where nu_d lists the monomials
    of p in the same order.
    """
    d = arr.equal_degree()
    if d is None:
        raise ArrangementError("veronese lift needs equal degrees")
    n = arr.ambient_dim
    big_n = comb(n + d, d) - 1
    normals = [tuple(f.coefficient_vector()) for f in arr.hypersurfaces]
    return HyperplaneArrangement(big_n, normals)


def veronese_point(point, n: int, d: int):
    """nu_d(point): the degree-d monomials of the point, canonical order."""
    out = []
    for exp in monomial_basis(n + 1, d):
        v = Fraction(1)
        for x, e in zip(point, exp):
            v *= Fraction(x) ** e
        out.append(v)
    return out
