"""Exact rational multivariate homogeneous polynomials and binary forms.

All coefficients are ``fractions.Fraction``; nothing in this module ever
touches floating point.  The monomial order is graded lexicographic with
x0 > x1 > ... > xn, which for a fixed degree is plain lexicographic
descending order on exponent tuples.  Every serialized object uses this
order, so output is bit-reproducible.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import comb


@lru_cache(maxsize=None)
def monomial_basis(num_vars: int, degree: int) -> tuple[tuple[int, ...], ...]:
    """All exponent vectors of the given total degree, grlex-descending."""
    if num_vars < 1:
        raise ValueError("need at least one variable")
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if num_vars == 1:
        return ((degree,),)
    out = []
    for e0 in range(degree, -1, -1):
        for rest in monomial_basis(num_vars - 1, degree - e0):
            out.append((e0,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(num_vars: int, degree: int) -> dict:
    return {m: i for i, m in enumerate(monomial_basis(num_vars, degree))}


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


class HomogeneousPoly:
    """A homogeneous polynomial with Fraction coefficients.

    The zero polynomial carries an explicit declared degree so that degree
    bookkeeping (graded matrices, twist checks) stays decidable.
    """

    __slots__ = ("num_vars", "degree", "terms")

    def __init__(self, num_vars, degree, terms=None):
        self.num_vars = num_vars
        self.degree = degree
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            c = _as_fraction(c)
            if len(exp) != num_vars:
                raise ValueError(f"exponent vector {exp} has wrong length")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            if sum(exp) != degree:
                raise ValueError(f"term {exp} is not of degree {degree}")
            if c != 0:
                clean[exp] = c
        self.terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, num_vars, degree):
        return cls(num_vars, degree, {})

    @classmethod
    def constant(cls, num_vars, value):
        value = _as_fraction(value)
        return cls(num_vars, 0, {(0,) * num_vars: value})

    @classmethod
    def variable(cls, num_vars, j):
        exp = [0] * num_vars
        exp[j] = 1
        return cls(num_vars, 1, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(exp)
        return cls(len(exp), sum(exp), {exp: _as_fraction(coeff)})

    # -- predicates ---------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        return self.num_vars == other.num_vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.num_vars, tuple(sorted(self.terms.items()))))

    def proportional_to(self, other) -> bool:
        """True iff self = c * other for some nonzero rational c."""
        if self.num_vars != other.num_vars:
            return False
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if self.degree != other.degree or set(self.terms) != set(other.terms):
            return False
        exp = next(iter(self.terms))
        ratio = self.terms[exp] / other.terms[exp]
        return all(c == ratio * other.terms[e] for e, c in self.terms.items())

    # -- arithmetic ---------------------------------------------------

    def _check_compatible(self, other):
        if self.num_vars != other.num_vars:
            raise ValueError("variable-count mismatch")
        if not self.is_zero() and not other.is_zero() and self.degree != other.degree:
            raise ValueError("cannot add forms of different degree")

    def __add__(self, other):
        self._check_compatible(other)
        degree = other.degree if self.is_zero() else self.degree
        terms = dict(self.terms)
        for exp, c in other.terms.items():
            terms[exp] = terms.get(exp, Fraction(0)) + c
        return HomogeneousPoly(self.num_vars, degree, terms)

    def __neg__(self):
        return HomogeneousPoly(
            self.num_vars, self.degree, {e: -c for e, c in self.terms.items()}
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _as_fraction(other)
            return HomogeneousPoly(
                self.num_vars, self.degree, {e: c * v for e, v in self.terms.items()}
            )
        if not isinstance(other, HomogeneousPoly):
            return NotImplemented
        if self.num_vars != other.num_vars:
            raise ValueError("variable-count mismatch")
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, Fraction(0)) + c1 * c2
        return HomogeneousPoly(self.num_vars, self.degree + other.degree, terms)

    __rmul__ = __mul__

    def partial(self, j):
        """Partial derivative with respect to variable j."""
        if self.degree == 0:
            return HomogeneousPoly.zero(self.num_vars, 0)
        terms = {}
        for exp, c in self.terms.items():
            if exp[j] == 0:
                continue
            e = list(exp)
            e[j] -= 1
            terms[tuple(e)] = c * exp[j]
        return HomogeneousPoly(self.num_vars, self.degree - 1, terms)

    def evaluate(self, point):
        point = [_as_fraction(x) for x in point]
        if len(point) != self.num_vars:
            raise ValueError("point has wrong dimension")
        total = Fraction(0)
        for exp, c in self.terms.items():
            v = c
            for x, e in zip(point, exp):
                v *= x**e
            total += v
        return total

    def compose_linear(self, columns):
        """Substitute x_j -> sum_k columns[j][k] * y_k.

        ``columns`` has one row per original variable; the number of new
        variables is the common row length.  Used for coordinate changes
        and for restricting to a parametrized line.
        """
        new_vars = len(columns[0])
        images = [
            HomogeneousPoly(
                new_vars,
                1,
                {
                    tuple(1 if k == j else 0 for k in range(new_vars)): _as_fraction(c)
                    for j, c in enumerate(row)
                },
            )
            for row in columns
        ]
        result = HomogeneousPoly.zero(new_vars, self.degree)
        for exp, c in self.terms.items():
            term = HomogeneousPoly.constant(new_vars, c)
            for j, e in enumerate(exp):
                for _ in range(e):
                    term = term * images[j]
            if term.degree != self.degree:
                term = HomogeneousPoly(new_vars, self.degree, term.terms)
            result = result + term
        return result

    def coefficient_vector(self):
        """Coefficients in the canonical monomial order of self.degree."""
        basis = monomial_basis(self.num_vars, self.degree)
        return [self.terms.get(m, Fraction(0)) for m in basis]

    # -- text / JSON form ---------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        parts = []
        for exp in monomial_basis(self.num_vars, self.degree):
            if exp not in self.terms:
                continue
            c = self.terms[exp]
            factors = [str(c)]
            for j, e in enumerate(exp):
                if e == 1:
                    factors.append(f"x{j}")
                elif e > 1:
                    factors.append(f"x{j}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__

    @classmethod
    def parse(cls, text, num_vars, degree=None):
        """Parse the canonical text form (also accepts '-' between terms)."""
        text = text.strip()
        if text in ("0", ""):
            if degree is None:
                raise ValueError("zero polynomial needs an explicit degree")
            return cls.zero(num_vars, degree)
        text = text.replace("- ", "+ -").replace(" -", " + -")
        terms = {}
        deg_seen = None
        for chunk in text.split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            exp = [0] * num_vars
            coeff = Fraction(1)
            saw_coeff = False
            if chunk.startswith("-"):
                coeff = -coeff
                chunk = chunk[1:].strip()
            for factor in chunk.split("*"):
                factor = factor.strip()
                m = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
                if m:
                    j, e = int(m.group(1)), int(m.group(2) or 1)
                    if j >= num_vars:
                        raise ValueError(f"variable x{j} out of range")
                    exp[j] += e
                else:
                    coeff *= Fraction(factor)
                    saw_coeff = True
            del saw_coeff
            d = sum(exp)
            if deg_seen is None:
                deg_seen = d
            elif deg_seen != d:
                raise ValueError("terms of different degrees")
            key = tuple(exp)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        if degree is not None and deg_seen != degree:
            raise ValueError(f"parsed degree {deg_seen} != declared {degree}")
        return cls(num_vars, deg_seen, terms)

    def to_json(self):
        return {
            "degree": self.degree,
            "terms": [
                {"exp": list(exp), "coeff": str(self.terms[exp])}
                for exp in monomial_basis(self.num_vars, self.degree)
                if exp in self.terms
            ],
        }

    @classmethod
    def from_json(cls, data, num_vars):
        terms = {
            tuple(t["exp"]): Fraction(t["coeff"]) for t in data.get("terms", [])
        }
        return cls(num_vars, data["degree"], terms)


def grad(f: HomogeneousPoly):
    """The tuple of partial derivatives (one per variable)."""
    return [f.partial(j) for j in range(f.num_vars)]


def euler_contract(f: HomogeneousPoly) -> HomogeneousPoly:
    """sum_j x_j * df/dx_j; equals deg(f) * f by the Euler identity."""
    result = HomogeneousPoly.zero(f.num_vars, f.degree)
    for j in range(f.num_vars):
        result = result + HomogeneousPoly.variable(f.num_vars, j) * f.partial(j)
    return result


def dim_forms(num_vars: int, degree: int) -> int:
    """Dimension of the space of forms of the given degree (0 if negative)."""
    if degree < 0:
        return 0
    return comb(num_vars - 1 + degree, degree)


# ---------------------------------------------------------------------------
# Binary forms
# ---------------------------------------------------------------------------


class BinaryForm:
    """A binary form of declared degree; coefficients indexed by the power
    of the first variable s (so coeffs[k] multiplies s^k t^(degree-k))."""

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree, coeffs):
        coeffs = [_as_fraction(c) for c in coeffs]
        if len(coeffs) != degree + 1:
            raise ValueError("coefficient list must have length degree+1")
        self.degree = degree
        self.coeffs = coeffs

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def __eq__(self, other):
        return (
            isinstance(other, BinaryForm)
            and self.degree == other.degree
            and self.coeffs == other.coeffs
        )

    def __mul__(self, other):
        out = [Fraction(0)] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return BinaryForm(self.degree + other.degree, out)

    def evaluate(self, s, t):
        s, t = _as_fraction(s), _as_fraction(t)
        return sum(
            c * s**k * t ** (self.degree - k) for k, c in enumerate(self.coeffs)
        )

    def __repr__(self):
        return f"BinaryForm({self.degree}, {[str(c) for c in self.coeffs]})"


def _poly_degree(p):
    for i in range(len(p) - 1, -1, -1):
        if p[i] != 0:
            return i
    return -1


def _poly_mod(a, b):
    # remainder of dense coefficient lists (ascending), b nonzero
    a = list(a)
    db, lb = _poly_degree(b), b[_poly_degree(b)]
    while _poly_degree(a) >= db:
        da = _poly_degree(a)
        q = a[da] / lb
        for i in range(db + 1):
            a[da - db + i] -= q * b[i]
    return a


def _poly_gcd(a, b):
    a, b = list(a), list(b)
    while _poly_degree(b) >= 0:
        a, b = b, _poly_mod(a, b)
    return a


def _poly_derivative(a):
    return [i * c for i, c in enumerate(a)][1:] or [Fraction(0)]


def binary_form_distinct_roots(form: BinaryForm) -> int:
    """Number of distinct projective roots of a nonzero binary form.

    Computed over Q via gcd with the derivative (squarefree count); a drop
    in the dehomogenized degree contributes the root at infinity.
    """
    if form.is_zero():
        raise ValueError("zero form has no well-defined root count")
    p = list(form.coeffs)  # p(s) = F(s, 1), ascending in s
    dp = _poly_degree(p)
    count = 0
    if dp < form.degree:
        count += 1  # root [1:0] at infinity
    if dp > 0:
        g = _poly_gcd(p, _poly_derivative(p))
        count += dp - _poly_degree(g)
    return count


def binary_resultant(f: BinaryForm, g: BinaryForm):
    """Sylvester resultant of two binary forms (exact)."""
    from .linalg import RationalMatrix

    m, n = f.degree, g.degree
    size = m + n
    if size == 0:
        return Fraction(1)
    rows = []
    # descending coefficient lists
    fc = list(reversed(f.coeffs))
    gc = list(reversed(g.coeffs))
    for i in range(n):
        rows.append([Fraction(0)] * i + fc + [Fraction(0)] * (n - 1 - i))
    for i in range(m):
        rows.append([Fraction(0)] * i + gc + [Fraction(0)] * (m - 1 - i))
    return RationalMatrix(rows).det()


# ---------------------------------------------------------------------------
# Graded pieces of maps between sums of line bundles
# ---------------------------------------------------------------------------


def graded_piece_matrix(entries, row_twists, col_twists, twist, num_vars):
    """Matrix of a polynomial matrix acting on graded pieces.

    ``entries[i][j]`` is a HomogeneousPoly of degree
    ``row_twists[i] - col_twists[j]`` (zero entries allowed); the result is
    the matrix of the induced linear map

        (+)_j S_{col_twists[j] + twist}  ->  (+)_i S_{row_twists[i] + twist}

    in the canonical monomial-basis coordinates.  Blocks with negative
    degree are zero-dimensional.
    """
    from .linalg import RationalMatrix

    for i, row in enumerate(entries):
        for j, p in enumerate(row):
            if p.is_zero():
                continue
            if p.degree != row_twists[i] - col_twists[j]:
                raise ValueError(
                    f"entry ({i},{j}) has degree {p.degree}, "
                    f"expected {row_twists[i] - col_twists[j]}"
                )
    src_degs = [c + twist for c in col_twists]
    tgt_degs = [r + twist for r in row_twists]
    src_bases = [monomial_basis(num_vars, d) if d >= 0 else () for d in src_degs]
    tgt_bases = [monomial_basis(num_vars, d) if d >= 0 else () for d in tgt_degs]
    tgt_offsets = []
    off = 0
    for b in tgt_bases:
        tgt_offsets.append(off)
        off += len(b)
    n_rows = off
    n_cols = sum(len(b) for b in src_bases)
    out = [[Fraction(0)] * n_cols for _ in range(n_rows)]
    col = 0
    for j, sbasis in enumerate(src_bases):
        for mono in sbasis:
            for i, row in enumerate(entries):
                p = row[j]
                if p.is_zero() or not tgt_bases[i]:
                    continue
                index = monomial_index(num_vars, tgt_degs[i])
                base = tgt_offsets[i]
                for exp, c in p.terms.items():
                    target = tuple(a + b for a, b in zip(exp, mono))
                    out[base + index[target]][col] += c
            col += 1
    return RationalMatrix(out) if n_rows or n_cols else RationalMatrix([[]])
