"""Torelli-type decision procedures.

Three families of questions are answered here, all in exact arithmetic:

* unstable-hypersurface membership and the recovery of an arrangement's
  components from its logarithmic bundle;
* rational-normal-curve fitting and the co-osculation test used as the
  recovery theorem's third hypothesis;
* the full pair-of-quadrics analysis: singular members of the pencil,
  simultaneous diagonalization, dual-pencil comparison, the closed-form
  isomorphism conditions, and an independent witness-searching oracle.

Irrational pencil eigenvalues are never approximated: operations that
need them return or raise the typed NeedsAlgebraicRoots outcome.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import sympy

from .arrangement import (
    Arrangement,
    ArrangementError,
    HyperplaneArrangement,
    hyperplanes_normal_crossings,
    pencil_determinant,
    quadric_matrix,
    quadric_pair_normal_crossings,
    quadric_poly,
    veronese_lift,
)
from .exactpoly import HomogeneousPoly, dim_forms, graded_piece_matrix, monomial_basis
from .linalg import RationalMatrix, vectors_rank
from .logres import GradedMatrix, presentation

DEFAULT_SEED = 1729


class NeedsAlgebraicRoots(Exception):
    """The pencil determinant has irrational roots; exact mode stops here."""

    def __init__(self, factors):
        self.factors = list(factors)
        super().__init__(
            "pencil determinant has irrational roots; irreducible factors: "
            + ", ".join(self.factors)
        )


class FrameError(ArrangementError):
    pass


# ---------------------------------------------------------------------------
# Quadric pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QuadricPair:
    ambient_dim: int
    a: RationalMatrix
    b: RationalMatrix

    def __post_init__(self):
        n = self.ambient_dim
        for m in (self.a, self.b):
            if m.rows != n + 1 or m.cols != n + 1:
                raise ArrangementError("quadric matrix has wrong size")
            if not m.is_symmetric():
                raise ArrangementError("quadric matrix is not symmetric")
            if m.det() == 0:
                raise ArrangementError("quadric is singular (not smooth)")
        stacked = [
            [self.a[i, j] for i in range(n + 1) for j in range(n + 1)],
            [self.b[i, j] for i in range(n + 1) for j in range(n + 1)],
        ]
        if vectors_rank(stacked) < 2:
            raise ArrangementError("the two quadrics are proportional")

    @classmethod
    def from_diagonals(cls, avals, bvals):
        return cls(
            len(avals) - 1,
            RationalMatrix.diagonal(avals),
            RationalMatrix.diagonal(bvals),
        )

    def normal_crossings(self) -> bool:
        return quadric_pair_normal_crossings(self.a, self.b)

    def congruence(self, p: RationalMatrix) -> "QuadricPair":
        pt = p.transpose()
        return QuadricPair(self.ambient_dim, pt @ self.a @ p, pt @ self.b @ p)

    def arrangement(self) -> Arrangement:
        return Arrangement(
            self.ambient_dim, (quadric_poly(self.a), quadric_poly(self.b))
        )

    def to_json(self):
        return {"n": self.ambient_dim, "A": self.a.to_json(), "B": self.b.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(
            data["n"],
            RationalMatrix.from_json(data["A"]),
            RationalMatrix.from_json(data["B"]),
        )


@dataclass(frozen=True)
class PencilAnalysis:
    eigenvalues: tuple  # (Fraction, multiplicity) pairs
    singular_points: tuple  # one rational kernel vector per rational eigenvalue
    normal_crossings: bool
    unresolved_factors: tuple = ()  # irreducible non-linear factor strings

    @property
    def complete(self):
        return not self.unresolved_factors


def _pencil_char_factors(pair: QuadricPair):
    """Factor det(A - lambda B) over Q; returns (rational roots with
    multiplicity, non-linear irreducible factors as sympy Polys)."""
    lam = sympy.Symbol("lam")
    n1 = pair.ambient_dim + 1
    m = sympy.Matrix(
        n1,
        n1,
        lambda i, j: sympy.Rational(pair.a[i, j]) - lam * sympy.Rational(pair.b[i, j]),
    )
    poly = sympy.Poly(m.det(method="berkowitz"), lam)
    _, factors = poly.factor_list()
    roots, hard = [], []
    for fac, mult in factors:
        if fac.degree() == 1:
            c1, c0 = fac.all_coeffs()
            roots.append((Fraction(str(sympy.Rational(-c0, c1))), mult))
        else:
            hard.append((fac, mult))
    roots.sort()
    return roots, hard


def pencil_singular_points(pair: QuadricPair) -> PencilAnalysis:
    """Rational eigenvalues of the pencil and the singular points of the
    corresponding cones; irrational roots are reported, not approximated."""
    roots, hard = _pencil_char_factors(pair)
    points = []
    for lam, _ in roots:
        m = pair.a - pair.b.scale(lam)
        kern = m.kernel()
        if not kern:
            raise ArrangementError("eigenvalue with trivial kernel (bug)")
        points.append(tuple(kern[0]))
    return PencilAnalysis(
        eigenvalues=tuple(roots),
        singular_points=tuple(points),
        normal_crossings=pair.normal_crossings(),
        unresolved_factors=tuple(str(f.as_expr()) for f, _ in hard),
    )


def simultaneous_diagonal_frame(pair: QuadricPair) -> RationalMatrix:
    """Invertible P with P^T A P and P^T B P both diagonal.

    Requires normal crossings and all pencil roots rational; the columns
    are the singular points of the pencil.  Quadric equations are only
    defined up to scale, so the last-entry normalization to -1 is applied
    to the equations (see diagonal_normal_form), not by congruence.
    """
    analysis = pencil_singular_points(pair)
    if not analysis.complete:
        raise NeedsAlgebraicRoots(analysis.unresolved_factors)
    if not analysis.normal_crossings:
        raise FrameError("pencil is degenerate: no simultaneous diagonal frame")
    p = RationalMatrix.from_columns([list(v) for v in analysis.singular_points])
    transformed = pair.congruence(p)
    if not (transformed.a.is_diagonal() and transformed.b.is_diagonal()):
        raise FrameError("frame did not diagonalize the pair (bug)")
    return p


def diagonal_normal_form(pair: QuadricPair):
    """(a, b, P): diagonal coefficient lists with last entries -1.

    P is the simultaneous frame; the defining equations are rescaled so
    that both quadrics end in -1, which is projectively harmless.
    """
    p = simultaneous_diagonal_frame(pair)
    t = pair.congruence(p)
    n = pair.ambient_dim
    alpha = [t.a[i, i] for i in range(n + 1)]
    beta = [t.b[i, i] for i in range(n + 1)]
    if alpha[n] == 0 or beta[n] == 0:
        raise FrameError("degenerate frame: zero diagonal entry")
    a = [-x / alpha[n] for x in alpha]
    b = [-x / beta[n] for x in beta]
    return a[:n], b[:n], p


def dual_pencil_equal(pair1: QuadricPair, pair2: QuadricPair) -> bool:
    """Equality of the pencils spanned by the dual (inverse) matrices."""
    if pair1.ambient_dim != pair2.ambient_dim:
        raise ArrangementError("ambient dimension mismatch")
    n1 = pair1.ambient_dim + 1
    vecs = []
    for m in (pair1.a, pair1.b, pair2.a, pair2.b):
        inv = m.inverse()
        vecs.append([inv[i, j] for i in range(n1) for j in range(n1)])
    return vectors_rank(vecs) == 2


# ---------------------------------------------------------------------------
# Closed-form isomorphism conditions for two pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsoConditionsReport:
    verdict: str  # "isomorphic" | "not-isomorphic" | "open-condition-degenerate"
    residuals: dict
    open_conditions: dict
    t_parameters: tuple
    predicted_duals: tuple  # predicted diagonal matrices for the second pair
    frame_coefficients: dict


def _predicted_dual_member(avals, bvals, t):
    """Diagonal quadric (A^{-1} + t B^{-1})^{-1}-style member of the dual
    pencil, in the normalized coordinates diag(..., -1).  t may be None,
    meaning the parameter at infinity (the member B itself)."""
    if t is None:
        return RationalMatrix.diagonal(list(bvals) + [Fraction(-1)])
    entries = []
    for ak, bk in zip(avals, bvals):
        denom = bk + t * ak
        if denom == 0:
            return None
        entries.append(ak * bk * (1 + t) / denom)
    entries.append(Fraction(-1))
    return RationalMatrix.diagonal(entries)


def _t_parameter(a0, b0, x0):
    """b_0(a_0 - x_0) / (a_0(x_0 - b_0)); None encodes infinity."""
    num = b0 * (a0 - x0)
    den = a0 * (x0 - b0)
    if den == 0:
        if num == 0:
            raise FrameError("t-parameter is indeterminate")
        return None
    return num / den


def quadric_pair_iso_conditions(pair1: QuadricPair, pair2: QuadricPair) -> IsoConditionsReport:
    """Evaluate the diagonal-frame isomorphism conditions for two pairs.

    The first pair is put in its simultaneous diagonal frame; the second
    must be diagonal in the same frame (otherwise the pencils differ and
    the construction refuses).  All residual and open-condition
    expressions are evaluated exactly.
    """
    n = pair1.ambient_dim
    if n != pair2.ambient_dim:
        raise ArrangementError("ambient dimension mismatch")
    a, b, p = diagonal_normal_form(pair1)
    c_t = pair2.congruence(p)
    if not (c_t.a.is_diagonal() and c_t.b.is_diagonal()):
        raise FrameError(
            "second pair is not diagonal in the frame of the first pencil"
        )
    if c_t.a[n, n] == 0 or c_t.b[n, n] == 0:
        raise FrameError("degenerate frame: zero diagonal entry")
    c = [-c_t.a[i, i] / c_t.a[n, n] for i in range(n)]
    d = [-c_t.b[i, i] / c_t.b[n, n] for i in range(n)]

    residuals = {}
    # resolubility chain linking every coordinate to the i = 2 slot
    for i in range(1, n + 1):
        residuals[f"resolubility_{i}"] = (
            a[1] * a[i - 1] * (c[1] * d[i - 1] - c[i - 1] * d[1])
            + a[1] * c[i - 1] * d[i - 1] * (d[1] - c[1])
            + a[i - 1] * c[1] * d[1] * (c[i - 1] - d[i - 1])
        )
    residuals["pencil_membership"] = (
        a[1] * b[1] * (b[0] - a[0]) * (c[0] * d[1] - c[1] * d[0])
        + c[1] * d[1] * (c[0] - d[0]) * (a[0] * b[1] - a[1] * b[0])
    )
    for i in range(1, n + 1):
        residuals[f"cross_{i}"] = (
            a[1] * a[i - 1] * b[0] * (c[0] - d[0]) * (c[i - 1] * d[1] - c[1] * d[i - 1])
            + a[1] * b[0] * b[i - 1] * (d[1] - c[1]) * (c[i - 1] * d[0] - c[0] * d[i - 1])
            + a[0] * a[1] * b[i - 1] * (c[i - 1] - d[i - 1]) * (c[1] * d[0] - c[0] * d[1])
            + c[1] * d[1] * (c[i - 1] - d[i - 1]) * (c[0] - d[0]) * (a[0] * b[i - 1] - a[i - 1] * b[0])
        )

    open_conditions = {
        "mprime_invertible": a[1] * (c[1] * d[0] - c[0] * d[1])
        + c[1] * d[1] * (c[0] - d[0])
    }
    for i in range(2, n + 1):
        open_conditions[f"mdoubleprime_{i}"] = (
            c[1] * (a[i - 1] * b[0] - a[0] * b[i - 1]) * (d[1] * (d[0] - c[0]) - a[1] * d[0])
            + a[1] * c[0] * (
                b[0] * c[1] * (a[i - 1] - b[i - 1])
                + b[i - 1] * d[1] * (b[0] - a[0])
            )
        )

    t1 = _t_parameter(a[0], b[0], c[0])
    t2 = _t_parameter(a[0], b[0], d[0])
    predicted = tuple(
        m for m in (_predicted_dual_member(a, b, t1), _predicted_dual_member(a, b, t2))
    )

    all_zero = all(v == 0 for v in residuals.values())
    all_open = all(v != 0 for v in open_conditions.values())
    if all_zero and all_open:
        verdict = "isomorphic"
    elif all_zero:
        verdict = "open-condition-degenerate"
    else:
        verdict = "not-isomorphic"
    return IsoConditionsReport(
        verdict=verdict,
        residuals=residuals,
        open_conditions=open_conditions,
        t_parameters=(t1, t2),
        predicted_duals=predicted,
        frame_coefficients={"a": a, "b": b, "c": c, "d": d},
    )


# ---------------------------------------------------------------------------
# Witness oracle
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class IsoWitness:
    mprime: RationalMatrix  # 2 x 2 scalars
    mdoubleprime: GradedMatrix  # (n+2) x (n+2): scalar block, linear forms, theta

    def verify(self, n1: GradedMatrix, n2: GradedMatrix) -> bool:
        nv = n1.num_vars
        scalar_entries = [
            [HomogeneousPoly.constant(nv, self.mprime[i, j]) for j in range(2)]
            for i in range(2)
        ]
        mp = GradedMatrix([2, 2], [2, 2], scalar_entries, nv)
        lhs = mp.compose(n1)
        rhs = n2.compose(self.mdoubleprime)
        same = all(
            lhs.entries[i][j] == rhs.entries[i][j]
            for i in range(2)
            for j in range(len(lhs.col_twists))
        )
        det2 = self.mprime.det()
        e_block = RationalMatrix(
            [
                [self.mdoubleprime.entries[i][j].terms.get((0,) * nv, Fraction(0))
                 for j in range(nv)]
                for i in range(nv)
            ]
        )
        theta = self.mdoubleprime.entries[nv][nv].terms.get((0,) * nv, Fraction(0))
        return same and det2 != 0 and e_block.det() * theta != 0


def _quadric_pair_arrangement(arr: Arrangement):
    if len(arr) != 2 or arr.equal_degree() != 2:
        raise ArrangementError("expected an arrangement of two quadrics")


def _witness_system(n1: GradedMatrix, n2: GradedMatrix, nv: int):
    """Linear system for M' N1 = N2 M'' in the scalar unknowns.

    Unknown layout: [alpha, beta, gamma, delta] + E (row major, nv x nv)
    + f coefficients (nv linear forms, nv coefficients each) + [theta].
    """
    n_unknowns = 4 + nv * nv + nv * nv + 1

    def e_index(k, c):
        return 4 + k * nv + c

    def f_index(k, coeff):
        return 4 + nv * nv + k * nv + coeff

    theta_index = n_unknowns - 1
    rows = []
    lin_basis = monomial_basis(nv, 1)
    quad_basis = monomial_basis(nv, 2)
    for r in range(2):
        # columns 0..nv-1: entries are linear forms
        for cidx in range(nv):
            coeffs = {}
            for mono in lin_basis:
                coeffs[mono] = [Fraction(0)] * n_unknowns
            for k, mp_idx in ((0, 2 * r), (1, 2 * r + 1)):
                for mono, val in n1.entries[k][cidx].terms.items():
                    coeffs[mono][mp_idx] += val
            for k in range(nv):
                for mono, val in n2.entries[r][k].terms.items():
                    coeffs[mono][e_index(k, cidx)] -= val
            rows.extend(coeffs[m] for m in lin_basis)
        # last column: entries are quadrics
        coeffs = {mono: [Fraction(0)] * n_unknowns for mono in quad_basis}
        for k, mp_idx in ((0, 2 * r), (1, 2 * r + 1)):
            for mono, val in n1.entries[k][nv].terms.items():
                coeffs[mono][mp_idx] += val
        for k in range(nv):
            lin = n2.entries[r][k]
            for mono, val in lin.terms.items():
                for j in range(nv):
                    target = list(mono)
                    target[j] += 1
                    coeffs[tuple(target)][f_index(k, j)] -= val
        quad = n2.entries[r][nv]
        for mono, val in quad.terms.items():
            coeffs[mono][theta_index] -= val
        rows.extend(coeffs[m] for m in quad_basis)
    return RationalMatrix(rows), e_index, f_index, theta_index


def _witness_from_vector(vec, nv, e_index, f_index, theta_index):
    mprime = RationalMatrix([[vec[0], vec[1]], [vec[2], vec[3]]])
    entries = []
    for i in range(nv):
        row = [
            HomogeneousPoly.constant(nv, vec[e_index(i, j)]) for j in range(nv)
        ]
        lin_terms = {}
        for j in range(nv):
            coeff = vec[f_index(i, j)]
            if coeff:
                exp = [0] * nv
                exp[j] = 1
                lin_terms[tuple(exp)] = coeff
        row.append(HomogeneousPoly(nv, 1, lin_terms))
        entries.append(row)
    last = [HomogeneousPoly.zero(nv, 0)] * nv + [
        HomogeneousPoly.constant(nv, vec[theta_index])
    ]
    entries.append(last)
    mdp = GradedMatrix([1] * nv + [0], [1] * nv + [0], entries, nv)
    return IsoWitness(mprime, mdp)


def _vector_dets(vec, nv, e_index, theta_index):
    mprime = RationalMatrix([[vec[0], vec[1]], [vec[2], vec[3]]])
    e_block = RationalMatrix(
        [[vec[e_index(i, j)] for j in range(nv)] for i in range(nv)]
    )
    return mprime.det(), e_block.det() * vec[theta_index]


def iso_witness_oracle(arr1: Arrangement, arr2: Arrangement, seed=DEFAULT_SEED):
    """Search for an exact isomorphism witness between the presentations.

    Solves M' N1 = N2 M'' as a linear system, then looks for a point of
    the solution space where both matrices are invertible: deterministic
    random specializations first, then a symbolic determinant test that
    decides non-emptiness of the open condition.
    """
    _quadric_pair_arrangement(arr1)
    _quadric_pair_arrangement(arr2)
    nv = arr1.ambient_dim + 1
    n1, n2 = presentation(arr1), presentation(arr2)
    system, e_index, f_index, theta_index = _witness_system(n1, n2, nv)
    kernel = system.kernel()
    if not kernel:
        return None
    rng = random.Random(seed)
    k = len(kernel)

    def specialize(weights):
        return [
            sum((w * kv[i] for w, kv in zip(weights, kernel)), Fraction(0))
            for i in range(system.cols)
        ]

    for attempt in range(32):
        if attempt == 0 and k == 1:
            weights = [Fraction(1)]
        else:
            weights = [Fraction(rng.randint(-9, 9)) for _ in range(k)]
        vec = specialize(weights)
        d1, d2 = _vector_dets(vec, nv, e_index, theta_index)
        if d1 != 0 and d2 != 0:
            witness = _witness_from_vector(vec, nv, e_index, f_index, theta_index)
            if not witness.verify(n1, n2):
                raise ArrangementError("witness verification failed (bug)")
            return witness

    # symbolic fallback: the determinant product is a polynomial on the
    # solution space; it vanishes identically iff no witness exists
    params = sympy.symbols(f"u0:{k}")
    sym_vec = [
        sum(params[j] * sympy.Rational(kernel[j][i]) for j in range(k))
        for i in range(system.cols)
    ]
    mprime = sympy.Matrix([[sym_vec[0], sym_vec[1]], [sym_vec[2], sym_vec[3]]])
    e_block = sympy.Matrix(nv, nv, lambda i, j: sym_vec[e_index(i, j)])
    product = sympy.expand(
        mprime.det() * e_block.det(method="berkowitz") * sym_vec[theta_index]
    )
    if product == 0:
        return None
    # the polynomial is nonzero, so a specialization avoiding its zero set
    # exists; widen the sampling range until one is found
    for attempt in range(1000):
        weights = [Fraction(rng.randint(-20 - attempt, 20 + attempt)) for _ in range(k)]
        vec = specialize(weights)
        d1, d2 = _vector_dets(vec, nv, e_index, theta_index)
        if d1 != 0 and d2 != 0:
            witness = _witness_from_vector(vec, nv, e_index, f_index, theta_index)
            if not witness.verify(n1, n2):
                raise ArrangementError("witness verification failed (bug)")
            return witness
    raise ArrangementError("failed to specialize a nonzero determinant (bug)")


# ---------------------------------------------------------------------------
# Unstable hypersurfaces
# ---------------------------------------------------------------------------


def unstable_dim(arr: Arrangement, candidate: HomogeneousPoly) -> int:
    """dim H^0(D', restriction of the dual bundle to D').

    Computed as the kernel dimension of the section-level presentation
    map with every row reduced modulo the candidate's equation.  The
    candidate is assumed smooth and, for degree >= 2, irreducible.
    """
    d = arr.equal_degree()
    if d is None:
        raise ArrangementError("unstable-dimension test needs equal degrees")
    n = arr.ambient_dim
    nv = n + 1
    ell = len(arr)
    if ell * d <= n + 1:
        raise ArrangementError(
            "instability is meaningful only when l > (n+1)/d"
        )
    dprime = candidate.degree
    if dprime <= 0:
        raise ArrangementError("candidate degree must be positive")
    if candidate.num_vars != nv:
        raise ArrangementError("candidate has wrong variable count")

    pres = presentation(arr)
    main = pres.section_matrix(0)  # S_1^{n+1} (+) Q^{l-1} -> (+) S_{d_i}
    # columns spanning f_{D'} * S_{d_i - d'} inside each target block
    reducer = graded_piece_matrix(
        [
            [
                candidate if i == j else HomogeneousPoly.zero(nv, dprime)
                for j in range(ell)
            ]
            for i in range(ell)
        ],
        [f.degree for f in arr.hypersurfaces],
        [f.degree - dprime for f in arr.hypersurfaces],
        0,
        nv,
    )
    augmented = main.hstack(reducer)
    quotient_rank_defect = reducer.nullity()
    # directions of the domain that are themselves multiples of the
    # candidate (only relevant for d' = 1)
    domain_defect = nv * dim_forms(nv, 1 - dprime)
    return augmented.nullity() - quotient_rank_defect - domain_defect


@dataclass
class RecoveryReport:
    members: list
    member_indices: list
    hypotheses: dict
    warnings: list = field(default_factory=list)
    candidate_dims: list = field(default_factory=list)


def recover_components(arr: Arrangement, candidates) -> RecoveryReport:
    """Select the candidates that are unstable for the arrangement.

    The recovery theorem's hypotheses (enough components, normal
    crossings of the lifted hyperplanes, dual points off a common
    rational normal curve) are checked and reported; failures only warn,
    because membership of actual components holds unconditionally.
    """
    d = arr.equal_degree()
    if d is None:
        raise ArrangementError("recovery needs equal degrees")
    n = arr.ambient_dim
    hypotheses = {}
    warnings = []

    lift = veronese_lift(arr)
    big_n = lift.ambient_dim
    hypotheses["enough_components"] = len(arr) >= big_n + 4
    hypotheses["lift_normal_crossings"] = hyperplanes_normal_crossings(lift)
    if n == 2 and d == 2:
        from .arrangement import conic_arrangement_normal_crossings

        hypotheses["normal_crossings"] = conic_arrangement_normal_crossings(arr)
    else:
        hypotheses["normal_crossings"] = None
        warnings.append(
            "normal crossings not verified for this degree/dimension"
        )
    if len(arr) >= big_n + 3:
        try:
            hypotheses["dual_points_off_rnc"] = not on_common_rnc(
                [list(v) for v in lift.normals]
            )
        except ArrangementError as exc:
            hypotheses["dual_points_off_rnc"] = True
            warnings.append(f"rnc fit degenerate ({exc}); points cannot co-osculate")
    else:
        hypotheses["dual_points_off_rnc"] = None
    for key, value in hypotheses.items():
        if value is False:
            warnings.append(f"recovery hypothesis failed: {key}")

    members, indices, dims = [], [], []
    for idx, cand in enumerate(candidates):
        dim = unstable_dim(arr, cand)
        dims.append(dim)
        if dim > 0:
            members.append(cand)
            indices.append(idx)
    return RecoveryReport(
        members=members,
        member_indices=indices,
        hypotheses=hypotheses,
        warnings=warnings,
        candidate_dims=dims,
    )


# ---------------------------------------------------------------------------
# Rational normal curves
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RNC:
    """A rational normal curve through a standard frame.

    In frame coordinates the curve is t -> [1/(t-a_0) : ... : 1/(t-a_N)];
    it passes through the coordinate points (at t = a_i), the unit point
    (at t = infinity), and the fitted extra point (at t = 0).
    """

    frame_transform: RationalMatrix
    parameters: tuple

    def contains_frame_point(self, u) -> bool:
        nonzero = [i for i, x in enumerate(u) if x != 0]
        if len(nonzero) == 1:
            return True  # a coordinate point, reached at t = a_i
        if len(nonzero) < len(u):
            return False
        if len(set(u[i] / u[0] for i in range(len(u)))) == 1:
            return True  # the unit point, reached at t = infinity
        a = self.parameters
        pair = next(
            (i, j)
            for i in range(len(u))
            for j in range(i + 1, len(u))
            if u[i] != u[j]
        )
        i, j = pair
        t = (u[i] * a[i] - u[j] * a[j]) / (u[i] - u[j])
        ref = u[i] * (t - a[i])
        return all(u[k] * (t - a[k]) == ref for k in range(len(u)))

    def contains(self, point) -> bool:
        u = self.frame_transform @ [Fraction(x) for x in point]
        return self.contains_frame_point(u)


def _standard_frame_transform(points):
    """T sending the first N+2 points to e_0..e_N and the unit point."""
    big_n = len(points[0]) - 1
    base = RationalMatrix.from_columns(
        [[Fraction(x) for x in p] for p in points[: big_n + 1]]
    )
    if base.det() == 0:
        raise ArrangementError("first N+1 points are not in general position")
    inv = base.inverse()
    w = inv @ [Fraction(x) for x in points[big_n + 1]]
    if any(x == 0 for x in w):
        raise ArrangementError("first N+2 points are not in general position")
    scale = RationalMatrix.diagonal([1 / x for x in w])
    return scale @ inv


def rnc_fit(points):
    """The unique rational normal curve through the first N+3 points,
    or None when no such curve exists."""
    if not points:
        raise ArrangementError("no points given")
    big_n = len(points[0]) - 1
    if len(points) < big_n + 3:
        raise ArrangementError("need at least N+3 points to pin down the curve")
    t = _standard_frame_transform(points)
    q = t @ [Fraction(x) for x in points[big_n + 2]]
    if any(x == 0 for x in q):
        return None
    q = [x / q[0] for x in q]  # canonical representative with q_0 = 1
    params = tuple(-1 / x for x in q)
    if len(set(params)) != len(params):
        return None
    return RNC(frame_transform=t, parameters=params)


def on_common_rnc(points) -> bool:
    """True iff all points lie on the curve through the first N+3."""
    big_n = len(points[0]) - 1
    curve = rnc_fit(points)
    if curve is None:
        return False
    return all(curve.contains(p) for p in points[big_n + 3 :])
