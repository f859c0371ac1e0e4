"""Dense exact linear algebra over the rationals.

Gaussian elimination on ``fractions.Fraction`` entries: no pivoting
heuristics beyond "first nonzero", no floating point, results are exact.
Matrices are immutable by convention (operations return new objects).
"""

from __future__ import annotations

from fractions import Fraction

from .exactpoly import _as_fraction


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [[_as_fraction(x) for x in row] for row in entries]
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        if any(len(r) != self.cols for r in entries):
            raise ValueError("ragged rows")
        self.entries = entries

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, rows, cols):
        return cls([[Fraction(0)] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(1 if i == j else 0) for j in range(n)] for i in range(n)])

    @classmethod
    def diagonal(cls, values):
        values = [_as_fraction(v) for v in values]
        n = len(values)
        return cls(
            [[values[i] if i == j else Fraction(0) for j in range(n)] for i in range(n)]
        )

    @classmethod
    def from_columns(cls, columns):
        return cls([[col[i] for col in columns] for i in range(len(columns[0]))])

    # -- basics -------------------------------------------------------

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other):
        return (
            isinstance(other, RationalMatrix)
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"RationalMatrix({self.entries!r})"

    def copy_entries(self):
        return [row[:] for row in self.entries]

    def transpose(self):
        return RationalMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)]
        )

    def column(self, j):
        return [self.entries[i][j] for i in range(self.rows)]

    def is_symmetric(self):
        return self.rows == self.cols and all(
            self.entries[i][j] == self.entries[j][i]
            for i in range(self.rows)
            for j in range(i)
        )

    def is_diagonal(self):
        return all(
            self.entries[i][j] == 0
            for i in range(self.rows)
            for j in range(self.cols)
            if i != j
        )

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return RationalMatrix(
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ]
        )

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = _as_fraction(c)
        return RationalMatrix([[c * x for x in row] for row in self.entries])

    def __matmul__(self, other):
        if isinstance(other, RationalMatrix):
            if self.cols != other.rows:
                raise ValueError("shape mismatch")
            return RationalMatrix(
                [
                    [
                        sum(
                            (self.entries[i][k] * other.entries[k][j] for k in range(self.cols)),
                            Fraction(0),
                        )
                        for j in range(other.cols)
                    ]
                    for i in range(self.rows)
                ]
            )
        # vector
        vec = [_as_fraction(x) for x in other]
        if self.cols != len(vec):
            raise ValueError("shape mismatch")
        return [
            sum((self.entries[i][k] * vec[k] for k in range(self.cols)), Fraction(0))
            for i in range(self.rows)
        ]

    def hstack(self, other):
        if self.rows != other.rows:
            raise ValueError("row-count mismatch")
        return RationalMatrix(
            [r1 + r2 for r1, r2 in zip(self.entries, other.entries)]
        )

    def vstack(self, other):
        if self.cols != other.cols:
            raise ValueError("column-count mismatch")
        return RationalMatrix(self.entries + other.entries)

    # -- elimination --------------------------------------------------

    def _rref(self):
        """Reduced row echelon form; returns (matrix rows, pivot columns)."""
        a = self.copy_entries()
        pivots = []
        r = 0
        for c in range(self.cols):
            pivot = next((i for i in range(r, self.rows) if a[i][c] != 0), None)
            if pivot is None:
                continue
            a[r], a[pivot] = a[pivot], a[r]
            inv = 1 / a[r][c]
            a[r] = [x * inv for x in a[r]]
            for i in range(self.rows):
                if i != r and a[i][c] != 0:
                    f = a[i][c]
                    a[i] = [x - f * y for x, y in zip(a[i], a[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return a, pivots

    def rank(self):
        return len(self._rref()[1])

    def kernel(self):
        """Basis of the right null space, one vector per free column."""
        a, pivots = self._rref()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            v = [Fraction(0)] * self.cols
            v[fc] = Fraction(1)
            for r, pc in enumerate(pivots):
                v[pc] = -a[r][fc]
            basis.append(v)
        return basis

    def nullity(self):
        return self.cols - self.rank()

    def det(self):
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        a = self.copy_entries()
        n = self.rows
        det = Fraction(1)
        for c in range(n):
            pivot = next((i for i in range(c, n) if a[i][c] != 0), None)
            if pivot is None:
                return Fraction(0)
            if pivot != c:
                a[c], a[pivot] = a[pivot], a[c]
                det = -det
            det *= a[c][c]
            inv = 1 / a[c][c]
            for i in range(c + 1, n):
                if a[i][c] != 0:
                    f = a[i][c] * inv
                    a[i] = [x - f * y for x, y in zip(a[i], a[c])]
        return det

    def inverse(self):
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = RationalMatrix(
            [row + ident for row, ident in zip(self.entries, RationalMatrix.identity(n).entries)]
        )
        a, pivots = aug._rref()
        if pivots != list(range(n)):
            raise ValueError("matrix is singular")
        return RationalMatrix([row[n:] for row in a[:n]])

    def solve(self, rhs):
        """One solution of self @ x = rhs, or None if inconsistent."""
        rhs = [_as_fraction(x) for x in rhs]
        aug = RationalMatrix([row + [b] for row, b in zip(self.entries, rhs)])
        a, pivots = aug._rref()
        if any(p == self.cols for p in pivots):
            return None
        x = [Fraction(0)] * self.cols
        for r, pc in enumerate(pivots):
            x[pc] = a[r][self.cols]
        return x

    def to_json(self):
        return [[str(x) for x in row] for row in self.entries]

    @classmethod
    def from_json(cls, data):
        return cls([[Fraction(x) for x in row] for row in data])


def vectors_rank(vectors):
    """Rank of a list of equal-length rational vectors."""
    if not vectors:
        return 0
    return RationalMatrix(list(vectors)).rank()
