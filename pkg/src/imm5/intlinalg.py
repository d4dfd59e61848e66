"""Exact linear algebra over Z and Z2.

This module is the computational substrate for everything else: Smith
normal form with unimodular transforms, exact signatures of symmetric
integer matrices, fraction-free determinants, and GF(2) solving on bit
matrices.  All integer arithmetic is arbitrary precision and no
floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .errors import AsymmetricMatrix, NoSolution

Rows = Sequence[Sequence[int]]


class IntSymMatrix:
    """A symmetric matrix of arbitrary-precision integers.

    Symmetry is enforced at construction.  The empty (0x0) matrix is a
    legal value: it presents the empty link, hence the 3-sphere.
    """

    __slots__ = ("entries",)

    def __init__(self, rows: Rows):
        entries = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(entries)
        for row in entries:
            if len(row) != n:
                raise AsymmetricMatrix("matrix must be square")
        for i in range(n):
            for j in range(i):
                if entries[i][j] != entries[j][i]:
                    raise AsymmetricMatrix(
                        f"entry ({i},{j}) = {entries[i][j]} differs from "
                        f"entry ({j},{i}) = {entries[j][i]}"
                    )
        self.entries: tuple[tuple[int, ...], ...] = entries

    @property
    def n(self) -> int:
        return len(self.entries)

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[i][i] for i in range(self.n))

    def row_lists(self) -> list[list[int]]:
        return [list(r) for r in self.entries]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i][j]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, IntSymMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntSymMatrix({[list(r) for r in self.entries]!r})"


def _as_row_lists(a: IntSymMatrix | Rows) -> list[list[int]]:
    if isinstance(a, IntSymMatrix):
        return a.row_lists()
    return [[int(x) for x in row] for row in a]


def _identity(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def _freeze(rows: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(r) for r in rows)


def direct_sum(a: IntSymMatrix, b: IntSymMatrix) -> IntSymMatrix:
    """Block-diagonal sum of two symmetric integer matrices."""
    n, m = a.n, b.n
    rows = [[0] * (n + m) for _ in range(n + m)]
    for i in range(n):
        for j in range(n):
            rows[i][j] = a.entries[i][j]
    for i in range(m):
        for j in range(m):
            rows[n + i][n + j] = b.entries[i][j]
    return IntSymMatrix(rows)


def congruence(a: IntSymMatrix, g: Rows) -> IntSymMatrix:
    """The congruent matrix g^T a g (g any square integer matrix)."""
    gl = _as_row_lists(g)
    n = a.n
    if len(gl) != n:
        raise ValueError("dimension mismatch in congruence")
    ag = [[sum(a.entries[i][k] * gl[k][j] for k in range(n)) for j in range(n)]
          for i in range(n)]
    gtag = [[sum(gl[k][i] * ag[k][j] for k in range(n)) for j in range(n)]
            for i in range(n)]
    return IntSymMatrix(gtag)


# ----------------------------------------------------------------------
# Determinant (fraction-free Bareiss elimination)
# ----------------------------------------------------------------------

def det_int(a: IntSymMatrix | Rows) -> int:
    """Exact determinant of a square integer matrix."""
    m = _as_row_lists(a)
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            pivot = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if pivot is None:
                return 0
            m[k], m[pivot] = m[pivot], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


# ----------------------------------------------------------------------
# Smith normal form
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular u, v and diagonal s with u*a*v = s.

    ``invariant_factors`` is the diagonal of ``s``: non-negative, each
    factor dividing the next, zeros trailing.
    """

    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    s: tuple[tuple[int, ...], ...]
    invariant_factors: tuple[int, ...]


def _min_abs_entry(a: list[list[int]], t: int) -> tuple[int, int] | None:
    best = None
    best_abs = None
    for i in range(t, len(a)):
        row = a[i]
        for j in range(t, len(row)):
            x = row[j]
            if x != 0 and (best_abs is None or abs(x) < best_abs):
                best = (i, j)
                best_abs = abs(x)
                if best_abs == 1:
                    return best
    return best


def _swap_cols(a: list[list[int]], j0: int, j1: int) -> None:
    for row in a:
        row[j0], row[j1] = row[j1], row[j0]


def _row_add(a: list[list[int]], dst: int, src: int, c: int) -> None:
    arow, srow = a[dst], a[src]
    for j in range(len(arow)):
        arow[j] += c * srow[j]


def _col_add(a: list[list[int]], dst: int, src: int, c: int) -> None:
    for row in a:
        row[dst] += c * row[src]


def smith_normal_form(a: IntSymMatrix | Rows) -> SmithDecomposition:
    """Smith normal form of an integer matrix, with transforms.

    Returns a decomposition with ``u @ a @ v == s`` exactly, where u and
    v are unimodular and s is diagonal with a divisibility chain
    d1 | d2 | ... (all di >= 0, zeros last).  The empty matrix yields
    the empty decomposition.
    """
    A = _as_row_lists(a)
    m = len(A)
    n = len(A[0]) if m else 0
    if any(len(row) != n for row in A):
        raise ValueError("ragged matrix")
    U = _identity(m)
    V = _identity(n)
    t = 0
    while t < min(m, n):
        piv = _min_abs_entry(A, t)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            A[t], A[i0] = A[i0], A[t]
            U[t], U[i0] = U[i0], U[t]
        if j0 != t:
            _swap_cols(A, t, j0)
            _swap_cols(V, t, j0)
        p = A[t][t]
        dirty = False
        for i in range(t + 1, m):
            if A[i][t]:
                q = A[i][t] // p
                _row_add(A, i, t, -q)
                _row_add(U, i, t, -q)
                dirty = dirty or A[i][t] != 0
        for j in range(t + 1, n):
            if A[t][j]:
                q = A[t][j] // p
                _col_add(A, j, t, -q)
                _col_add(V, j, t, -q)
                dirty = dirty or A[t][j] != 0
        if dirty:
            # a remainder smaller than the pivot appeared; rehunt
            continue
        off = None
        for i in range(t + 1, m):
            if any(A[i][j] % p for j in range(t + 1, n)):
                off = i
                break
        if off is not None:
            # fold the offending row in so the pivot can shrink to the gcd
            _row_add(A, t, off, 1)
            _row_add(U, t, off, 1)
            continue
        t += 1
    for k in range(min(m, n)):
        if A[k][k] < 0:
            for j in range(n):
                A[k][j] = -A[k][j]
            for j in range(m):
                U[k][j] = -U[k][j]
    factors = tuple(A[k][k] for k in range(min(m, n)))
    return SmithDecomposition(_freeze(U), _freeze(V), _freeze(A), factors)


# ----------------------------------------------------------------------
# Signature (exact congruence diagonalisation over Q)
# ----------------------------------------------------------------------

def signature(a: IntSymMatrix | Rows) -> int:
    """Signature of a symmetric integer matrix, computed exactly.

    Returns (#positive - #negative eigenvalues) via symmetric
    congruence reduction with rational pivots.  The empty matrix has
    signature 0.
    """
    rows = _as_row_lists(a)
    n = len(rows)
    M = [[Fraction(x) for x in row] for row in rows]
    pos = neg = 0
    t = 0
    while t < n:
        if M[t][t] == 0:
            swap = next((j for j in range(t + 1, n) if M[j][j] != 0), None)
            if swap is not None:
                M[t], M[swap] = M[swap], M[t]
                for row in M:
                    row[t], row[swap] = row[swap], row[t]
            else:
                mate = next((j for j in range(t + 1, n) if M[t][j] != 0), None)
                if mate is None:
                    # zero row: a zero eigenvalue, no signature contribution
                    t += 1
                    continue
                # all remaining diagonal entries vanish, so this makes
                # M[t][t] = 2*M[t][mate] != 0
                for j in range(n):
                    M[t][j] += M[mate][j]
                for i in range(n):
                    M[i][t] += M[i][mate]
        p = M[t][t]
        if p > 0:
            pos += 1
        else:
            neg += 1
        for i in range(t + 1, n):
            if M[i][t]:
                c = M[i][t] / p
                for j in range(n):
                    M[i][j] -= c * M[t][j]
                for k in range(n):
                    M[k][i] -= c * M[k][t]
        t += 1
    return pos - neg


# ----------------------------------------------------------------------
# Z2 linear algebra on bit matrices
# ----------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Z2Matrix:
    """A bit matrix; all arithmetic is mod 2."""

    rows: int
    cols: int
    entries: np.ndarray

    @classmethod
    def from_rows(cls, rows: Rows) -> "Z2Matrix":
        rl = [[int(x) & 1 for x in row] for row in rows]
        arr = np.array(rl, dtype=np.uint8)
        if arr.ndim != 2:
            arr = arr.reshape(len(rl), 0)
        return cls(arr.shape[0], arr.shape[1], arr)


@dataclass(frozen=True)
class Mod2Solution:
    """One solution of a Z2 system together with a kernel basis.

    The full solution set is ``particular + span(kernel)``; it has
    exactly ``2 ** len(kernel)`` elements.
    """

    particular: tuple[int, ...]
    kernel: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return 2 ** len(self.kernel)

    def solutions(self) -> Iterator[tuple[int, ...]]:
        """All solutions, starting from the particular one."""
        base = np.array(self.particular, dtype=np.uint8)
        basis = [np.array(k, dtype=np.uint8) for k in self.kernel]
        for picks in itertools.product((0, 1), repeat=len(basis)):
            x = base.copy()
            for take, vec in zip(picks, basis):
                if take:
                    x ^= vec
            yield tuple(int(b) for b in x)


def solve_mod2(m: Z2Matrix | Rows, b: Sequence[int]) -> Mod2Solution:
    """Solve m x = b over Z2 by Gauss-Jordan elimination.

    Raises NoSolution when b is outside the column space.  Free
    variables are set to 0 in the particular solution; the kernel basis
    has one vector per free column.
    """
    if isinstance(m, Z2Matrix):
        A = m.entries.copy()
    else:
        A = Z2Matrix.from_rows(m).entries.copy()
    nrows, ncols = A.shape
    rhs = np.array([int(x) & 1 for x in b], dtype=np.uint8)
    if rhs.shape[0] != nrows:
        raise ValueError("dimension mismatch between matrix and right-hand side")

    aug = np.concatenate([A, rhs[:, None]], axis=1) if ncols else rhs[:, None].copy()
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i, c]), None)
        if pivot is None:
            continue
        if pivot != r:
            aug[[r, pivot]] = aug[[pivot, r]]
        for i in range(nrows):
            if i != r and aug[i, c]:
                aug[i, :] ^= aug[r, :]
        pivots.append(c)
        r += 1
        if r == nrows:
            break

    for i in range(r, nrows):
        if aug[i, ncols]:
            raise NoSolution("right-hand side is outside the column space")

    x = np.zeros(ncols, dtype=np.uint8)
    for row, c in enumerate(pivots):
        x[c] = aug[row, ncols]

    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    kernel: list[tuple[int, ...]] = []
    for f in free_cols:
        vec = np.zeros(ncols, dtype=np.uint8)
        vec[f] = 1
        for row, c in enumerate(pivots):
            vec[c] = aug[row, f]
        kernel.append(tuple(int(v) for v in vec))

    return Mod2Solution(tuple(int(v) for v in x), tuple(kernel))
