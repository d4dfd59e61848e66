"""Spin structures as characteristic sublinks, and their Wu cosets.

A spin structure on the presented manifold is a Z2 vector c over the
link components with q c = diag(q) mod 2.  The solution set realises
H^1(M; Z2) as a torsor; the quotient map onto
H^1(M; Z2) / rho(H^1(M; Z)) = Gamma2(M) is computed on differences of
two spin structures through the Smith change of basis.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidSpinStructure
from .intlinalg import Z2Matrix, solve_mod2, smith_normal_form
from .surgery import (
    Gamma2Element,
    SurgeryPresentation,
    even_torsion_positions,
)


@dataclass(frozen=True)
class SpinStructure:
    """Indicator vector of a characteristic sublink."""

    c: tuple[int, ...]


@dataclass(frozen=True)
class WuCoset:
    """The class of a spin-structure difference in Gamma2 coordinates."""

    value: Gamma2Element


def _q_mod2(p: SurgeryPresentation) -> Z2Matrix:
    return Z2Matrix.from_rows(p.q.entries)


def is_characteristic(p: SurgeryPresentation, s: SpinStructure) -> bool:
    """Whether s solves the characteristic-sublink equation for p."""
    q = p.q.entries
    n = p.n
    if len(s.c) != n:
        return False
    for i in range(n):
        acc = sum(q[i][j] * s.c[j] for j in range(n))
        if (acc - q[i][i]) % 2:
            return False
    return True


def spin_structures(p: SurgeryPresentation) -> list[SpinStructure]:
    """All solutions of q c = diag(q) mod 2.

    The system is always solvable (the diagonal of a symmetric Z2
    matrix lies in its column space), and the solution count is
    2**(betti1 + alpha).
    """
    b = [d % 2 for d in p.q.diagonal()]
    sol = solve_mod2(_q_mod2(p), b)
    return [SpinStructure(c) for c in sol.solutions()]


def wu_coset_of_difference(
    p: SurgeryPresentation, s1: SpinStructure, s2: SpinStructure
) -> WuCoset:
    """Map the difference s1 - s2 in H^1(M; Z2) to its Wu coset.

    With u q v = s the Smith decomposition, the difference delta
    descends to the functional x -> delta.x on H1 = coker(q); its value
    on the Smith generator g_i = u^{-1} e_i is the i-th coordinate of
    the solution of u^T c = delta over Z2.  The coordinates at even
    torsion positions are the Gamma2 coordinates of the coset.  The
    resulting map is onto Gamma2 with fibres of size 2**betti1.
    """
    for s in (s1, s2):
        if not is_characteristic(p, s):
            raise InvalidSpinStructure(
                f"vector {s.c} fails the characteristic equation for {p.name!r}"
            )
    delta = [a ^ b for a, b in zip(s1.c, s2.c)]
    dec = smith_normal_form(p.q)
    ut = [[dec.u[j][i] for j in range(p.n)] for i in range(p.n)]
    sol = solve_mod2(Z2Matrix.from_rows(ut), delta)
    # u is unimodular, hence invertible mod 2: the solution is unique
    assert not sol.kernel
    coords = tuple(sol.particular[i]
                   for i in even_torsion_positions(dec.invariant_factors))
    return WuCoset(Gamma2Element(coords))
