"""Surgery presentations of closed oriented 3-manifolds.

A manifold enters as the linking matrix q of a framed link (framings on
the diagonal).  Everything homological is read off the Smith normal
form of q: H1 = coker(q), its free rank and torsion, the count alpha of
even torsion factors, and the 2-torsion subgroup Gamma2 of H^2 that
indexes the Wu classes.  H^2 is identified with H1 throughout via
Poincare duality, so only the group structure is ever represented.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .intlinalg import IntSymMatrix, signature, smith_normal_form


@dataclass(frozen=True)
class SurgeryPresentation:
    """A closed oriented 3-manifold given by a framed-link linking matrix."""

    name: str
    q: IntSymMatrix

    @property
    def n(self) -> int:
        return self.q.n


@dataclass(frozen=True)
class HomologyProfile:
    """First-homology data of the presented manifold.

    betti1           rank of H1(M; Z)
    torsion_factors  invariant factors of the torsion subgroup (each >= 2,
                     divisibility chain in Smith order)
    alpha            number of even torsion factors, i.e.
                     dim_Z2 (torsion H1 (x) Z2)
    gamma2_rank      rank of Gamma2(M) as a Z2 vector space (= alpha,
                     so |Gamma2| = 2**alpha)
    """

    betti1: int
    torsion_factors: tuple[int, ...]
    alpha: int
    gamma2_rank: int

    def __post_init__(self) -> None:
        expected = sum(1 for d in self.torsion_factors if d % 2 == 0)
        if self.alpha != expected or self.gamma2_rank != self.alpha:
            raise ValueError("alpha must count the even torsion factors")

    @classmethod
    def derive(cls, betti1: int, torsion_factors: tuple[int, ...]) -> "HomologyProfile":
        alpha = sum(1 for d in torsion_factors if d % 2 == 0)
        return cls(betti1, tuple(torsion_factors), alpha, alpha)

    @property
    def gamma2_order(self) -> int:
        return 2 ** self.alpha

    @property
    def h1_mod2_dim(self) -> int:
        """dim H^1(M; Z2) = betti1 + alpha (universal coefficients)."""
        return self.betti1 + self.alpha

    @property
    def spin_structure_count(self) -> int:
        return 2 ** self.h1_mod2_dim


@dataclass(frozen=True)
class Gamma2Element:
    """An element of Gamma2(M) in the fixed Smith-basis coordinates.

    Coordinates are one bit per even torsion factor, in Smith order;
    addition is coordinatewise mod 2.
    """

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(b not in (0, 1) for b in self.coords):
            raise ValueError("coordinates must be bits")

    @classmethod
    def zero(cls, rank: int) -> "Gamma2Element":
        return cls((0,) * rank)

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "Gamma2Element") -> "Gamma2Element":
        if len(self.coords) != len(other.coords):
            raise ValueError("rank mismatch")
        return Gamma2Element(tuple(a ^ b for a, b in zip(self.coords, other.coords)))

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        return "".join(str(b) for b in self.coords)


def homology_profile(p: SurgeryPresentation) -> HomologyProfile:
    """H1 of the presented manifold, as coker(q) read off the Smith form."""
    factors = smith_normal_form(p.q).invariant_factors
    betti1 = sum(1 for d in factors if d == 0)
    torsion = tuple(d for d in factors if d >= 2)
    return HomologyProfile.derive(betti1, torsion)


def gamma2_elements(h: HomologyProfile) -> list[Gamma2Element]:
    """All 2**alpha elements of Gamma2, the zero element first."""
    return [Gamma2Element(bits)
            for bits in itertools.product((0, 1), repeat=h.alpha)]


def even_torsion_positions(invariant_factors: tuple[int, ...]) -> list[int]:
    """Smith-diagonal indices carrying an even torsion factor.

    These index the fixed basis of Gamma2: the order-two elements
    (d_i/2) g_i of coker(q) for each even invariant factor d_i.
    """
    return [i for i, d in enumerate(invariant_factors) if d != 0 and d % 2 == 0]


def signature_of_trace(p: SurgeryPresentation) -> int:
    """Signature of the 4-manifold the framed link presents."""
    return signature(p.q)


def is_even_presentation(p: SurgeryPresentation) -> bool:
    """True iff every framing is even, i.e. the presented 4-manifold is spin."""
    return all(d % 2 == 0 for d in p.q.diagonal())
