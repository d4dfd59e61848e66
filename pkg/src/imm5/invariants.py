"""The invariant algebra for immersions with trivial normal bundle.

Smale invariants of sphere immersions from singular Seifert data, the
integer invariant i of 3-manifold immersions in its two incarnations
i_a (cusp route, via a filling mapped to 5-space) and i_b (triple-point
route, via a filling mapped to upper 6-space), and the free transitive
connected-sum action of sphere immersions on each Wu class.

Seifert data is supplied numerically; the module enforces every parity
and consistency identity such data must satisfy.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityError, WuMismatch
from .surgery import Gamma2Element, HomologyProfile


@dataclass(frozen=True)
class SeifertFillingR5:
    """Signature and algebraic cusp count of a generic 5-space filling."""

    sigma: int
    cusps_algebraic: int
    cusps_per_component: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if (self.cusps_per_component is not None
                and sum(self.cusps_per_component) != self.cusps_algebraic):
            raise ValueError("per-component cusp counts must sum to the total")


@dataclass(frozen=True)
class SeifertFillingR6:
    """Signature, triple points and singular linking of an upper 6-space filling."""

    sigma: int
    triple_points: int
    singular_linking: int


@dataclass(frozen=True)
class ImmersionDoubleData:
    """Linking number of the immersed image with its pushed-off double curves."""

    big_l: int


@dataclass(frozen=True)
class RegHomotopyClass:
    """The complete classifying pair (wu, i) of an immersion."""

    wu: Gamma2Element
    i: int


@dataclass(frozen=True)
class SmaleClass:
    """A regular homotopy class of sphere immersions in 5-space."""

    omega: int


def smale_via_seifert_r5(s: SeifertFillingR5) -> SmaleClass:
    """Omega = (3*sigma + #cusps) / 2."""
    total = 3 * s.sigma + s.cusps_algebraic
    if total % 2:
        raise ParityError(
            f"3*sigma + cusps = {total} is odd; no genuine filling yields this data"
        )
    return SmaleClass(total // 2)


def smale_via_seifert_r6(s: SeifertFillingR6, d: ImmersionDoubleData) -> SmaleClass:
    """Omega = (3*sigma + 3t - 3l + L) / 2."""
    total = 3 * (s.sigma + s.triple_points - s.singular_linking) + d.big_l
    if total % 2:
        raise ParityError(
            f"3*(sigma + t - l) + L = {total} is odd; "
            "no genuine filling yields this data"
        )
    return SmaleClass(total // 2)


def i_a(s: SeifertFillingR5, h: HomologyProfile) -> int:
    """i_a = 3/2*(sigma - alpha) + #cusps/2, always an integer."""
    total = 3 * (s.sigma - h.alpha) + s.cusps_algebraic
    if total % 2:
        raise ParityError(
            f"3*(sigma - alpha) + cusps = {total} is odd; "
            "the record is inconsistent with any singular Seifert surface"
        )
    return total // 2


def i_b(s: SeifertFillingR6, d: ImmersionDoubleData, h: HomologyProfile) -> int:
    """i_b = 3/2*(sigma - alpha) + (3t - 3l + L)/2, always an integer."""
    total = 3 * (s.sigma - h.alpha + s.triple_points - s.singular_linking) + d.big_l
    if total % 2:
        raise ParityError(
            f"3*(sigma - alpha + t - l) + L = {total} is odd; "
            "the record is inconsistent with any singular Seifert surface"
        )
    return total // 2


def connected_sum_act(f: RegHomotopyClass, g: SmaleClass) -> RegHomotopyClass:
    """Connected sum with a sphere immersion: (wu, i) -> (wu, i + omega).

    The Wu class is untouched; the action on each Wu component is the
    free transitive Z-action by the Smale invariant.
    """
    return RegHomotopyClass(f.wu, f.i + g.omega)


def solve_for_summand(f0: RegHomotopyClass, target: RegHomotopyClass) -> SmaleClass:
    """The unique sphere-immersion class carrying f0 to target."""
    if f0.wu != target.wu:
        raise WuMismatch(
            f"no summand carries Wu class {f0.wu} to {target.wu}; "
            "the action preserves components"
        )
    return SmaleClass(target.i - f0.i)


def track_correction(l_before: int, l_after: int,
                     triple_points_of_track: int) -> bool:
    """Double-point linking bookkeeping across a regular homotopy track.

    True iff l_before = l_after + 3 * (triple points of the track).
    """
    return l_before == l_after + 3 * triple_points_of_track
