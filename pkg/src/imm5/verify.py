"""Validators, brute-force oracles, and built-in reproductions.

Three layers live here:

* arithmetic validators for the closed-manifold identities that make
  the invariants well defined, and for the cusp-count divisibility
  facts that follow from them;
* independent oracles (determinantal divisors for the Smith form,
  Descartes sign counting on the characteristic polynomial for the
  signature, parity of even nonsingular forms) run as seeded random
  sweeps;
* the built-in checks behind ``imm5 verify --corollaries``: the
  sphere-embedding 24Z sweep and the two 3-torus computations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .embeddings import SpinBoundarySignatures, embedding_classes, is_embedding_class
from .errors import HypothesisViolated, MissingData
from .fixtures import manifold_json, presentation
from .intlinalg import IntSymMatrix, det_int, signature, smith_normal_form
from .invariants import (
    ImmersionDoubleData,
    RegHomotopyClass,
    SeifertFillingR5,
    SeifertFillingR6,
    i_a,
    i_b,
    smale_via_seifert_r5,
    solve_for_summand,
)
from .surgery import Gamma2Element, HomologyProfile, homology_profile


# ----------------------------------------------------------------------
# Record types and validators
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class ClosedMapRecordR5:
    """Data of a generic map of a closed oriented 4-manifold to 5-space."""

    sigma: int
    cusps_algebraic: int
    cusps_per_component: tuple[int, ...] | None = None
    is_spin: bool = False

    def __post_init__(self) -> None:
        if (self.cusps_per_component is not None
                and sum(self.cusps_per_component) != self.cusps_algebraic):
            raise ValueError("per-component cusp counts must sum to the total")


@dataclass(frozen=True)
class ClosedMapRecordR6:
    """Data of a generic map of a closed oriented 4-manifold to 6-space."""

    sigma: int
    triple_points: int
    singular_linking: int


@dataclass(frozen=True)
class PartitionRecord:
    """Algebraic cusp counts on the two sides of a separating 3-manifold."""

    part_cusps: tuple[int, int]


def check_closed_r5(r: ClosedMapRecordR5) -> bool:
    """Closed-manifold identity in 5-space: #cusps + 3*sigma = 0."""
    return r.cusps_algebraic + 3 * r.sigma == 0


def check_closed_r6(r: ClosedMapRecordR6) -> bool:
    """Closed-manifold identity in 6-space: sigma - l + t = 0."""
    return r.sigma - r.singular_linking + r.triple_points == 0


def check_cusp_residue(filling: SeifertFillingR5, d: ImmersionDoubleData) -> bool:
    """The cusp count of any filling is congruent to L mod 3."""
    return (filling.cusps_algebraic - d.big_l) % 3 == 0


def check_spin_even_components(r: ClosedMapRecordR5) -> bool:
    """On a closed spin 4-manifold every singularity component carries an
    even number of cusps."""
    if not r.is_spin:
        raise HypothesisViolated("the even-cusp check applies to spin records only")
    if r.cusps_per_component is None:
        raise MissingData("record carries no per-component cusp counts")
    return all(c % 2 == 0 for c in r.cusps_per_component)


def check_partition_divisibility(p: PartitionRecord) -> bool:
    """Cusp counts on both sides of the separating 3-manifold are
    divisible by 6."""
    return all(c % 6 == 0 for c in p.part_cusps)


def check_equal_signatures_if_reg_homotopic(s1: int, s2: int) -> bool:
    """Necessary condition on datasets: regularly homotopic embeddings
    have Seifert surfaces of equal signature."""
    return s1 == s2


# ----------------------------------------------------------------------
# Independent oracles
# ----------------------------------------------------------------------

def invariant_factors_via_minors(rows) -> tuple[int, ...]:
    """Invariant factors from determinantal divisors.

    d_k = gcd(all k-minors) / gcd(all (k-1)-minors), with zeros once
    some gcd vanishes.  Shares no code with the elimination-based Smith
    routine, which it cross-checks.
    """
    mat = [list(map(int, row)) for row in rows]
    m = len(mat)
    n = len(mat[0]) if m else 0
    r = min(m, n)
    factors: list[int] = []
    prev = 1
    for k in range(1, r + 1):
        g = 0
        for rows_k in itertools.combinations(range(m), k):
            for cols_k in itertools.combinations(range(n), k):
                sub = [[mat[i][j] for j in cols_k] for i in rows_k]
                g = gcd(g, det_int(sub))
                if g == 1:
                    break
            if g == 1:
                break
        if g == 0:
            factors.extend([0] * (r - k + 1))
            break
        factors.append(g // prev)
        prev = g
    return tuple(factors)


def charpoly_int(rows) -> list[int]:
    """Coefficients [1, c1, ..., cn] of det(x*I - A), exactly."""
    n = len(rows)
    a = [[Fraction(x) for x in row] for row in rows]
    work = [[Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i in range(n)]
    coeffs = [Fraction(1)]
    for k in range(1, n + 1):
        work = [[sum(a[i][t] * work[t][j] for t in range(n)) for j in range(n)]
                for i in range(n)]
        ck = -sum(work[i][i] for i in range(n)) / k
        coeffs.append(ck)
        for i in range(n):
            work[i][i] += ck
    assert all(c.denominator == 1 for c in coeffs)
    return [int(c) for c in coeffs]


def _sign_changes(seq: list[int]) -> int:
    signs = [1 if x > 0 else -1 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def signature_via_charpoly(rows) -> int:
    """Root-sign count on the characteristic polynomial.

    All eigenvalues of a symmetric matrix are real, so Descartes' rule
    is exact: positive eigenvalues are the sign changes of p(x),
    negative ones those of p(-x).
    """
    coeffs = charpoly_int(rows)
    n = len(coeffs) - 1
    pos = _sign_changes(coeffs)
    neg = _sign_changes([((-1) ** (n - k)) * c for k, c in enumerate(coeffs)])
    return pos - neg


# ----------------------------------------------------------------------
# Random instance generators (desk scale)
# ----------------------------------------------------------------------

def random_symmetric(rng: random.Random, n: int, lo: int = -5, hi: int = 5) -> IntSymMatrix:
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1):
            rows[i][j] = rows[j][i] = rng.randint(lo, hi)
    return IntSymMatrix(rows)


def random_even_symmetric_nonsingular(rng: random.Random, n: int) -> IntSymMatrix:
    """Random symmetric matrix, even diagonal, nonzero determinant.

    Entries are uniform in [-5, 5] with the diagonal forced even;
    singular draws are rejected.
    """
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i):
                rows[i][j] = rows[j][i] = rng.randint(-5, 5)
            rows[i][i] = 2 * rng.randint(-2, 2)
        if det_int(rows) != 0:
            return IntSymMatrix(rows)


def random_int_matrix(rng: random.Random, m: int, n: int,
                      lo: int = -5, hi: int = 5) -> list[list[int]]:
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def random_consistent_seifert_data(
    rng: random.Random,
) -> tuple[SeifertFillingR5, SeifertFillingR6, ImmersionDoubleData, HomologyProfile]:
    """A parity-valid tuple with cusps = 3t - 3l + L on a shared filling."""
    sigma = rng.randint(-8, 8)
    alpha = rng.randint(0, 3)
    if (sigma - alpha) % 2:
        alpha += 1
    h = HomologyProfile.derive(rng.randint(0, 2), (2,) * alpha)
    t = rng.randint(-4, 4)
    l = rng.randint(-4, 4)
    big_l = 2 * rng.randint(-5, 5) + ((t - l) % 2)
    cusps = 3 * t - 3 * l + big_l
    return (SeifertFillingR5(sigma, cusps),
            SeifertFillingR6(sigma, t, l),
            ImmersionDoubleData(big_l),
            h)


def random_r5_pair(rng: random.Random) -> tuple[SeifertFillingR5, SeifertFillingR5]:
    """Two cusp-route fillings of one immersion (equal 3*sigma + cusps)."""
    omega = rng.randint(-20, 20)
    s1, s2 = rng.randint(-8, 8), rng.randint(-8, 8)
    return (SeifertFillingR5(s1, 2 * omega - 3 * s1),
            SeifertFillingR5(s2, 2 * omega - 3 * s2))


def random_r6_pair(rng: random.Random) -> tuple[SeifertFillingR6, SeifertFillingR6]:
    """Two triple-point-route fillings of one immersion (equal sigma + t - l)."""
    level = rng.randint(-8, 8)
    s1, t1 = rng.randint(-8, 8), rng.randint(-4, 4)
    s2, t2 = rng.randint(-8, 8), rng.randint(-4, 4)
    return (SeifertFillingR6(s1, t1, s1 + t1 - level),
            SeifertFillingR6(s2, t2, s2 + t2 - level))


# ----------------------------------------------------------------------
# Oracle sweeps
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class OracleReport:
    name: str
    trials: int
    failures: tuple[str, ...]

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        mark = "✓" if self.passed else "✗"
        return (f"{self.name}: {self.trials - len(self.failures)}/{self.trials} "
                f"{mark}")


def oracle_parity_lemma(trials: int = 500, max_dim: int = 6, seed: int = 0) -> OracleReport:
    """Size parity of random even nonsingular symmetric forms equals the
    parity of alpha of their cokernel."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        n = rng.randint(1, max_dim)
        q = random_even_symmetric_nonsingular(rng, n)
        factors = smith_normal_form(q).invariant_factors
        alpha = sum(1 for d in factors if d >= 2 and d % 2 == 0)
        if (n - alpha) % 2:
            failures.append(f"size {n} vs alpha {alpha} for {q.entries}")
    return OracleReport("parity lemma", trials, tuple(failures))


def oracle_snf(trials: int = 500, max_dim: int = 6, seed: int = 0) -> OracleReport:
    """Smith form soundness and agreement with the determinantal-divisor
    oracle on random integer matrices."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        m = rng.randint(0, max_dim)
        n = rng.randint(0, max_dim)
        a = random_int_matrix(rng, m, n)
        dec = smith_normal_form(a)
        prod = [[sum(dec.u[i][k] * a[k][j] for k in range(m)) for j in range(n)]
                for i in range(m)]
        prod = [[sum(prod[i][k] * dec.v[k][j] for k in range(n)) for j in range(n)]
                for i in range(m)]
        if tuple(tuple(r) for r in prod) != dec.s:
            failures.append(f"u*a*v != s for {a}")
            continue
        if abs(det_int(dec.u)) != 1 or abs(det_int(dec.v)) != 1:
            failures.append(f"non-unimodular transform for {a}")
            continue
        if dec.invariant_factors != invariant_factors_via_minors(a):
            failures.append(
                f"factor mismatch for {a}: {dec.invariant_factors} "
                f"vs {invariant_factors_via_minors(a)}")
    return OracleReport("SNF", trials, tuple(failures))


def oracle_signature(trials: int = 500, max_dim: int = 6, seed: int = 0) -> OracleReport:
    """Congruence-reduction signature vs the root-sign-count oracle."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        n = rng.randint(0, max_dim)
        q = random_symmetric(rng, n)
        got = signature(q)
        want = signature_via_charpoly(q.entries)
        if got != want:
            failures.append(f"signature {got} vs oracle {want} for {q.entries}")
    return OracleReport("signature", trials, tuple(failures))


def oracle_invariant_coincidence(trials: int = 1000, seed: int = 0) -> OracleReport:
    """i_a = i_b and the mod-3 cusp residue on random consistent tuples."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        r5, r6, d, h = random_consistent_seifert_data(rng)
        ia = i_a(r5, h)
        ib = i_b(r6, d, h)
        if ia != ib:
            failures.append(f"i_a {ia} != i_b {ib} for {r5}, {r6}, {d}")
        elif not check_cusp_residue(r5, d):
            failures.append(f"cusp residue failed for {r5}, {d}")
    return OracleReport("i_a = i_b coincidence", trials, tuple(failures))


def oracle_gluing(trials: int = 500, seed: int = 0) -> OracleReport:
    """Closed-manifold identities on differences of filling pairs."""
    rng = random.Random(seed)
    failures = []
    for _ in range(trials):
        a5, b5 = random_r5_pair(rng)
        glued5 = ClosedMapRecordR5(a5.sigma - b5.sigma,
                                   a5.cusps_algebraic - b5.cusps_algebraic)
        if not check_closed_r5(glued5):
            failures.append(f"5-space gluing failed for {a5}, {b5}")
            continue
        a6, b6 = random_r6_pair(rng)
        glued6 = ClosedMapRecordR6(a6.sigma - b6.sigma,
                                   a6.triple_points - b6.triple_points,
                                   a6.singular_linking - b6.singular_linking)
        if not check_closed_r6(glued6):
            failures.append(f"6-space gluing failed for {a6}, {b6}")
    return OracleReport("gluing coherence", trials, tuple(failures))


def run_oracles(seed: int = 0, trials: int = 500) -> list[OracleReport]:
    """The full oracle battery with one base seed."""
    return [
        oracle_parity_lemma(trials, 6, seed),
        oracle_snf(trials, 6, seed + 1),
        oracle_signature(trials, 6, seed + 2),
        oracle_invariant_coincidence(max(trials, 1000), seed + 3),
        oracle_gluing(trials, seed + 4),
    ]


# ----------------------------------------------------------------------
# Built-in reproductions (imm5 verify --corollaries)
# ----------------------------------------------------------------------

@dataclass(frozen=True)
class CheckReport:
    name: str
    passed: bool
    lines: tuple[str, ...]


def _trivial_wu() -> Gamma2Element:
    return Gamma2Element.zero(0)


def _sphere_embedding_set():
    sphere = presentation("s3")
    h = homology_profile(sphere)
    sigs = SpinBoundarySignatures.from_dict({_trivial_wu(): [0]})
    return h, embedding_classes(h, sigs)


def _torus_embedding_set():
    torus = presentation("t3")
    h = homology_profile(torus)
    raw = manifold_json("t3")["spin_boundary_signatures"]
    sigs = SpinBoundarySignatures.from_dict({_trivial_wu(): raw["0"]})
    return h, embedding_classes(h, sigs)


def hughes_melvin_sweep(lo: int = -160, hi: int = 160) -> CheckReport:
    """Sphere embeddings land exactly on 24Z.

    For cusp-free data, Omega = 3*sigma/2 is a multiple of 24 iff sigma
    is a multiple of 16; signatures in 16Z + 8 land on 24Z + 12.
    """
    lines = []
    bad = []
    for sigma in range(lo, hi + 1, 8):
        omega = smale_via_seifert_r5(SeifertFillingR5(sigma, 0)).omega
        hit = omega % 24 == 0
        want = sigma % 16 == 0
        if hit != want:
            bad.append(f"sigma = {sigma}: Omega = {omega}")
    mark = "✓" if not bad else "✗"
    lines.append(
        f"sphere embedding sweep: Ω = 3σ/2 ∈ 24ℤ exactly for "
        f"σ ∈ 16ℤ over [{lo}, {hi}] {mark}"
    )
    lines.extend(bad)
    return CheckReport("hughes-melvin sweep", not bad, tuple(lines))


def torus_summand_obstruction() -> CheckReport:
    """The sphere summand between the two 3-torus embeddings is never an
    embedding.

    F0 and F8 denote torus embeddings bounding Seifert surfaces of
    signatures 0 and 8.  The unique summand h with F0 # h ~ F8 has
    Omega(h) = 12, which misses the sphere embedding set 24Z.
    """
    torus = presentation("t3")
    h = homology_profile(torus)
    wu = Gamma2Element.zero(h.alpha)
    f0 = RegHomotopyClass(wu, i_a(SeifertFillingR5(0, 0), h))
    f8 = RegHomotopyClass(wu, i_a(SeifertFillingR5(8, 0), h))
    summand = solve_for_summand(f0, f8)
    _, sphere_set = _sphere_embedding_set()
    embeddable = is_embedding_class(
        RegHomotopyClass(_trivial_wu(), summand.omega), sphere_set)
    passed = f0.i == 0 and f8.i == 12 and summand.omega == 12 and not embeddable
    mark = "✓" if passed else "✗"
    chain = ("12 = 3/2·8 = i(F₈) = i(F₀ ♯ h) = "
             "i(F₀) + Ω(h) = 0 + Ω(h), "
             "and Ω(h) = 12 ≠ 24k for every integer k")
    lines = (
        f"torus summand obstruction: {chain} {mark}",
        f"  hence the summand between F₀ and F₈ is never an embedding {mark}",
    )
    return CheckReport("torus summand obstruction", passed, lines)


def torus_absorption_sweep(k_lo: int = -10, k_hi: int = 10) -> CheckReport:
    """Every torus embedding absorbs the Omega = 12 sphere immersion.

    For an embedding E bounding signature 8k, i(E # h) = 12(k + 1) with
    Omega(h) = 12; an embedding with the same class is F8 # e_n for
    even k (n = k/2) and F0 # e_n for odd k (n = (k+1)/2), where e_n is
    the sphere embedding with Omega = 24n.
    """
    h, torus_set = _torus_embedding_set()
    wu = Gamma2Element.zero(h.alpha)
    f0_i = i_a(SeifertFillingR5(0, 0), h)
    f8_i = i_a(SeifertFillingR5(8, 0), h)
    bad = []
    for k in range(k_lo, k_hi + 1):
        i_e = i_a(SeifertFillingR5(8 * k, 0), h)
        i_total = i_e + 12
        if i_total != 12 * (k + 1):
            bad.append(f"k = {k}: i(E # h) = {i_total} != 12(k+1)")
            continue
        if k % 2 == 0:
            n = k // 2
            i_match = f8_i + 24 * n
            base = "F8"
        else:
            n = (k + 1) // 2
            i_match = f0_i + 24 * n
            base = "F0"
        if i_match != i_total:
            bad.append(f"k = {k}: {base} # e_{n} gives {i_match} != {i_total}")
            continue
        if not is_embedding_class(RegHomotopyClass(wu, i_total), torus_set):
            bad.append(f"k = {k}: class {i_total} not an embedding class")
    mark = "✓" if not bad else "✗"
    lines = [
        f"torus absorption sweep: i(E ♯ h) = 12(k+1) matched by an "
        f"embedding class for all k in [{k_lo}, {k_hi}] {mark}"
    ]
    lines.extend(bad)
    return CheckReport("torus absorption sweep", not bad, tuple(lines))


def run_reproductions() -> list[CheckReport]:
    return [
        hughes_melvin_sweep(),
        torus_summand_obstruction(),
        torus_absorption_sweep(),
    ]
