"""Brieskorn-Hamm complete intersection links that are rational homology spheres.

An exponent tuple (a_1, ..., a_n), n >= 3, a_i >= 2, gives a rational
homology sphere exactly when, after a permutation, it has one of two shapes:

* case (i): (m*p_1, m*p_2, p_3, ..., p_n) with the p_i pairwise coprime and
  gcd(m, p_i) = 1 for i >= 3.  The Seifert multiplicities are alpha_i = p_i,
  with leg counts s_1 = s_2 = 1 and s_i = m for i >= 3, and the generic
  orbit has order one.
* case (ii): (2^c*p_1, 2*p_2, 2*p_3, p_4, ..., p_n) with the p_i odd and
  pairwise coprime, c >= 1.  Then alpha_1 = 2^(c-1)*p_1, alpha_i = p_i for
  i >= 2, leg counts are (2, 2, 2, 4, 4, ...), and the orbit order is two.

Anything else has positive base genus and is out of scope.

For both shapes the semigroup of the link is generated by explicit products
of complementary multiplicities; the Seifert data is synthesised from the
congruence omega_i * (lcm(a)/a_i) = -1 (mod alpha_i) in case (i), and in
case (ii) by searching the finitely many normalized candidates compatible
with orbit order two and keeping the ones whose semigroup matches the
generator list (the lexicographically least passing choice is returned).
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Sequence

from .semigroup import apery_selmer, monoid_sieve
from .seifert import QuasilinearTable, SeifertData, invariants

CASE_I = "case_i"
CASE_II = "case_ii"
NOT_QHS = "not_qhs"


@dataclass(frozen=True)
class BHClassification:
    """Outcome of the rational-homology-sphere recognition.

    For a match, ``p`` lists the coprime cores in slot order, ``alphas`` the
    Seifert multiplicities per slot, and ``multiplicities`` how many legs
    each slot contributes; ``m`` (case i) or ``c`` (case ii) is the extra
    parameter.
    """

    case: str
    exponents: tuple[int, ...]
    p: tuple[int, ...] | None = None
    alphas: tuple[int, ...] | None = None
    multiplicities: tuple[int, ...] | None = None
    m: int | None = None
    c: int | None = None


def _pairwise_coprime(nums: Sequence[int]) -> bool:
    for i in range(len(nums)):
        for j in range(i + 1, len(nums)):
            if math.gcd(nums[i], nums[j]) != 1:
                return False
    return True


def classify(exponents: Sequence[int]) -> BHClassification:
    """Decide which of the two rational-homology-sphere shapes fits, if any."""
    a = tuple(int(x) for x in exponents)
    if len(a) < 3:
        raise ValueError("need at least 3 exponents")
    if any(x < 2 for x in a):
        raise ValueError("exponents must be >= 2")
    n = len(a)

    for i, j in itertools.combinations(range(n), 2):
        m = math.gcd(a[i], a[j])
        rest = [a[k] for k in range(n) if k not in (i, j)]
        p = [a[i] // m, a[j] // m] + rest
        if not _pairwise_coprime(p):
            continue
        if any(math.gcd(m, pk) != 1 for pk in rest):
            continue
        return BHClassification(
            case=CASE_I,
            exponents=a,
            p=tuple(p),
            alphas=tuple(p),
            multiplicities=(1, 1) + (m,) * (n - 2),
            m=m,
        )

    twos = [(x & -x).bit_length() - 1 for x in a]
    for i1 in range(n):
        c = twos[i1]
        if c < 1:
            continue
        others = [k for k in range(n) if k != i1]
        singles = [k for k in others if twos[k] == 1]
        if len(singles) != 2 or any(twos[k] != 0 for k in others if k not in singles):
            continue
        i2, i3 = singles
        rest = [k for k in others if k not in singles]
        p = [a[i1] >> c, a[i2] // 2, a[i3] // 2] + [a[k] for k in rest]
        if not _pairwise_coprime(p):
            continue
        alphas = (2 ** (c - 1) * p[0],) + tuple(p[1:])
        return BHClassification(
            case=CASE_II,
            exponents=a,
            p=tuple(p),
            alphas=alphas,
            multiplicities=(2, 2, 2) + (4,) * (n - 3),
            c=c,
        )

    return BHClassification(case=NOT_QHS, exponents=a)


def bh_generators(cls: BHClassification) -> list[int]:
    """Minimal generators of the semigroup of the link, from the classification."""
    if cls.case == NOT_QHS:
        raise ValueError("not a rational homology sphere")
    alphas = cls.alphas
    total = math.prod(alphas)
    hats = [total // x for x in alphas]
    if cls.case == CASE_I:
        gens = hats[:2] + [cls.m * h for h in hats[2:]]
    else:
        gens = hats[:3] + [2 * h for h in hats[3:]]
    return sorted(set(gens))


def _leg_list(cls: BHClassification, omegas: Sequence[int]) -> tuple[tuple[int, int], ...]:
    legs = []
    for alpha, s, w in zip(cls.alphas, cls.multiplicities, omegas):
        if alpha == 1:
            continue
        legs.extend([(alpha, w)] * s)
    return tuple(legs)


def bh_seifert(cls: BHClassification) -> SeifertData:
    """Seifert data of the link; validated against the generator theorem.

    Case (i) is direct: omega_i solves omega_i*q_i = -1 (mod alpha_i) with
    q_i = lcm(a)/a_i, and b0 makes the orbit order one.  Case (ii) searches
    the normalized (omega_i, b0) with orbit order two and accepts the
    lexicographically least choice whose semigroup membership reproduces the
    monoid of :func:`bh_generators` on [0, f + 2*alpha].
    """
    if cls.case == NOT_QHS:
        raise ValueError("not a rational homology sphere")
    big_lcm = math.lcm(*cls.exponents)
    alpha = math.prod(cls.alphas)  # pairwise coprime slots, = lcm of the legs

    if cls.case == CASE_I:
        omegas = [
            pow(big_lcm // a_i, -1, alpha_i) * (alpha_i - 1) % alpha_i if alpha_i > 1 else 0
            for a_i, alpha_i in zip(_slot_exponents(cls), cls.alphas)
        ]
        legs = _leg_list(cls, omegas)
        if len(legs) < 3:
            raise ValueError("degenerate input: fewer than 3 legs after dropping trivial slots")
        target = 1
    else:
        best = None
        gens = bh_generators(cls)
        unit_ranges = [
            [w for w in range(1, a) if math.gcd(w, a) == 1] if a > 1 else [0]
            for a in cls.alphas
        ]
        for omegas in itertools.product(*unit_ranges):
            legs = _leg_list(cls, omegas)
            if len(legs) < 3:
                raise ValueError("degenerate input: fewer than 3 legs after dropping trivial slots")
            num = 2 + sum(w * (alpha // a) for a, w in legs)
            if num % alpha:
                continue
            cand = SeifertData(num // alpha, legs)
            if _matches_generators(cand, gens):
                best = cand
                break
        if best is None:
            raise ArithmeticError(
                f"no normalized Seifert data with orbit order 2 matches the generators {gens} "
                f"for exponents {cls.exponents}"
            )
        return best

    num = target + sum(w * (alpha // a) for a, w in legs)
    assert num % alpha == 0, "orbit-order constraint must have an integer solution"
    sf = SeifertData(num // alpha, legs)
    assert invariants(sf).orbit_order == target
    return sf


def _slot_exponents(cls: BHClassification) -> tuple[int, ...]:
    """The exponent a_i attached to each classification slot, in slot order."""
    if cls.case == CASE_I:
        return (cls.m * cls.p[0], cls.m * cls.p[1]) + cls.p[2:]
    return (2**cls.c * cls.p[0], 2 * cls.p[1], 2 * cls.p[2]) + cls.p[3:]


def _matches_generators(sf: SeifertData, gens: list[int]) -> bool:
    """Membership of the monoid of ``gens`` equals {N >= 0} on [0, f + 2*alpha]."""
    inv = invariants(sf)
    if inv.orbit_order != 2:
        return False
    f = apery_selmer(sf).frobenius
    hi = max(f, 0) + 2 * inv.alpha
    table = monoid_sieve(gens, hi)
    n = QuasilinearTable(sf)
    return all(bool(table[ell]) == (n(ell) >= 0) for ell in range(hi + 1))
