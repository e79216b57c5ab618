"""Normalized Seifert invariants and the quasi-linear function N.

A negative-definite Seifert rational homology sphere is described by its
normalized invariants (-b0; (alpha_1, omega_1), ..., (alpha_d, omega_d))
with 0 < omega_i < alpha_i, gcd(alpha_i, omega_i) = 1 and d >= 3 legs.  The
orbifold Euler number e = -b0 + sum_i omega_i/alpha_i must be negative.

The central object is the quasi-linear function

    N(ell) = b0*ell - sum_i ceil(ell*omega_i / alpha_i),

whose nonnegativity locus is the numerical semigroup of the link and whose
(-1)-level set separates the semigroup from the module it acts on.  Derived
scalars: alpha = lcm(alpha_i), |H| = alpha_1...alpha_d*|e|, the orbit order
o = alpha*|e|, and the exponent gamma = (d - 2 - sum_i 1/alpha_i)/|e|.

All ceilings are exact integer ceil-divisions; no floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache, reduce

from .lattice import StarGraph, build_graph, canonical_cycle, cf_value


def ceil_div(a: int, b: int) -> int:
    """Exact ceil(a/b) for b > 0."""
    return -((-a) // b)


def ceil_frac(x: Fraction) -> int:
    return ceil_div(x.numerator, x.denominator)


def floor_frac(x: Fraction) -> int:
    return x.numerator // x.denominator


@dataclass(frozen=True)
class SeifertData:
    """Normalized Seifert invariants (-b0; (alpha_i, omega_i)_i), d >= 3."""

    b0: int
    legs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if int(self.b0) != self.b0:
            raise ValueError("b0 must be an integer")
        object.__setattr__(self, "b0", int(self.b0))
        object.__setattr__(self, "legs", tuple((int(a), int(w)) for a, w in self.legs))
        if len(self.legs) < 3:
            raise ValueError("need at least 3 legs")
        for a, w in self.legs:
            if a < 2 or not (0 < w < a) or math.gcd(a, w) != 1:
                raise ValueError(f"leg ({a}, {w}) is not normalized")
        if self.e >= 0:
            raise ValueError("orbifold Euler number must be negative (got e >= 0)")

    @property
    def d(self) -> int:
        return len(self.legs)

    @property
    def e(self) -> Fraction:
        return -self.b0 + sum(Fraction(w, a) for a, w in self.legs)


@dataclass(frozen=True)
class SeifertInvariants:
    e: Fraction
    alpha: int
    order_h: int
    orbit_order: int
    gamma: Fraction
    omega_prime: tuple[int, ...]


@lru_cache(maxsize=None)
def invariants(sf: SeifertData) -> SeifertInvariants:
    """Derived scalar invariants of the Seifert data."""
    e = sf.e
    alpha = reduce(math.lcm, (a for a, _ in sf.legs))
    order_h = -e * math.prod(a for a, _ in sf.legs)
    orbit_order = -e * alpha
    assert order_h.denominator == 1 and orbit_order.denominator == 1
    gamma = (sf.d - 2 - sum(Fraction(1, a) for a, _ in sf.legs)) / (-e)
    omega_prime = tuple(pow(w, -1, a) for a, w in sf.legs)
    return SeifertInvariants(
        e=e,
        alpha=alpha,
        order_h=int(order_h),
        orbit_order=int(orbit_order),
        gamma=gamma,
        omega_prime=omega_prime,
    )


def quasilinear(sf: SeifertData, ell: int) -> int:
    """N(ell) = b0*ell - sum_i ceil(ell*omega_i/alpha_i), exact for all ell."""
    return sf.b0 * ell - sum(ceil_div(ell * w, a) for a, w in sf.legs)


class QuasilinearTable:
    """O(1) evaluation of N via N(q*alpha + r) = N(r) + q*o.

    The quasi-periodicity is an exact identity on all of Z because alpha is a
    common multiple of the alpha_i, so each ceiling shifts by an integer.
    """

    def __init__(self, sf: SeifertData):
        inv = invariants(sf)
        self.alpha = inv.alpha
        self.orbit_order = inv.orbit_order
        self.base = [quasilinear(sf, r) for r in range(self.alpha)]

    def __call__(self, ell: int) -> int:
        q, r = divmod(ell, self.alpha)
        return self.base[r] + q * self.orbit_order


def tau_sequence(sf: SeifertData, up_to: int) -> list[int]:
    """tau(0) = 0 and tau(ell+1) = tau(ell) + 1 + N(ell); values up to index up_to."""
    if up_to < 0:
        raise ValueError("up_to must be >= 0")
    taus = [0]
    for ell in range(up_to):
        taus.append(taus[-1] + 1 + quasilinear(sf, ell))
    return taus


def ihs_from_alphas(alphas: list[int] | tuple[int, ...]) -> SeifertData:
    """The unique Seifert data of the integral homology sphere with given alphas.

    Requires d >= 3 pairwise coprime alpha_i >= 2.  Then omega_i and b0 are
    pinned by alpha*(b0 - sum_i omega_i/alpha_i) = 1: reducing modulo alpha_i
    gives omega_i * (alpha/alpha_i) = -1 (mod alpha_i), and b0 follows.
    """
    alphas = tuple(int(a) for a in alphas)
    if len(alphas) < 3:
        raise ValueError("need at least 3 alphas")
    if any(a < 2 for a in alphas):
        raise ValueError("alphas must be >= 2")
    for i in range(len(alphas)):
        for j in range(i + 1, len(alphas)):
            if math.gcd(alphas[i], alphas[j]) != 1:
                raise ValueError(f"alphas must be pairwise coprime, got {alphas[i]}, {alphas[j]}")
    alpha = math.prod(alphas)
    omegas = [(-pow(alpha // a, -1, a)) % a for a in alphas]
    b0_frac = Fraction(1, alpha) + sum(Fraction(w, a) for a, w in zip(alphas, omegas))
    assert b0_frac.denominator == 1
    sf = SeifertData(int(b0_frac), tuple(zip(alphas, omegas)))
    assert (-sf.e) * alpha == 1
    return sf


def is_numerically_gorenstein(sf: SeifertData) -> bool:
    """True iff the canonical cycle of the plumbing graph is integral."""
    return canonical_cycle(build_graph(sf)).is_integral()


def geometric_genus(sf: SeifertData) -> int:
    """p_g = sum over ell >= 0 of max(0, -1 - N(ell)); finite since N -> infinity.

    Only levels 0 <= ell <= gamma can contribute, as N(ell) >= -1 above gamma.
    """
    gamma = invariants(sf).gamma
    if gamma < 0:
        return 0
    return sum(max(0, -1 - quasilinear(sf, ell)) for ell in range(floor_frac(gamma) + 1))


def is_rational_link(sf: SeifertData) -> bool:
    """Rationality of the link: the geometric genus vanishes."""
    return geometric_genus(sf) == 0


def from_graph(g: StarGraph) -> SeifertData:
    """Read the normalized Seifert invariants back off a star-shaped graph."""
    legs = []
    for leg in g.legs:
        frac = cf_value([-g.euler[v] for v in leg])
        legs.append((frac.numerator, frac.denominator))
    return SeifertData(-g.euler[0], tuple(legs))
