"""Betti numbers of Nakajima quiver varieties, by two unrelated routes.

A pair (alpha, lam) of dimension vectors determines a smooth quiver variety
of dimension 2d with d = alpha . lam - T(alpha).  Its compactly supported
cohomology sits in even degrees 2d .. 4d and its Poincare polynomial
p = sum h^{2i} q^i is

  * q^d times the Kac polynomial of (alpha, 1) on the framed quiver, and
  * q^d times the alpha-coefficient of (q - 1) * R_1 / R_0, where R_j is the
    framing-degree-j slice of Hua's series of the framed quiver.

The first route goes through plethystic Log, the second through a series
quotient; they must agree coefficient by coefficient, and the CLI exposes
both so they can police each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConsistencyError, InputError
from .kacpoly import framed_slice, kac_polynomial
from .qseries import Q, Box, TruncatedSeries
from .quiver import DimVector, Quiver, frame, framed_vector, half_dimension


@dataclass(frozen=True)
class BettiProfile:
    """Poincare data of one quiver variety.

    ``poly`` holds p = sum_i h_c^{2i} q^i ascending; the empty tuple encodes
    the empty variety.  Coefficients are non-negative and supported in
    degrees d .. 2d, both checked on construction.
    """

    alpha: DimVector
    lam: DimVector
    d: int
    poly: tuple[int, ...]
    empty: bool

    def __post_init__(self):
        if self.empty != (not self.poly):
            raise ConsistencyError("empty flag disagrees with the polynomial")
        if any(c < 0 for c in self.poly):
            raise ConsistencyError(f"negative Betti number in {self.poly}")
        if self.poly:
            low = next(i for i, c in enumerate(self.poly) if c)
            high = len(self.poly) - 1
            if low < self.d or high > 2 * self.d:
                raise ConsistencyError(
                    f"support [{low}, {high}] escapes [d, 2d] = "
                    f"[{self.d}, {2 * self.d}]"
                )

    @property
    def betti(self) -> tuple[tuple[int, int], ...]:
        """(cohomological degree 2i, h_c^{2i}) for the nonzero entries."""
        return tuple((2 * i, c) for i, c in enumerate(self.poly) if c)


def poincare_via_kac(
    quiver: Quiver, alpha, lam, box: Box | None = None
) -> BettiProfile:
    """p = q^d * (Kac polynomial of (alpha, 1) on the framed quiver).

    When (alpha, 1) is not a root the polynomial vanishes and the variety is
    empty; the profile says so instead of erroring.
    """
    alpha = quiver.check_vector(alpha, nonneg=True)
    lam = quiver.check_vector(lam, nonneg=True)
    if box is None:
        box = Box(alpha)
    kp = kac_polynomial(frame(quiver, lam), framed_vector(alpha, 1), Box(box.bound + (1,)))
    d = half_dimension(quiver, alpha, lam)
    if kp.is_zero:
        return BettiProfile(alpha, lam, d, (), True)
    if d < 0:
        raise ConsistencyError(
            f"nonzero count at alpha={alpha}, lam={lam} with negative d={d}"
        )
    return BettiProfile(alpha, lam, d, (0,) * d + kp.coeffs, False)


def poincare_via_hausel(
    quiver: Quiver, lam, box: Box, jobs=None
) -> dict[DimVector, tuple[int, ...]]:
    """The alpha-indexed family q^{-d} p, all at once, through the slice
    quotient (q - 1) * R_1 / R_0.

    Returns, for every alpha in the box, the integer polynomial whose shift
    by q^d is the Poincare polynomial of the (alpha, lam) variety.  Every
    coefficient is checked to be a polynomial with non-negative integer
    coefficients.
    """
    lam = quiver.check_vector(lam, nonneg=True)
    level1 = framed_slice(quiver, lam, 1, box, "hua", jobs)
    level0 = framed_slice(quiver, lam, 0, box, "hua", jobs)
    series = (level1 / level0) * (Q - 1)
    out: dict[DimVector, tuple[int, ...]] = {}
    for e in box.exponents():
        c = series.coefficient(e)
        if not c.is_polynomial():
            raise ConsistencyError(f"slice quotient at {e} is not polynomial: {c}")
        coeffs = c.as_int_polynomial()
        if any(x < 0 for x in coeffs):
            raise ConsistencyError(f"negative coefficient at {e}: {coeffs}")
        out[e] = coeffs
    return out


def profile_via_hausel(
    quiver: Quiver, alpha, lam, box: Box | None = None, jobs=None
) -> BettiProfile:
    """One BettiProfile out of the slice-quotient family."""
    alpha = quiver.check_vector(alpha, nonneg=True)
    lam = quiver.check_vector(lam, nonneg=True)
    if box is None:
        box = Box(alpha)
    elif not box.contains(alpha):
        raise InputError(f"alpha {alpha} lies outside the box {box.bound}")
    coeffs = poincare_via_hausel(quiver, lam, box, jobs)[alpha]
    d = half_dimension(quiver, alpha, lam)
    if not coeffs:
        return BettiProfile(alpha, lam, d, (), True)
    if d < 0:
        raise ConsistencyError(
            f"nonzero count at alpha={alpha}, lam={lam} with negative d={d}"
        )
    return BettiProfile(alpha, lam, d, (0,) * d + coeffs, False)


def weight_mult_via_betti(profile: BettiProfile) -> int:
    """The middle Betti number h_c^{2d}, which is also a weight multiplicity:
    the number of irreducible components of the central fiber."""
    if profile.empty:
        return 0
    return profile.poly[profile.d]


def euler_characteristic(profile: BettiProfile) -> int:
    """Everything sits in even degree, so this is just p(1)."""
    return sum(profile.poly)
