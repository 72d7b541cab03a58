"""Kac polynomials via Hua's formula.

The route is: for each dimension vector alpha, Hua's formula gives a rational
function in q as a sum over multipartitions of alpha,

    hua_term(alpha) = sum_{|mu| = alpha} q^(-T(mu)) / prod_i phi_{mu^i}(1/q),

where T is the Tits-form statistic over multipartition rows and phi the
q-Pochhammer product over successive part differences.  Assembling these into
a truncated series and applying (q - 1) * plethystic Log yields, coefficient
by coefficient, the Kac polynomials: the counts of absolutely indecomposable
representations over finite fields as polynomials in the field size.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import ConsistencyError, InputError
from .partitions import enumerate_multipartitions, partition_pochhammer, tits_statistic
from .qseries import ONE, Q, Box, RationalFunction, TruncatedSeries, plethystic_log
from .quiver import DimVector, Quiver, frame

# Terms for distinct alpha are independent, so a sweep can farm them out to
# worker processes; results land here keyed by (quiver, alpha).
_HUA_CACHE: dict[tuple[Quiver, DimVector], RationalFunction] = {}


def hua_term(quiver: Quiver, alpha) -> RationalFunction:
    """The alpha-coefficient of Hua's series, a rational function in q."""
    alpha = quiver.check_vector(alpha, nonneg=True)
    key = (quiver, alpha)
    cached = _HUA_CACHE.get(key)
    if cached is not None:
        return cached
    total = RationalFunction()
    for mp in enumerate_multipartitions(alpha):
        denom = ONE
        for mu in mp:
            denom = denom * partition_pochhammer(mu, at_inverse=True)
        total = total + RationalFunction.q_power(-tits_statistic(quiver, mp)) / denom
    _HUA_CACHE[key] = total
    return total


def _hua_term_task(args):
    return hua_term(*args)


def _prefill(quiver: Quiver, box: Box, jobs) -> None:
    todo = [e for e in box.exponents() if (quiver, e) not in _HUA_CACHE]
    if not jobs or jobs <= 1 or len(todo) < 8:
        return
    try:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_hua_term_task, [(quiver, e) for e in todo]))
    except OSError:
        return  # no subprocess support here; fall back to in-process work
    for e, val in zip(todo, results):
        _HUA_CACHE[(quiver, e)] = val


def hua_series(quiver: Quiver, box: Box, jobs=None) -> TruncatedSeries:
    """Hua's series truncated to the box: sum of hua_term(e) * x^e."""
    if box.nvars != quiver.vertex_count:
        raise InputError(
            f"{box.nvars}-variable box on a {quiver.vertex_count}-vertex quiver"
        )
    _prefill(quiver, box, jobs)
    return TruncatedSeries(box, {e: hua_term(quiver, e) for e in box.exponents()})


def kac_series(quiver: Quiver, box: Box, jobs=None) -> TruncatedSeries:
    """(q - 1) * Log of Hua's series.

    Each coefficient must come out a polynomial in q with integer
    coefficients; anything else means an arithmetic bug, so it is refused.
    """
    series = (Q - 1) * plethystic_log(hua_series(quiver, box, jobs))
    for e, c in series.terms.items():
        if not c.is_polynomial():
            raise ConsistencyError(f"coefficient at {e} is not a polynomial: {c}")
    return series


@dataclass(frozen=True)
class KacPolynomial:
    """The counting polynomial of absolutely indecomposable representations
    of a quiver in a fixed dimension vector."""

    quiver: Quiver
    alpha: DimVector
    coeffs: tuple[int, ...]  # ascending in q, () when identically zero

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("the zero polynomial has no degree")
        return len(self.coeffs) - 1

    def eval_at(self, q0) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q0 + c
        return acc


def kac_polynomial(quiver: Quiver, alpha, box: Box | None = None) -> KacPolynomial:
    """The Kac polynomial at alpha, via the series route.

    The default box is alpha itself, which is exactly the region Log needs to
    make the alpha-coefficient correct.
    """
    alpha = quiver.check_vector(alpha, nonneg=True)
    if box is None:
        box = Box(alpha)
    elif not box.contains(alpha):
        raise InputError(f"alpha {alpha} lies outside the box {box.bound}")
    series = kac_series(quiver, box)
    return KacPolynomial(quiver, alpha, series.coefficient(alpha).as_int_polynomial())


def framed_slice(
    quiver: Quiver, lam, level: int, box: Box, which: str = "hua", jobs=None
) -> TruncatedSeries:
    """Compute a series on the framed quiver and keep one framing degree.

    The framed quiver gets the box (box.bound..., level); the returned series
    lives back in the original variables and holds the coefficients whose
    framing exponent equals ``level``.  ``which`` picks Hua's series or the
    Kac series.
    """
    if which not in ("hua", "kac"):
        raise InputError(f"unknown series kind {which!r}")
    if level < 0:
        raise InputError("framing degree must be non-negative")
    lam = quiver.check_vector(lam, nonneg=True)
    framed = frame(quiver, lam)
    fbox = Box(box.bound + (level,))
    series = (hua_series if which == "hua" else kac_series)(framed, fbox, jobs)
    kept = {e[:-1]: c for e, c in series.terms.items() if e[-1] == level}
    return TruncatedSeries(box, kept)
