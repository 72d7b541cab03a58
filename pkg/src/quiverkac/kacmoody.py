"""Root and weight multiplicities of the Kac-Moody algebra of a graph.

Two independent recursions live here.  Peterson's recursion computes root
multiplicities from the Cartan data alone:

    ((b, b) - 2 ht(b)) c_b = sum over b' + b'' = b, both > 0, of
                             (b', b'') c_{b'} c_{b''},

where c_b = sum over k >= 1 with b/k integral of mult(b/k) / k, and the
pairing ( , ) is the symmetric Cartan form.  Freudenthal's recursion computes
weight multiplicities of the integrable irreducible module with a dominant
integral highest weight, given the positive roots and their multiplicities.
The two meet through framing: the weight multiplicity at highest weight
minus beta equals the root multiplicity of (beta, 1) on the framed quiver,
which is what weight_mult_framed evaluates.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import gcd

from .errors import ConsistencyError, DimensionMismatchError, InputError
from .quiver import DimVector, Quiver, bilinear_form, frame, framed_vector, tits_form


def _by_height(bound: DimVector) -> list[list[DimVector]]:
    """Nonzero vectors 0 < b <= bound grouped by height, heights ascending."""
    total = sum(bound)
    groups: list[list[DimVector]] = [[] for _ in range(total + 1)]
    for e in itertools.product(*(range(b + 1) for b in bound)):
        h = sum(e)
        if h:
            groups[h].append(e)
    return groups[1:]


class RootTable:
    """Peterson data for all 0 < beta <= bound: the root multiplicity and the
    auxiliary value c_beta = sum_k mult(beta/k)/k.  Treat as read-only."""

    __slots__ = ("quiver", "bound", "mult", "c")

    def __init__(self, quiver: Quiver, bound: DimVector, mult, c):
        self.quiver = quiver
        self.bound = bound
        self.mult = mult
        self.c = c

    def multiplicity(self, beta) -> int:
        beta = self.quiver.check_vector(beta, nonneg=True)
        if any(x > b for x, b in zip(beta, self.bound)):
            raise InputError(f"{beta} lies outside the table bound {self.bound}")
        return self.mult[beta]

    def positive_roots(self) -> list[tuple[DimVector, int]]:
        """(beta, mult) for the roots in the table, by height then lex."""
        out = [(b, m) for b, m in self.mult.items() if m > 0]
        out.sort(key=lambda bm: (sum(bm[0]), bm[0]))
        return out


def _divisor_tail(beta: DimVector, mult) -> Fraction:
    # sum over k >= 2 dividing every entry of mult(beta/k) / k
    g = 0
    for x in beta:
        g = gcd(g, x)
    total = Fraction(0)
    for k in range(2, g + 1):
        if g % k == 0:
            total += Fraction(mult[tuple(x // k for x in beta)], k)
    return total


def _decomposition_sum(quiver: Quiver, beta: DimVector, c) -> Fraction:
    """Right side of Peterson's recursion, folding (b', b'') with (b'', b')."""
    total = Fraction(0)
    for b1 in itertools.product(*(range(x + 1) for x in beta)):
        if not any(b1) or b1 == beta:
            continue
        b2 = tuple(x - y for x, y in zip(beta, b1))
        if b1 > b2:
            continue  # the mirrored pair already counted this
        weight = 2 if b1 < b2 else 1
        pairing = bilinear_form(quiver, b1, b2)
        if pairing:
            total += weight * pairing * c[b1] * c[b2]
    return total


def _decomposition_sum_naive(quiver: Quiver, beta: DimVector, c) -> Fraction:
    # every ordered pair once; kept as a cross-check for the folded version
    total = Fraction(0)
    for b1 in itertools.product(*(range(x + 1) for x in beta)):
        if not any(b1) or b1 == beta:
            continue
        b2 = tuple(x - y for x, y in zip(beta, b1))
        total += bilinear_form(quiver, b1, b2) * c[b1] * c[b2]
    return total


def peterson(quiver: Quiver, bound) -> RootTable:
    """Root multiplicities for all 0 < beta <= bound.

    Simple roots seed the recursion with c = mult = 1.  For each later beta
    the linear coefficient on the left is (beta, beta) - 2 ht(beta); when it
    vanishes the recursion only determines c_beta through its divisor tail,
    which forces mult(beta) = 0 and a zero right side.
    """
    bound = quiver.check_vector(bound, nonneg=True)
    mult: dict[DimVector, int] = {}
    c: dict[DimVector, Fraction] = {}
    for group in _by_height(bound):
        for beta in group:
            if sum(beta) == 1:
                mult[beta] = 1
                c[beta] = Fraction(1)
                continue
            lhs = 2 * tits_form(quiver, beta) - 2 * sum(beta)
            rhs = _decomposition_sum(quiver, beta, c)
            tail = _divisor_tail(beta, mult)
            if lhs == 0:
                if rhs != 0:
                    raise ConsistencyError(
                        f"Peterson recursion degenerate at {beta}: zero "
                        f"coefficient against nonzero sum {rhs}"
                    )
                mult[beta] = 0
                c[beta] = tail
                continue
            c_beta = rhs / lhs
            m = c_beta - tail
            if m.denominator != 1 or m < 0:
                raise ConsistencyError(
                    f"multiplicity at {beta} is not a non-negative integer: {m}"
                )
            mult[beta] = int(m)
            c[beta] = c_beta
    return RootTable(quiver, bound, mult, c)


def is_real_root(quiver: Quiver, beta, table: RootTable) -> bool:
    """A root is real exactly when its Tits form is 1."""
    return table.multiplicity(beta) > 0 and tits_form(quiver, beta) == 1


def weight_mult_framed(quiver: Quiver, lam, beta, bound=None) -> int:
    """Weight multiplicity at (highest weight) - beta in the integrable
    irreducible module with highest weight lam, read off as the root
    multiplicity of (beta, 1) on the framed quiver."""
    lam = quiver.check_vector(lam, nonneg=True)
    beta = quiver.check_vector(beta, nonneg=True)
    if bound is None:
        bound = beta
    bound = quiver.check_vector(bound, nonneg=True)
    if any(x > b for x, b in zip(beta, bound)):
        raise InputError(f"beta {beta} exceeds the bound {bound}")
    table = peterson(frame(quiver, lam), framed_vector(bound, 1))
    return table.mult[framed_vector(beta, 1)]


def character_level_one(quiver: Quiver, lam, bound) -> dict[DimVector, int]:
    """All weight multiplicities at drops beta <= bound, from one framed root
    table.  The drop 0 maps to 1 by convention: on the framed quiver the
    vector (0, 1) is the framing simple root."""
    lam = quiver.check_vector(lam, nonneg=True)
    bound = quiver.check_vector(bound, nonneg=True)
    table = peterson(frame(quiver, lam), framed_vector(bound, 1))
    out: dict[DimVector, int] = {}
    for beta in itertools.product(*(range(b + 1) for b in bound)):
        out[beta] = table.mult[framed_vector(beta, 1)]
    return out


class WeightMultTable:
    """Freudenthal multiplicities for all drops 0 <= beta <= bound."""

    __slots__ = ("quiver", "lam", "bound", "mult")

    def __init__(self, quiver: Quiver, lam: DimVector, bound: DimVector, mult):
        self.quiver = quiver
        self.lam = lam
        self.bound = bound
        self.mult = mult

    def multiplicity(self, beta) -> int:
        beta = self.quiver.check_vector(beta, nonneg=True)
        if any(x > b for x, b in zip(beta, self.bound)):
            raise InputError(f"{beta} lies outside the table bound {self.bound}")
        return self.mult[beta]


def weight_mult_freudenthal(
    quiver: Quiver, lam, bound, roots: RootTable | None = None
) -> WeightMultTable:
    """Freudenthal's recursion, independent of the framed route.

    With m the multiplicity function, lam the highest weight, and the pairing
    (lam, g) = sum_i lam_i g_i extended by (rho, g) = ht(g):

        (2 (lam + rho, b) - (b, b)) m_b =
            2 * sum over positive roots a, k >= 1 with b - k a >= 0 of
                mult(a) * m_{b - k a} * ((lam, a) - (b, a) + k (a, a)).

    The left coefficient can only vanish when the right side does, in which
    case the multiplicity is zero.
    """
    lam = quiver.check_vector(lam, nonneg=True)
    bound = quiver.check_vector(bound, nonneg=True)
    if roots is None:
        roots = peterson(quiver, bound)
    else:
        if roots.quiver != quiver:
            raise InputError("root table belongs to a different quiver")
        if any(b > rb for b, rb in zip(bound, roots.bound)):
            raise InputError(
                f"root table bound {roots.bound} does not cover {bound}"
            )
    positive = roots.positive_roots()
    zero = (0,) * quiver.vertex_count
    mult: dict[DimVector, int] = {zero: 1}
    for group in _by_height(bound):
        for beta in group:
            lhs = 2 * (sum(l * b for l, b in zip(lam, beta)) + sum(beta)) - bilinear_form(
                quiver, beta, beta
            )
            rhs = 0
            for alpha, m_alpha in positive:
                if any(a > b for a, b in zip(alpha, beta)):
                    continue
                pair_ba = bilinear_form(quiver, beta, alpha)
                pair_aa = bilinear_form(quiver, alpha, alpha)
                lam_a = sum(l * a for l, a in zip(lam, alpha))
                k = 1
                rest = tuple(b - a for b, a in zip(beta, alpha))
                while all(x >= 0 for x in rest):
                    rhs += m_alpha * mult[rest] * (lam_a - pair_ba + k * pair_aa)
                    k += 1
                    rest = tuple(x - a for x, a in zip(rest, alpha))
            rhs *= 2
            if lhs <= 0:
                if rhs != 0:
                    raise ConsistencyError(
                        f"Freudenthal recursion degenerate at {beta}: "
                        f"coefficient {lhs} against nonzero sum {rhs}"
                    )
                mult[beta] = 0
                continue
            m = Fraction(rhs, lhs)
            if m.denominator != 1 or m < 0:
                raise ConsistencyError(
                    f"weight multiplicity at {beta} is not a non-negative integer: {m}"
                )
            mult[beta] = int(m)
    return WeightMultTable(quiver, lam, bound, mult)
