"""Exact arithmetic in Q(q) and box-truncated multivariate series.

Two layers live here.  ``RationalFunction`` is a quotient of integer
polynomials in one variable q, always reduced to lowest terms, so equality is
plain tuple comparison.  ``TruncatedSeries`` is a multivariate power series
with RationalFunction coefficients, truncated to a rectangular box of
exponents; products simply discard exponents that leave the box, which keeps
every in-box coefficient exact.  On top of the series ring sit the lambda-ring
operations: Adams substitutions, plethystic Exp, and its inverse Log.

No floating point is used anywhere in this module.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DimensionMismatchError, InputError

Poly = tuple[int, ...]  # coefficients by ascending degree, no trailing zeros


# ------------------------------------------------------------ Z[q] helpers

def _ptrim(coeffs) -> Poly:
    cs = list(coeffs)
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _ptrim(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)  # leading product of nonzero leads is nonzero


def _pcontent(a: Poly) -> int:
    g = 0
    for c in a:
        g = math.gcd(g, c)
    return g


def _psubst_power(a: Poly, n: int) -> Poly:
    """q -> q^n."""
    if not a:
        return ()
    out = [0] * ((len(a) - 1) * n + 1)
    for i, c in enumerate(a):
        out[i * n] = c
    return tuple(out)


def _peval(a: Poly, x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _pfrem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    """Remainder of a by b over Q; b nonzero, both trimmed."""
    r = a[:]
    db = len(b) - 1
    lead = b[-1]
    while r and len(r) - 1 >= db:
        coef = r[-1] / lead
        k = len(r) - 1 - db
        for i in range(db + 1):
            r[i + k] -= coef * b[i]
        while r and r[-1] == 0:
            r.pop()
    return r


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Primitive gcd in Z[q] with positive leading coefficient."""
    fa = [Fraction(c) for c in a]
    fb = [Fraction(c) for c in b]
    while fb:
        fa, fb = fb, _pfrem(fa, fb)
    if not fa:
        return ()
    mult = math.lcm(*(c.denominator for c in fa))
    ints = [int(c * mult) for c in fa]
    cont = 0
    for c in ints:
        cont = math.gcd(cont, c)
    ints = [c // cont for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return tuple(ints)


def _pdivexact(a: Poly, b: Poly) -> Poly:
    """Exact quotient a / b; raises if the division leaves a remainder."""
    fa = [Fraction(c) for c in a]
    db = len(b) - 1
    lead = Fraction(b[-1])
    out = [Fraction(0)] * (len(a) - db)
    while fa and len(fa) - 1 >= db:
        coef = fa[-1] / lead
        k = len(fa) - 1 - db
        out[k] = coef
        for i in range(db + 1):
            fa[i + k] -= coef * b[i]
        while fa and fa[-1] == 0:
            fa.pop()
    if fa:
        raise ArithmeticError("inexact polynomial division")
    if any(c.denominator != 1 for c in out):
        raise ArithmeticError("inexact polynomial division")
    return _ptrim(int(c) for c in out)


def _poly_str(a: Poly) -> str:
    if not a:
        return "0"
    pieces = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            term = str(abs(c))
        else:
            var = "q" if i == 1 else f"q^{i}"
            term = var if abs(c) == 1 else f"{abs(c)}*{var}"
        if not pieces:
            pieces.append(term if c > 0 else f"-{term}")
        else:
            pieces.append(f"+ {term}" if c > 0 else f"- {term}")
    return " ".join(pieces)


# ------------------------------------------------------- rational functions

class RationalFunction:
    """A reduced fraction of integer polynomials in q.

    Canonical form: numerator and denominator share no polynomial factor, the
    integer content of the pair is 1, and the denominator's leading
    coefficient is positive.  Zero is ()/(1,).  Because the representation is
    canonical, __eq__ and __hash__ are structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=(), den=(1,)):
        if isinstance(num, int):
            num = (num,)
        if isinstance(den, int):
            den = (den,)
        num = _ptrim(num)
        den = _ptrim(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            self.num = ()
            self.den = (1,)
            return
        if den != (1,):
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivexact(num, g)
                den = _pdivexact(den, g)
            c = math.gcd(_pcontent(num), _pcontent(den))
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
            if den[-1] < 0:
                num = _pneg(num)
                den = _pneg(den)
        self.num = num
        self.den = den

    # -- constructors

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "RationalFunction":
        return cls((fr.numerator,), (fr.denominator,))

    @classmethod
    def q_power(cls, k: int) -> "RationalFunction":
        """q^k, with negative k allowed."""
        if k >= 0:
            return cls((0,) * k + (1,))
        return cls((1,), (0,) * (-k) + (1,))

    # -- structure

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def as_int_polynomial(self) -> Poly:
        """Ascending coefficients, or ValueError if not a polynomial."""
        if not self.is_polynomial():
            raise ValueError(f"not a polynomial: {self}")
        return self.num

    # -- arithmetic

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction((other,))
        if isinstance(other, Fraction):
            return RationalFunction.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(
            _padd(_pmul(self.num, o.den), _pmul(o.num, self.den)),
            _pmul(self.den, o.den),
        )

    __radd__ = __add__

    def __neg__(self):
        out = RationalFunction.__new__(RationalFunction)
        out.num = _pneg(self.num)
        out.den = self.den
        return out

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalFunction(_pmul(self.num, o.num), _pmul(self.den, o.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(_pmul(self.num, o.den), _pmul(self.den, o.num))

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k < 0:
            return (ONE / self) ** (-k)
        out = ONE
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self.num)

    # -- lambda-ring / evaluation

    def adams(self, n: int) -> "RationalFunction":
        """Substitute q -> q^n (n >= 1)."""
        if n < 1:
            raise InputError("Adams operations need n >= 1")
        if n == 1:
            return self
        return RationalFunction(_psubst_power(self.num, n), _psubst_power(self.den, n))

    def eval_at(self, q0) -> Fraction:
        x = Fraction(q0)
        d = _peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole at q = {q0}")
        return _peval(self.num, x) / d

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.den == (1,):
            return _poly_str(self.num)
        return f"({_poly_str(self.num)})/({_poly_str(self.den)})"


ZERO = RationalFunction()
ONE = RationalFunction((1,))
Q = RationalFunction((0, 1))


# ------------------------------------------------------- truncated series

@dataclass(frozen=True)
class Box:
    """A rectangular truncation region: all exponent vectors e <= bound."""

    bound: tuple[int, ...]

    def __post_init__(self):
        b = tuple(int(x) for x in self.bound)
        if any(x < 0 for x in b):
            raise InputError(f"box bound {b} has a negative entry")
        object.__setattr__(self, "bound", b)

    @property
    def nvars(self) -> int:
        return len(self.bound)

    def contains(self, e) -> bool:
        return all(0 <= x <= b for x, b in zip(e, self.bound))

    def exponents(self):
        """All exponent vectors in the box, lexicographically ascending."""
        return itertools.product(*(range(b + 1) for b in self.bound))


class TruncatedSeries:
    """A finite sum of monomials x^e with RationalFunction coefficients,
    supported inside a Box.  Multiplication silently drops any product
    exponent that leaves the box; within the box all coefficients are exact.
    """

    __slots__ = ("box", "terms")

    def __init__(self, box: Box, terms=None):
        store: dict[tuple[int, ...], RationalFunction] = {}
        for e, c in (terms or {}).items():
            e = tuple(int(x) for x in e)
            if len(e) != box.nvars:
                raise DimensionMismatchError(
                    f"exponent {e} in a {box.nvars}-variable box"
                )
            if any(x < 0 for x in e):
                raise InputError(f"negative exponent {e}")
            if not box.contains(e):
                continue
            rf = RationalFunction._coerce(c)
            if rf is None:
                raise TypeError(f"bad coefficient {c!r}")
            if rf:
                store[e] = rf
        self.box = box
        self.terms = store

    # -- constructors

    @classmethod
    def zero(cls, box: Box) -> "TruncatedSeries":
        return cls(box)

    @classmethod
    def one(cls, box: Box) -> "TruncatedSeries":
        return cls(box, {(0,) * box.nvars: ONE})

    @classmethod
    def monomial(cls, box: Box, e, coeff=1) -> "TruncatedSeries":
        return cls(box, {tuple(e): coeff})

    # -- inspection

    def coefficient(self, e) -> RationalFunction:
        return self.terms.get(tuple(e), ZERO)

    @property
    def constant_term(self) -> RationalFunction:
        return self.terms.get((0,) * self.box.nvars, ZERO)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def support(self):
        return sorted(self.terms)

    def _check_same_box(self, other: "TruncatedSeries"):
        if self.box != other.box:
            raise DimensionMismatchError("series live in different boxes")

    # -- ring operations

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_box(other)
            out = dict(self.terms)
            for e, c in other.terms.items():
                s = out.get(e, ZERO) + c
                if s:
                    out[e] = s
                else:
                    out.pop(e, None)
            res = TruncatedSeries.__new__(TruncatedSeries)
            res.box = self.box
            res.terms = out
            return res
        rf = RationalFunction._coerce(other)
        if rf is None:
            return NotImplemented
        return self + TruncatedSeries(self.box, {(0,) * self.box.nvars: rf})

    __radd__ = __add__

    def __neg__(self):
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.box = self.box
        res.terms = {e: -c for e, c in self.terms.items()}
        return res

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        rf = RationalFunction._coerce(other)
        if rf is None:
            return NotImplemented
        return self + (-rf)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._check_same_box(other)
            bound = self.box.bound
            out: dict[tuple[int, ...], RationalFunction] = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(x + y for x, y in zip(e1, e2))
                    if any(x > b for x, b in zip(e, bound)):
                        continue
                    prod = c1 * c2
                    s = out.get(e)
                    s = prod if s is None else s + prod
                    if s:
                        out[e] = s
                    else:
                        out.pop(e, None)
            res = TruncatedSeries.__new__(TruncatedSeries)
            res.box = self.box
            res.terms = out
            return res
        rf = RationalFunction._coerce(other)
        if rf is None:
            return NotImplemented
        if not rf:
            return TruncatedSeries.zero(self.box)
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.box = self.box
        res.terms = {e: c * rf for e, c in self.terms.items()}
        return res

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return self * other.inverse()
        rf = RationalFunction._coerce(other)
        if rf is None:
            return NotImplemented
        return self * (ONE / rf)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.box == other.box and self.terms == other.terms

    def __repr__(self):
        inside = ", ".join(f"{e}: {c}" for e, c in sorted(self.terms.items()))
        return f"TruncatedSeries({self.box.bound}, {{{inside}}})"

    # -- multiplicative inverse

    def inverse(self) -> "TruncatedSeries":
        """Inverse of a series whose constant term is nonzero."""
        c = self.constant_term
        if not c:
            raise InputError("series with zero constant term is not invertible")
        cinv = ONE / c
        u = TruncatedSeries.one(self.box) - self * cinv
        acc = TruncatedSeries.one(self.box)
        power = TruncatedSeries.one(self.box)
        for _ in range(sum(self.box.bound)):
            power = power * u
            if power.is_zero:
                break
            acc = acc + power
        return acc * cinv

    # -- Adams substitution

    def adams(self, n: int) -> "TruncatedSeries":
        """Coefficientwise q -> q^n together with exponent scaling e -> n*e;
        scaled exponents that leave the box are dropped."""
        if n < 1:
            raise InputError("Adams operations need n >= 1")
        if n == 1:
            return self
        bound = self.box.bound
        out = {}
        for e, c in self.terms.items():
            ne = tuple(n * x for x in e)
            if all(x <= b for x, b in zip(ne, bound)):
                out[ne] = c.adams(n)
        res = TruncatedSeries.__new__(TruncatedSeries)
        res.box = self.box
        res.terms = out
        return res


# ----------------------------------------------- exp / log / Exp / Log

def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """Ordinary exponential; needs zero constant term, so the Taylor sum is
    finite inside the box."""
    if s.constant_term:
        raise InputError("series_exp needs a zero constant term")
    acc = TruncatedSeries.one(s.box)
    power = TruncatedSeries.one(s.box)
    for k in range(1, sum(s.box.bound) + 1):
        power = power * s
        if power.is_zero:
            break
        acc = acc + power * Fraction(1, math.factorial(k))
    return acc


def series_log(s: TruncatedSeries) -> TruncatedSeries:
    """Ordinary logarithm; needs constant term exactly 1."""
    if s.constant_term != ONE:
        raise InputError("series_log needs constant term 1")
    u = s - TruncatedSeries.one(s.box)
    acc = TruncatedSeries.zero(s.box)
    power = TruncatedSeries.one(s.box)
    for k in range(1, sum(s.box.bound) + 1):
        power = power * u
        if power.is_zero:
            break
        acc = acc + power * Fraction((-1) ** (k + 1), k)
    return acc


def moebius(k: int) -> int:
    """The Moebius function: 0 on non-squarefree k, else (-1)^(#prime factors)."""
    if k < 1:
        raise InputError("moebius needs k >= 1")
    out = 1
    d = 2
    while d * d <= k:
        if k % d == 0:
            k //= d
            if k % d == 0:
                return 0
            out = -out
        d += 1
    if k > 1:
        out = -out
    return out


def _adams_cutoff(box: Box) -> int:
    # Past k = max(bound) every Adams image of a non-constant term leaves
    # the box, and both Exp and Log only feed non-constant series to adams.
    return max(box.bound, default=0)


def plethystic_exp(s: TruncatedSeries) -> TruncatedSeries:
    """Exp(s) = exp(sum over k >= 1 of adams(s, k) / k), for s with zero
    constant term.  Inverse of plethystic_log on series with constant term 1.
    """
    if s.constant_term:
        raise InputError("plethystic_exp needs a zero constant term")
    acc = TruncatedSeries.zero(s.box)
    for k in range(1, _adams_cutoff(s.box) + 1):
        t = s.adams(k)
        if t.is_zero:
            break
        acc = acc + t * Fraction(1, k)
    return series_exp(acc)


def plethystic_log(s: TruncatedSeries) -> TruncatedSeries:
    """Log(s) = sum over k >= 1 of moebius(k)/k * adams(log(s), k), for s with
    constant term 1."""
    ell = series_log(s)
    acc = TruncatedSeries.zero(s.box)
    for k in range(1, _adams_cutoff(s.box) + 1):
        t = ell.adams(k)
        if t.is_zero:
            break
        m = moebius(k)
        if m:
            acc = acc + t * Fraction(m, k)
    return acc
