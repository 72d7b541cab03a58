"""Loop-free quivers, their Cartan and Tits data, and framing.

A quiver is a finite directed graph.  Everything downstream (Kac polynomials,
root multiplicities, Betti numbers) only ever sees quivers through this
module, so validation happens here: vertex identifiers are distinct strings,
arrows join declared vertices, and loops are rejected outright.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property

from .errors import ConsistencyError, DimensionMismatchError, InputError, LoopError

DimVector = tuple[int, ...]

#: Reserved identifier for the extra vertex added by ``frame``.
FRAMING_VERTEX = "*"


@dataclass(frozen=True)
class Quiver:
    """A finite quiver without loops.

    ``vertices`` fixes the coordinate order used by every dimension vector;
    ``arrows`` lists (source, target) pairs, one entry per parallel arrow.
    Instances are immutable and hashable, so they can key caches.
    """

    vertices: tuple[str, ...]
    arrows: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple((s, t) for s, t in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise InputError("vertex identifiers must be pairwise distinct")
        declared = set(self.vertices)
        for s, t in self.arrows:
            if s not in declared or t not in declared:
                raise InputError(f"arrow ({s!r}, {t!r}) uses an undeclared vertex")
            if s == t:
                raise LoopError(f"loop at vertex {s!r}")

    @property
    def vertex_count(self) -> int:
        return len(self.vertices)

    @property
    def arrow_count(self) -> int:
        return len(self.arrows)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    def index(self, vertex: str) -> int:
        return self._index[vertex]

    @cached_property
    def arrow_indices(self) -> tuple[tuple[int, int], ...]:
        """Arrows as (source index, target index) pairs."""
        ix = self._index
        return tuple((ix[s], ix[t]) for s, t in self.arrows)

    def check_vector(self, v, nonneg: bool = False) -> DimVector:
        """Coerce ``v`` to a tuple of ints matching this quiver's vertex order."""
        vec = tuple(int(x) for x in v)
        if len(vec) != self.vertex_count:
            raise DimensionMismatchError(
                f"vector of length {len(vec)} against {self.vertex_count} vertices"
            )
        if nonneg and any(x < 0 for x in vec):
            raise InputError(f"vector {vec} has a negative entry")
        return vec

    def reversed(self) -> "Quiver":
        """The same underlying graph with every arrow turned around."""
        return Quiver(self.vertices, tuple((t, s) for s, t in self.arrows))

    @classmethod
    def from_dict(cls, data) -> "Quiver":
        try:
            vertices = tuple(str(v) for v in data["vertices"])
            arrows = tuple((str(a["from"]), str(a["to"])) for a in data.get("arrows", ()))
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed quiver description: {exc}") from exc
        return cls(vertices, arrows)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "arrows": [{"from": s, "to": t} for s, t in self.arrows],
        }


@dataclass(frozen=True)
class CartanData:
    """The symmetric generalized Cartan matrix of a quiver's underlying graph."""

    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        n = len(self.matrix)
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise InputError("Cartan matrix must be square")
            if row[i] != 2:
                raise ConsistencyError("Cartan diagonal must be 2")
            for j, c in enumerate(row):
                if i != j and (c > 0 or c != self.matrix[j][i]):
                    raise ConsistencyError("off-diagonal entries must be symmetric and <= 0")


def cartan_matrix(quiver: Quiver) -> CartanData:
    """c_ii = 2, c_ij = -(number of edges between i and j), any orientation."""
    n = quiver.vertex_count
    m = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for s, t in quiver.arrow_indices:
        m[s][t] -= 1
        m[t][s] -= 1
    return CartanData(tuple(tuple(row) for row in m))


def tits_form(quiver: Quiver, alpha) -> int:
    """T(a) = sum a_i^2 - sum over arrows of a_source * a_target.

    This is half the Cartan pairing of ``alpha`` with itself and does not
    depend on arrow orientation.
    """
    a = quiver.check_vector(alpha)
    total = sum(x * x for x in a)
    for s, t in quiver.arrow_indices:
        total -= a[s] * a[t]
    return total


def bilinear_form(quiver: Quiver, alpha, beta) -> int:
    """The symmetric pairing (a, b) = a^T C b attached to the Cartan matrix C."""
    a = quiver.check_vector(alpha)
    b = quiver.check_vector(beta)
    total = 2 * sum(x * y for x, y in zip(a, b))
    for s, t in quiver.arrow_indices:
        total -= a[s] * b[t] + a[t] * b[s]
    return total


def frame(quiver: Quiver, lam) -> Quiver:
    """Adjoin one framing vertex carrying lam_i arrows into each vertex i.

    The new vertex is appended last, so framed dimension vectors are plain
    concatenations (alpha..., k).  Original vertex order and arrows are kept.
    """
    weights = quiver.check_vector(lam, nonneg=True)
    if FRAMING_VERTEX in quiver.vertices:
        raise InputError(f"quiver already uses the reserved vertex {FRAMING_VERTEX!r}")
    extra = []
    for v, m in zip(quiver.vertices, weights):
        extra.extend((FRAMING_VERTEX, v) for _ in range(m))
    return Quiver(quiver.vertices + (FRAMING_VERTEX,), quiver.arrows + tuple(extra))


def framed_vector(alpha, k: int) -> DimVector:
    """The dimension vector (alpha..., k) on a framed quiver."""
    if k < 0:
        raise InputError("framing multiplicity must be non-negative")
    return tuple(int(x) for x in alpha) + (int(k),)


def half_dimension(quiver: Quiver, alpha, lam) -> int:
    """d = alpha . lam - T(alpha), half the dimension of the moduli space
    attached to (alpha, lam).

    Computed twice, directly and as 1 - T(alpha, 1) on the framed quiver, and
    the two must agree.
    """
    a = quiver.check_vector(alpha, nonneg=True)
    w = quiver.check_vector(lam, nonneg=True)
    direct = sum(x * y for x, y in zip(a, w)) - tits_form(quiver, a)
    framed = 1 - tits_form(frame(quiver, w), framed_vector(a, 1))
    if direct != framed:
        raise ConsistencyError(
            f"dimension mismatch for alpha={a}, lam={w}: {direct} vs {framed}"
        )
    return direct


_KRONECKER = re.compile(r"kronecker([0-9]+)$")


def builtin_quiver(name: str) -> Quiver | None:
    """Quivers addressable by name from the command line; None if unknown."""
    if name == "a1":
        return Quiver(("1",))
    if name == "a2":
        return Quiver(("1", "2"), (("1", "2"),))
    if name == "a3":
        return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3")))
    if name == "d4":
        # three outer vertices feeding the branch vertex, which comes last
        return Quiver(("1", "2", "3", "4"), (("1", "4"), ("2", "4"), ("3", "4")))
    if name == "triangle":
        return Quiver(("1", "2", "3"), (("1", "2"), ("2", "3"), ("3", "1")))
    m = _KRONECKER.match(name)
    if m:
        return Quiver(("1", "2"), (("1", "2"),) * int(m.group(1)))
    return None
