"""Brute-force counts of quiver representations over a prime field.

This is the ground truth the polynomial machinery is measured against: a
representation assigns to each arrow a matrix over F_p, the group prod_i
GL(alpha_i, F_p) acts by base change, and a representation is absolutely
indecomposable exactly when its endomorphism algebra E is local with residue
field F_p, i.e. dim E - dim rad E = 1.  The radical is computed from first
principles as {e in E : x e is nilpotent for every x in E}, which for a
finite-dimensional algebra is the Jacobson radical.

Everything here enumerates, so inputs are gated by a hard cap on the size of
the representation space.
"""

from __future__ import annotations

import itertools
from typing import NamedTuple

from .errors import CapExceededError, ConsistencyError, InputError
from .quiver import DimVector, Quiver

DEFAULT_CAP = 1 << 24


class Mat(NamedTuple):
    """A matrix over F_p carrying its shape, so 0 x n and n x 0 stay distinct."""

    entries: tuple[tuple[int, ...], ...]
    nrows: int
    ncols: int


def _mat(rows, nrows, ncols) -> Mat:
    return Mat(tuple(tuple(r) for r in rows), nrows, ncols)


def _identity(n: int) -> Mat:
    return _mat([[1 if i == j else 0 for j in range(n)] for i in range(n)], n, n)


def _matmul(a: Mat, b: Mat, p: int) -> Mat:
    if a.ncols != b.nrows:
        raise ConsistencyError("shape mismatch in matrix product")
    rows = []
    for i in range(a.nrows):
        ra = a.entries[i]
        rows.append(
            tuple(
                sum(ra[k] * b.entries[k][j] for k in range(a.ncols)) % p
                for j in range(b.ncols)
            )
        )
    return Mat(tuple(rows), a.nrows, b.ncols)


def _all_matrices(nrows: int, ncols: int, p: int) -> list[Mat]:
    cells = nrows * ncols
    out = []
    for flat in itertools.product(range(p), repeat=cells):
        rows = tuple(flat[i * ncols : (i + 1) * ncols] for i in range(nrows))
        out.append(Mat(rows, nrows, ncols))
    return out


def _rank(m: Mat, p: int) -> int:
    rows = [list(r) for r in m.entries]
    rank = 0
    for col in range(m.ncols):
        pivot = next((r for r in range(rank, m.nrows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        rows[rank] = [(x * inv) % p for x in rows[rank]]
        for r in range(m.nrows):
            if r != rank and rows[r][col]:
                f = rows[r][col]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _inverse(m: Mat, p: int) -> Mat:
    n = m.nrows
    aug = [list(m.entries[i]) + [1 if i == j else 0 for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [(x * inv) % p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return _mat([row[n:] for row in aug], n, n)


_GL_CACHE: dict[tuple[int, int], list[Mat]] = {}


def _general_linear(n: int, p: int) -> list[Mat]:
    key = (n, p)
    if key not in _GL_CACHE:
        _GL_CACHE[key] = [m for m in _all_matrices(n, n, p) if _rank(m, p) == n]
    return _GL_CACHE[key]


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _validate(quiver: Quiver, alpha, p: int, cap: int) -> DimVector:
    alpha = quiver.check_vector(alpha, nonneg=True)
    if not _is_prime(p):
        raise InputError(f"{p} is not prime")
    cells = sum(alpha[s] * alpha[t] for s, t in quiver.arrow_indices)
    if p**cells > cap:
        raise CapExceededError(
            f"representation space has {p}^{cells} points, over the cap {cap}"
        )
    return alpha


def _rep_space(quiver: Quiver, alpha: DimVector, p: int):
    """All representations, as tuples of per-arrow matrices of shape
    (alpha_target x alpha_source), in a fixed deterministic order."""
    per_arrow = [
        _all_matrices(alpha[t], alpha[s], p) for s, t in quiver.arrow_indices
    ]
    return itertools.product(*per_arrow)


def _group(quiver: Quiver, alpha: DimVector, p: int):
    """prod_i GL(alpha_i, F_p) with inverses precomputed."""
    out = []
    for g in itertools.product(*(_general_linear(a, p) for a in alpha)):
        out.append((g, tuple(_inverse(gi, p) for gi in g)))
    return out


def _act(g, ginv, x, arrow_indices, p: int):
    return tuple(
        _matmul(_matmul(g[t], xh, p), ginv[s], p)
        for (s, t), xh in zip(arrow_indices, x)
    )


def _orbit_reps(quiver: Quiver, alpha: DimVector, p: int):
    group = _group(quiver, alpha, p)
    arrows = quiver.arrow_indices
    seen = set()
    reps = []
    for x in _rep_space(quiver, alpha, p):
        if x in seen:
            continue
        reps.append(x)
        for g, ginv in group:
            seen.add(_act(g, ginv, x, arrows, p))
    return reps, group


def count_all_iso_classes(quiver: Quiver, alpha, p: int, cap: int = DEFAULT_CAP) -> int:
    """Number of isomorphism classes of representations of dimension alpha.

    Counted twice: by explicit orbit enumeration and by Burnside's lemma over
    the base-change group.  Disagreement is an internal error.
    """
    alpha = _validate(quiver, alpha, p, cap)
    reps, group = _orbit_reps(quiver, alpha, p)
    arrows = quiver.arrow_indices
    fixed = 0
    for g, ginv in group:
        fixed += sum(
            1 for x in _rep_space(quiver, alpha, p) if _act(g, ginv, x, arrows, p) == x
        )
    if fixed % len(group):
        raise ConsistencyError("Burnside sum is not divisible by the group order")
    if fixed // len(group) != len(reps):
        raise ConsistencyError(
            f"orbit count {len(reps)} disagrees with Burnside {fixed // len(group)}"
        )
    return len(reps)


def _nullspace(rows: list[list[int]], ncols: int, p: int) -> list[tuple[int, ...]]:
    """Basis of the solution space of rows . v = 0 over F_p."""
    m = [r[:] for r in rows]
    pivots = []  # (row, col)
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = pow(m[rank][col], p - 2, p)
        m[rank] = [(x * inv) % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        pivots.append((rank, col))
        rank += 1
    pivot_cols = {col for _, col in pivots}
    basis = []
    for free in range(ncols):
        if free in pivot_cols:
            continue
        v = [0] * ncols
        v[free] = 1
        for row, col in pivots:
            v[col] = (-m[row][free]) % p
        basis.append(tuple(v))
    return basis


def _endomorphisms(quiver: Quiver, alpha: DimVector, p: int, x):
    """All elements of End(x) as tuples of per-vertex matrices."""
    offsets = []
    total = 0
    for a in alpha:
        offsets.append(total)
        total += a * a
    rows: list[list[int]] = []
    for (s, t), xh in zip(quiver.arrow_indices, x):
        a_s, a_t = alpha[s], alpha[t]
        for r in range(a_t):
            for cidx in range(a_s):
                row = [0] * total
                for k in range(a_t):  # f_t[r, k] * x[k, cidx]
                    row[offsets[t] + r * a_t + k] += xh.entries[k][cidx]
                for k in range(a_s):  # - x[r, k] * f_s[k, cidx]
                    row[offsets[s] + k * a_s + cidx] -= xh.entries[r][k]
                rows.append([c % p for c in row])
    basis = _nullspace(rows, total, p)

    def unflatten(v):
        mats = []
        for a, off in zip(alpha, offsets):
            mats.append(
                _mat([v[off + i * a : off + (i + 1) * a] for i in range(a)], a, a)
            )
        return tuple(mats)

    elements = []
    for coeffs in itertools.product(range(p), repeat=len(basis)):
        v = [0] * total
        for c, b in zip(coeffs, basis):
            if c:
                for i, bi in enumerate(b):
                    v[i] = (v[i] + c * bi) % p
        elements.append(unflatten(v))
    return elements, len(basis)


def _compose(e, f, p: int):
    return tuple(_matmul(ei, fi, p) for ei, fi in zip(e, f))


def _is_nilpotent(e, alpha: DimVector, p: int) -> bool:
    for mat, a in zip(e, alpha):
        if a == 0:
            continue
        power = mat
        for _ in range(a - 1):
            power = _matmul(power, mat, p)
        if any(any(row) for row in power.entries):
            return False
    return True


def _radical_dim(elements, alpha: DimVector, p: int) -> int:
    rad = [
        e
        for e in elements
        if all(_is_nilpotent(_compose(x, e, p), alpha, p) for x in elements)
    ]
    size = len(rad)
    dim = 0
    while size > 1:
        if size % p:
            raise ConsistencyError("radical size is not a power of the field size")
        size //= p
        dim += 1
    return dim


def count_absolutely_indecomposable(
    quiver: Quiver, alpha, p: int, cap: int = DEFAULT_CAP
) -> int:
    """Number of isomorphism classes whose endomorphism algebra is local with
    one-dimensional residue field, i.e. the absolutely indecomposable ones."""
    alpha = _validate(quiver, alpha, p, cap)
    reps, _ = _orbit_reps(quiver, alpha, p)
    count = 0
    for x in reps:
        elements, dim = _endomorphisms(quiver, alpha, p, x)
        if dim - _radical_dim(elements, alpha, p) == 1:
            count += 1
    return count
