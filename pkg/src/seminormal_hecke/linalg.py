"""Exact linear algebra over a field whose elements support ``+ - * /`` and ``is_zero``.

Used with :class:`RationalFunction` (the field K) and with
:class:`CyclotomicFieldElement` (residue fields at roots of unity).  Vectors are
sparse dicts ``key -> value``; matrices are lists of rows.
"""

from __future__ import annotations

from typing import Callable, Hashable, Iterable, Mapping, Sequence


def axpy(acc: dict, coeff, vec: Mapping) -> None:
    """In place ``acc += coeff * vec``, dropping zeros."""
    for k, v in vec.items():
        cur = acc.get(k)
        new = coeff * v if cur is None else cur + coeff * v
        if new.is_zero():
            acc.pop(k, None)
        else:
            acc[k] = new


class SparseEchelon:
    """Incrementally built echelon basis of a span, able to express vectors in it.

    ``add(vec, label)`` records an input vector; ``express(vec)`` returns the
    coefficients ``{label: c}`` with ``vec = sum c * input[label]``.  Pivots are
    the largest keys under ``key``.
    """

    def __init__(self, key: Callable[[Hashable], object] = lambda k: k):
        self._key = key
        self._rows: dict[Hashable, tuple[dict, dict]] = {}

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, vec: dict, combo: dict) -> tuple[dict, dict]:
        vec = dict(vec)
        while vec:
            lead = max(vec, key=self._key)
            row = self._rows.get(lead)
            if row is None:
                break
            rvec, rcombo = row
            c = vec[lead] / rvec[lead]
            axpy(vec, -c, rvec)
            axpy(combo, -c, rcombo)
        return vec, combo

    def add(self, vec: Mapping, label: Hashable, one) -> bool:
        """Add a vector; returns False (and stores nothing) if it is dependent."""
        red, combo = self._reduce(vec, {label: one})
        if not red:
            return False
        lead = max(red, key=self._key)
        self._rows[lead] = (red, combo)
        return True

    def express(self, vec: Mapping) -> dict:
        out: dict = {}
        vec = dict(vec)
        while vec:
            lead = max(vec, key=self._key)
            row = self._rows.get(lead)
            if row is None:
                raise ValueError("vector is not in the span")
            rvec, rcombo = row
            c = vec[lead] / rvec[lead]
            axpy(vec, -c, rvec)
            axpy(out, c, rcombo)
        return out


def rank(rows: Sequence[Sequence]) -> int:
    """Rank of a dense matrix by Gaussian elimination."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if not m[i][c].is_zero()), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = m[r][c].inverse()
        for i in range(r + 1, len(m)):
            if m[i][c].is_zero():
                continue
            f = m[i][c] * inv
            m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def unitriangular_inverse(mat: Sequence[Sequence], one, zero) -> list[list]:
    """Inverse of a lower-unitriangular matrix (``mat[i][j] = 0`` for j > i)."""
    n = len(mat)
    inv = [[zero] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = one
        for j in range(i - 1, -1, -1):
            acc = zero
            for k in range(j, i):
                if not mat[i][k].is_zero() and not inv[k][j].is_zero():
                    acc = acc + mat[i][k] * inv[k][j]
            inv[i][j] = -acc
    return inv


def matmul(a: Sequence[Sequence], b: Sequence[Sequence], zero) -> list[list]:
    bt = list(zip(*b))
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = zero
            for x, y in zip(row, col):
                if not x.is_zero() and not y.is_zero():
                    acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def transpose(a: Iterable[Sequence]) -> list[list]:
    return [list(c) for c in zip(*a)]
