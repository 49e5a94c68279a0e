"""Specht modules S^lam in the standard basis {e_t}.

Vectors are sparse dicts from row words to rational functions.  Arithmetic is
done in the permutation module M^lam (basis: row-standard tableaux, no
straightening needed) and projected to S^lam by Garnir straightening.

Straightening of a row-standard, non-standard u: take the leftmost column,
topmost descent ``u[i-1][j] > u[i][j]``.  In t^lam the belt (row i-1 from column
j on, row i up to column j) holds consecutive numbers k..m, and the sum of e_v
over all row-standard redistributions v of k..m inside the belt vanishes in
S^lam.  Writing ``u = g.d`` with g the redistribution that puts the smallest
belt numbers in row i, multiplying that relation by T_d isolates e_u.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeElement, Q_INV, Q_MINUS_1
from .linalg import axpy
from .qcoeff import ONE, Q, RationalFunction, ZERO, rf
from .tableaux import (
    Partition,
    Permutation,
    RowWord,
    Tableau,
    as_partition,
    d_of_row_word,
    dimension,
    inverse,
    is_lattice,
    reduced_word,
    standard_row_words,
    superstandard_row_word,
    transposition,
)

Vec = dict  # RowWord -> RationalFunction

DEFAULT_MAX_DIM = 5000


class DimensionLimitError(RuntimeError):
    """dim S^lam exceeds the configured guard (env SEMINORMAL_MAX_DIM)."""


def max_dim() -> int:
    return int(os.environ.get("SEMINORMAL_MAX_DIM", DEFAULT_MAX_DIM))


class StraighteningError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# permutation module M^lam

def mperm_gen(vec: Mapping[RowWord, RationalFunction], i: int) -> Vec:
    """Right action of T_i on M^lam."""
    out: Vec = {}
    for rw, c in vec.items():
        a, b = rw[i - 1], rw[i]
        if a == b:
            axpy(out, c, {rw: Q})
            continue
        sw = rw[: i - 1] + (b, a) + rw[i + 1 :]
        if a < b:
            axpy(out, c, {sw: ONE})
        else:
            axpy(out, c, {sw: Q, rw: Q_MINUS_1})
    return out


def mperm_word(vec: Mapping[RowWord, RationalFunction], word: Iterable[int]) -> Vec:
    out = dict(vec)
    for i in word:
        out = mperm_gen(out, i)
    return out


def mperm_gen_terms(terms: list, i: int) -> list:
    """Unmerged variant of :func:`mperm_gen` on a list of ``(row word, coeff)`` pairs."""
    out = []
    for rw, c in terms:
        a, b = rw[i - 1], rw[i]
        if a == b:
            out.append((rw, c * Q))
            continue
        sw = rw[: i - 1] + (b, a) + rw[i + 1 :]
        if a < b:
            out.append((sw, c))
        else:
            out.append((sw, c * Q))
            out.append((rw, c * Q_MINUS_1))
    return out


def merge_terms(terms: Iterable[tuple[RowWord, RationalFunction]]) -> Vec:
    out: Vec = {}
    for rw, c in terms:
        axpy(out, c, {rw: ONE})
    return out


# ---------------------------------------------------------------------------
# the module

def _rows_of(rw: RowWord, nrows: int) -> list[list[int]]:
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for k, r in enumerate(rw, start=1):
        rows[r].append(k)
    return rows


class SpechtModule:
    """Standard basis, straightening and generator matrices for one shape."""

    def __init__(self, shape: Sequence[int]):
        self.shape: Partition = as_partition(shape)
        self.n = sum(self.shape)
        self.nrows = len(self.shape)
        dim = dimension(self.shape)
        if dim > max_dim():
            raise DimensionLimitError(
                f"dim S^{self.shape} = {dim} exceeds SEMINORMAL_MAX_DIM={max_dim()}"
            )
        self.basis: tuple[RowWord, ...] = standard_row_words(self.shape)
        self.index = {rw: k for k, rw in enumerate(self.basis)}
        self.top: RowWord = superstandard_row_word(self.shape)
        self._starts = [sum(self.shape[:r]) + 1 for r in range(self.nrows)]
        self._straight: dict[RowWord, Vec] = {}
        self._busy: set[RowWord] = set()
        self._columns: dict[int, list[Vec]] = {}
        self._phi: list[RationalFunction] | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def tableaux(self) -> list[Tableau]:
        return [Tableau.from_row_word(rw) for rw in self.basis]

    # -- straightening -------------------------------------------------------
    def _descent(self, rows: list[list[int]]) -> tuple[int, int] | None:
        for j in range(self.shape[0]):
            for i in range(1, self.nrows):
                if j < len(rows[i]) and rows[i - 1][j] > rows[i][j]:
                    return i, j
        return None

    def garnir_relation(self, rw: RowWord) -> tuple[RowWord, list[RowWord], list[int]]:
        """For a non-standard row word: ``(g, other shuffles, reduced word of d)``."""
        rows = _rows_of(rw, self.nrows)
        pos = self._descent(rows)
        if pos is None:
            raise StraighteningError(f"{rw} is already standard")
        i, j = pos
        k = self._starts[i - 1] + j
        m = self._starts[i] + j
        belt = range(k, m + 1)
        shuffles = []
        for chosen in combinations(belt, j + 1):
            w = list(self.top)
            for x in belt:
                w[x - 1] = i - 1
            for x in chosen:
                w[x - 1] = i
            shuffles.append(tuple(w))
        g = shuffles[0]  # lexicographically first choice = k..k+j in row i
        g_rows = _rows_of(g, self.nrows)
        d = [0] * self.n
        for grow, urow in zip(g_rows, rows):
            for a, b in zip(grow, urow):
                d[a - 1] = b
        return g, shuffles[1:], reduced_word(tuple(d))

    def straighten(self, rw: RowWord) -> Vec:
        """Expansion of e_u (u row-standard) in the standard basis."""
        hit = self._straight.get(rw)
        if hit is not None:
            return hit
        if is_lattice(rw):
            out = {rw: ONE}
            self._straight[rw] = out
            return out
        if rw in self._busy:
            raise StraighteningError(f"straightening cycle at {rw}")
        self._busy.add(rw)
        try:
            g, others, word = self.garnir_relation(rw)
            check = mperm_word({g: ONE}, word)
            if check != {rw: ONE}:
                raise StraighteningError(f"Garnir translate is not length additive at {rw}")
            rest = mperm_word({v: ONE for v in others}, word)
            out: Vec = {}
            for v, c in rest.items():
                axpy(out, -c, self.straighten(v))
        finally:
            self._busy.discard(rw)
        self._straight[rw] = out
        return out

    def project(self, mvec: Mapping[RowWord, RationalFunction]) -> Vec:
        """Image in S^lam of a vector of M^lam."""
        out: Vec = {}
        for rw, c in mvec.items():
            axpy(out, c, self.straighten(rw))
        return out

    # -- generators ------------------------------------------------------------
    def columns(self, i: int) -> list[Vec]:
        """Coordinates of e_t T_i for every basis tableau t (in basis order)."""
        if not 1 <= i < self.n:
            raise ValueError(f"no generator T_{i} for n={self.n}")
        cols = self._columns.get(i)
        if cols is None:
            cols = [self.project(mperm_gen({rw: ONE}, i)) for rw in self.basis]
            self._columns[i] = cols
        return cols

    def act_gen(self, vec: Mapping[RowWord, RationalFunction], i: int) -> Vec:
        cols = self.columns(i)
        out: Vec = {}
        for rw, c in vec.items():
            axpy(out, c, cols[self.index[rw]])
        return out

    def act_word(self, vec: Mapping[RowWord, RationalFunction], w: Permutation) -> Vec:
        return self.act_generators(vec, reduced_word(w))

    def act_generators(self, vec: Mapping[RowWord, RationalFunction], word: Iterable[int]) -> Vec:
        out = dict(vec)
        for i in word:
            out = self.act_gen(out, i)
        return out

    def act_hecke(self, vec: Mapping[RowWord, RationalFunction], h: HeckeElement) -> Vec:
        if h.n > self.n:
            raise ValueError(f"H_{h.n} does not act on a module for n={self.n}")
        out: Vec = {}
        for w, c in h.terms.items():
            w = tuple(w) + tuple(range(len(w) + 1, self.n + 1))
            axpy(out, c, self.act_word(vec, w))
        return out

    def matrix(self, i: int) -> list[list[RationalFunction]]:
        """Matrix A with coordinates(v T_i) = A coordinates(v)."""
        cols = self.columns(i)
        return [[cols[c].get(r, ZERO) for c in range(self.dim)] for r in self.basis]

    # -- Jucys-Murphy elements -------------------------------------------------
    def jm_action(self, vec: Mapping[RowWord, RationalFunction], m: int) -> Vec:
        """v L_m through L_{k+1} = q^-1 (T_k L_k T_k + T_k)."""
        if not 1 <= m <= self.n:
            raise ValueError(f"L_{m} undefined for n={self.n}")
        if m == 1 or not vec:
            return {}
        w = self.act_gen(vec, m - 1)
        inner = self.act_gen(self.jm_action(w, m - 1), m - 1)
        axpy(inner, ONE, w)
        return {rw: c * Q_INV for rw, c in inner.items()}

    def jm_action_sum(self, vec: Mapping[RowWord, RationalFunction], m: int) -> Vec:
        """v L_m from the defining sum of transpositions."""
        out: Vec = {}
        for k in range(1, m):
            axpy(out, RationalFunction.monomial(-k), self.act_word(vec, transposition(m - k, m, self.n)))
        return out

    # -- bilinear form -----------------------------------------------------------
    def symmetrize(self, vec: Mapping[RowWord, RationalFunction]) -> Vec:
        """v x_lam, with x_lam the sum of T_w over the row stabiliser of t^lam."""
        out = dict(vec)
        for s, p in zip(self._starts, self.shape):
            for j in range(1, p):
                # coset representatives of S_j inside S_{j+1} on the block
                acc = dict(out)
                cur = out
                for g in range(s + j - 1, s - 1, -1):
                    cur = self.act_gen(cur, g)
                    axpy(acc, ONE, cur)
                out = acc
        return out

    def phi(self) -> list[RationalFunction]:
        """phi(e_u) with e_u x_lam = phi(e_u) e_lam, for each basis u."""
        if self._phi is None:
            vals = []
            for rw in self.basis:
                img = self.symmetrize({rw: ONE})
                if any(k != self.top for k in img):
                    raise ArithmeticError("e_u x_lam is not a multiple of e_lam")
                vals.append(img.get(self.top, ZERO))
            self._phi = vals
        return self._phi

    def gram_definitional(self) -> list[list[RationalFunction]]:
        """<e_s, e_t> = phi(e_s T_{d(t)^-1}), computed as row vectors."""
        phi = self.phi()
        dim = self.dim
        gram = [[ZERO] * dim for _ in range(dim)]
        for tcol, t in enumerate(self.basis):
            word = reduced_word(inverse(d_of_row_word(t, self.shape)))
            psi = list(phi)
            for i in reversed(word):
                cols = self.columns(i)
                new = []
                for s in range(dim):
                    acc = ZERO
                    for r, c in cols[s].items():
                        x = psi[self.index[r]]
                        if not x.is_zero():
                            acc = acc + x * c
                    new.append(acc)
                psi = new
            for s in range(dim):
                gram[s][tcol] = psi[s]
        return gram


@lru_cache(maxsize=64)
def specht_module(shape: Sequence[int]) -> SpechtModule:
    return SpechtModule(tuple(shape))


def clear_caches() -> None:
    specht_module.cache_clear()


# ---------------------------------------------------------------------------
# public vector type

class SpechtVector:
    """Linear combination of standard basis vectors e_t of S^shape."""

    __slots__ = ("shape", "coeffs")

    def __init__(self, shape: Sequence[int], coeffs: Mapping[RowWord, RationalFunction] | None = None):
        self.shape = tuple(shape)
        self.coeffs: Vec = {}
        for rw, c in (coeffs or {}).items():
            c = rf(c)
            if not c.is_zero():
                self.coeffs[tuple(rw)] = c

    @classmethod
    def basis_vector(cls, t: Tableau) -> "SpechtVector":
        if not t.is_standard():
            raise ValueError(f"{t} is not standard: {t.first_violation()}")
        return cls(t.shape, {t.row_word(): ONE})

    @classmethod
    def from_tableaux(cls, shape, terms: Mapping[Tableau, object]) -> "SpechtVector":
        return cls(shape, {t.row_word(): rf(c) for t, c in terms.items()})

    @property
    def module(self) -> SpechtModule:
        return specht_module(self.shape)

    def terms(self) -> list[tuple[Tableau, RationalFunction]]:
        """Nonzero terms in the fixed basis order."""
        index = self.module.index
        return [(Tableau.from_row_word(rw), c) for rw, c in sorted(self.coeffs.items(), key=lambda kv: index[kv[0]])]

    def coefficient(self, t: Tableau | RowWord) -> RationalFunction:
        rw = t.row_word() if isinstance(t, Tableau) else tuple(t)
        return self.coeffs.get(rw, ZERO)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "SpechtVector") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "SpechtVector") -> "SpechtVector":
        self._check(other)
        acc = dict(self.coeffs)
        axpy(acc, ONE, other.coeffs)
        return SpechtVector(self.shape, acc)

    def __sub__(self, other: "SpechtVector") -> "SpechtVector":
        self._check(other)
        acc = dict(self.coeffs)
        axpy(acc, -ONE, other.coeffs)
        return SpechtVector(self.shape, acc)

    def __neg__(self) -> "SpechtVector":
        return SpechtVector(self.shape, {k: -c for k, c in self.coeffs.items()})

    def scale(self, c) -> "SpechtVector":
        c = rf(c)
        return SpechtVector(self.shape, {k: c * x for k, x in self.coeffs.items()})

    __mul__ = scale
    __rmul__ = scale

    def __eq__(self, other) -> bool:
        return isinstance(other, SpechtVector) and self.shape == other.shape and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        body = " + ".join(f"({c})*e[{t}]" for t, c in self.terms()) or "0"
        return f"SpechtVector({body})"

    def to_json(self) -> list[dict]:
        return [{"tableau": t.to_json(), "coeff": c.to_json()} for t, c in self.terms()]


def act_gen(v: SpechtVector, i: int) -> SpechtVector:
    return SpechtVector(v.shape, v.module.act_gen(v.coeffs, i))


def act_word(v: SpechtVector, w: Permutation) -> SpechtVector:
    return SpechtVector(v.shape, v.module.act_word(v.coeffs, w))


def act_hecke(v: SpechtVector, h: HeckeElement) -> SpechtVector:
    return SpechtVector(v.shape, v.module.act_hecke(v.coeffs, h))


def straighten(u: Tableau) -> SpechtVector:
    if not u.is_row_standard():
        raise ValueError(f"{u} is not row-standard")
    return SpechtVector(u.shape, specht_module(u.shape).straighten(u.row_word()))


def jm_action(v: SpechtVector, m: int) -> SpechtVector:
    return SpechtVector(v.shape, v.module.jm_action(v.coeffs, m))


# ---------------------------------------------------------------------------
# Gram matrices

@dataclass(frozen=True)
class GramMatrix:
    shape: Partition
    order: tuple[Tableau, ...]
    entries: tuple[tuple[RationalFunction, ...], ...]

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "order": [t.to_json() for t in self.order],
            "entries": [[c.to_json() for c in row] for row in self.entries],
        }


def gram_matrix(shape: Sequence[int], route: str = "seminormal") -> GramMatrix:
    """Gram matrix of the form in the standard basis.

    ``route``: ``"seminormal"`` (from the base change and the norms gamma_t),
    ``"definitional"`` (coefficient of e_lam in e_s T_{d(t)^-1} x_lam) or
    ``"oracle"`` (Murphy basis of H_n, n <= 5).
    """
    mod = specht_module(tuple(shape))
    if route == "seminormal":
        from .seminormal import base_change

        entries = base_change(mod.shape, "fast").gram()
    elif route == "definitional":
        entries = mod.gram_definitional()
    elif route == "oracle":
        from .hecke import murphy_basis_oracle

        mb = murphy_basis_oracle(mod.n)
        entries = [[mb.form(mod.shape, s, t) for t in mod.basis] for s in mod.basis]
    else:
        raise ValueError(f"unknown form route {route!r}")
    return GramMatrix(mod.shape, tuple(mod.tableaux()), tuple(tuple(r) for r in entries))


def bilinear_form(u: SpechtVector, v: SpechtVector, route: str = "seminormal") -> RationalFunction:
    u._check(v)
    g = gram_matrix(u.shape, route).entries
    index = u.module.index
    out = ZERO
    for a, ca in u.coeffs.items():
        row = g[index[a]]
        for b, cb in v.coeffs.items():
            x = row[index[b]]
            if not x.is_zero():
                out = out + ca * cb * x
    return out
