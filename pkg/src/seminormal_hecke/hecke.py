"""The Iwahori-Hecke algebra of the symmetric group in its T_w basis.

Relations: ``(T_i - q)(T_i + 1) = 0`` plus the braid relations.  Right
multiplication by a generator is

    T_w T_i = T_{w s_i}                      if l(w s_i) > l(w)
    T_w T_i = q T_{w s_i} + (q - 1) T_w       otherwise.

The Murphy basis oracle at the end of the module is deliberately brute force
(dimension n!) and only meant for n <= 5.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Mapping

from .linalg import SparseEchelon, axpy
from .qcoeff import ONE, Q, RationalFunction, ZERO, rf
from .tableaux import (
    Partition,
    Permutation,
    RowWord,
    d_of_row_word,
    identity,
    inverse,
    length,
    mul_simple_right,
    partitions_of,
    reduced_word,
    sigma,
    standard_row_words,
    superstandard,
    transposition,
)

Q_MINUS_1 = Q - 1
Q_INV = Q.inverse()


def _ascends(w: Permutation, i: int) -> bool:
    """True when l(w s_i) > l(w), i.e. i precedes i+1 in one-line notation."""
    for x in w:
        if x == i:
            return True
        if x == i + 1:
            return False
    raise ValueError(f"generator {i} out of range")


class HeckeElement:
    """Finite linear combination of T_w with rational-function coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Permutation, RationalFunction] | None = None):
        self.n = n
        self.terms: dict[Permutation, RationalFunction] = {}
        for w, c in (terms or {}).items():
            c = rf(c)
            if not c.is_zero():
                if len(w) != n:
                    raise ValueError(f"{w} is not in S_{n}")
                self.terms[tuple(w)] = c

    # -- constructors --------------------------------------------------------
    @classmethod
    def one(cls, n: int) -> "HeckeElement":
        return cls(n, {identity(n): ONE})

    @classmethod
    def zero(cls, n: int) -> "HeckeElement":
        return cls(n)

    @classmethod
    def generator(cls, i: int, n: int) -> "HeckeElement":
        return cls(n, {mul_simple_right(identity(n), i): ONE})

    # -- arithmetic ----------------------------------------------------------
    def _same_rank(self, other: "HeckeElement") -> None:
        if self.n != other.n:
            raise ValueError(f"rank mismatch: H_{self.n} vs H_{other.n}")

    def __add__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement(self.n, {identity(self.n): rf(other)})
        self._same_rank(other)
        acc = dict(self.terms)
        axpy(acc, ONE, other.terms)
        return HeckeElement(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return HeckeElement(self.n, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, HeckeElement):
            other = HeckeElement(self.n, {identity(self.n): rf(other)})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "HeckeElement":
        c = rf(c)
        return HeckeElement(self.n, {w: c * x for w, x in self.terms.items()})

    def mul_gen_right(self, i: int) -> "HeckeElement":
        """``self * T_i``."""
        if not 1 <= i < self.n:
            raise ValueError(f"generator T_{i} not in H_{self.n}")
        acc: dict[Permutation, RationalFunction] = {}
        for w, c in self.terms.items():
            ws = mul_simple_right(w, i)
            if _ascends(w, i):
                axpy(acc, c, {ws: ONE})
            else:
                axpy(acc, c, {ws: Q, w: Q_MINUS_1})
        return HeckeElement(self.n, acc)

    def mul_gen_left(self, i: int) -> "HeckeElement":
        """``T_i * self`` via the anti-involution T_w -> T_{w^-1}."""
        return self.star().mul_gen_right(i).star()

    def mul_word(self, w: Permutation) -> "HeckeElement":
        """``self * T_w``."""
        out = self
        for i in reduced_word(w):
            out = out.mul_gen_right(i)
        return out

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            return self.scale(other)
        self._same_rank(other)
        acc: dict[Permutation, RationalFunction] = {}
        for w, c in other.terms.items():
            axpy(acc, c, self.mul_word(w).terms)
        return HeckeElement(self.n, acc)

    def __rmul__(self, other):
        return self.scale(other)

    def star(self) -> "HeckeElement":
        """Anti-involution T_w -> T_{w^-1}."""
        return HeckeElement(self.n, {inverse(w): c for w, c in self.terms.items()})

    def coefficient(self, w: Permutation) -> RationalFunction:
        return self.terms.get(tuple(w), ZERO)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElement) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = [f"({c})*T{list(w)}" for w, c in sorted(self.terms.items(), key=lambda kv: (length(kv[0]), kv[0]))]
        return " + ".join(parts)

    # -- json ------------------------------------------------------------------
    def to_json(self) -> list[dict]:
        items = sorted(self.terms.items(), key=lambda kv: (length(kv[0]), kv[0]))
        return [{"perm": list(w), "coeff": c.to_json()} for w, c in items]

    @classmethod
    def from_json(cls, data: list[dict], n: int | None = None) -> "HeckeElement":
        if n is None:
            if not data:
                raise ValueError("rank needed for an empty element")
            n = len(data[0]["perm"])
        return cls(n, {tuple(d["perm"]): RationalFunction.from_json(d["coeff"]) for d in data})


def t_of_word(w: Permutation) -> HeckeElement:
    return HeckeElement(len(w), {tuple(w): ONE})


def t_range(i: int, j: int, n: int) -> HeckeElement:
    """T_{i,j} = T_{sigma_{i,j}} = T_i T_{i+1} ... T_{j-1}."""
    return t_of_word(sigma(i, j, n))


def jucys_murphy(m: int, n: int) -> HeckeElement:
    """L_m = sum_{k=1}^{m-1} q^{-k} T_{(m-k, m)}."""
    if not 1 <= m <= n:
        raise ValueError(f"L_{m} undefined in H_{n}")
    return HeckeElement(
        n, {transposition(m - k, m, n): RationalFunction.monomial(-k) for k in range(1, m)}
    )


def jucys_murphy_recursive(m: int, n: int) -> HeckeElement:
    """L_m via L_{k+1} = q^-1 T_k L_k T_k + q^-1 T_k, starting from L_1 = 0."""
    if not 1 <= m <= n:
        raise ValueError(f"L_{m} undefined in H_{n}")
    cur = HeckeElement.zero(n)
    for k in range(1, m):
        cur = (cur.mul_gen_left(k).mul_gen_right(k) + HeckeElement.generator(k, n)).scale(Q_INV)
    return cur


def row_bounds(lam: Partition, i: int) -> tuple[int, int]:
    """``(a_i, b_i)``: last entries of rows i-1 and i of t^lam (rows 1-based, i >= 2)."""
    if not 2 <= i <= len(lam):
        raise ValueError(f"row {i} has no predecessor in {lam}")
    return sum(lam[: i - 1]), sum(lam[:i])


def row_sum_R(lam: Partition, i: int) -> HeckeElement:
    """R_i = 1 + T_{a,a+1} + ... + T_{a,b-1} for the rows i-1, i of t^lam."""
    a, b = row_bounds(lam, i)
    n = sum(lam)
    return HeckeElement(n, {sigma(a, c, n): ONE for c in range(a, b)})


# ---------------------------------------------------------------------------
# Murphy basis oracle

MURPHY_ORACLE_MAX_N = 5


def _perm_key(w: Permutation):
    return (length(w), w)


def young_subgroup(lam: Partition) -> list[Permutation]:
    """Elements of the row stabiliser S_lam of t^lam."""
    from itertools import permutations

    n = sum(lam)
    blocks, s = [], 1
    for p in lam:
        blocks.append(list(range(s, s + p)))
        s += p
    out = [()]
    for block in blocks:
        out = [w + p for w in out for p in permutations(block)]
    assert all(len(w) == n for w in out)
    return out


@lru_cache(maxsize=None)
def x_lambda(lam: Partition) -> HeckeElement:
    """x_lam = sum over the row stabiliser of T_w."""
    n = sum(lam)
    return HeckeElement(n, {w: ONE for w in young_subgroup(lam)})


class MurphyBasis:
    """The Murphy basis {x_st} of H_n and expansion of arbitrary elements in it.

    Labels are ``(lam, s, t)`` with s, t row words of standard lam-tableaux.
    """

    def __init__(self, n: int):
        if n > MURPHY_ORACLE_MAX_N:
            raise ValueError(f"Murphy oracle limited to n <= {MURPHY_ORACLE_MAX_N}")
        self.n = n
        self.echelon = SparseEchelon(key=_perm_key)
        self.elements: dict[tuple, HeckeElement] = {}
        for lam in partitions_of(n):
            rws = standard_row_words(lam)
            for s in rws:
                left = x_lambda(lam).mul_word(d_of_row_word(s, lam)).star()
                for t in rws:
                    x = left.mul_word(d_of_row_word(t, lam))
                    label = (lam, s, t)
                    self.elements[label] = x
                    if not self.echelon.add(x.terms, label, ONE):
                        raise ArithmeticError("Murphy elements are linearly dependent")

    def expand(self, h: HeckeElement) -> dict[tuple, RationalFunction]:
        return self.echelon.express(h.terms)

    def specht_image(self, lam: Partition, h: HeckeElement) -> dict[RowWord, RationalFunction]:
        """Image in S^lam of an element of x_lam H_n (reduce modulo more dominant shapes)."""
        from .tableaux import dominance_leq

        top = superstandard(lam).row_word()
        out: dict[RowWord, RationalFunction] = {}
        for (mu, s, t), c in self.expand(h).items():
            if mu == lam:
                if s != top:
                    raise ArithmeticError("element does not lie in x_lam H modulo higher terms")
                out[t] = c
            elif not dominance_leq(lam, mu):
                raise ArithmeticError(f"unexpected shape {mu} below {lam}")
        return out

    def straighten(self, lam: Partition, rw: RowWord) -> dict[RowWord, RationalFunction]:
        """e_u for a row-standard u given by its row word."""
        return self.specht_image(lam, x_lambda(lam).mul_word(d_of_row_word(rw, lam)))

    def action_column(self, lam: Partition, rw: RowWord, i: int) -> dict[RowWord, RationalFunction]:
        """Coordinates of e_t T_i."""
        h = x_lambda(lam).mul_word(d_of_row_word(rw, lam)).mul_gen_right(i)
        return self.specht_image(lam, h)

    def form(self, lam: Partition, s: RowWord, t: RowWord) -> RationalFunction:
        """Coefficient of x_lam in x_lam T_{d(s)} T_{d(t)^-1} x_lam."""
        ds = d_of_row_word(s, lam)
        dt = d_of_row_word(t, lam)
        h = x_lambda(lam).mul_word(ds).mul_word(inverse(dt)) * x_lambda(lam)
        top = superstandard(lam).row_word()
        coords = self.expand(h)
        for (mu, a, b), c in coords.items():
            if mu == lam and (a, b) != (top, top):
                raise ArithmeticError("x_lam h x_lam has unexpected lam-terms")
        return coords.get((lam, top, top), ZERO)


@lru_cache(maxsize=None)
def murphy_basis_oracle(n: int) -> MurphyBasis:
    return MurphyBasis(n)
