"""Partitions, tableaux, permutations and the combinatorics of Young diagrams.

Conventions used throughout the package:

* partitions and compositions are plain tuples of ints;
* nodes are 1-based ``(row, col)`` pairs, rows counted from the top;
* permutations are tuples in one-line notation on ``1..n`` and compose from
  left to right, ``(u*w)(x) = w(u(x))``;
* permutations act on tableaux on the right by relabelling entries,
  ``(t.w)[node] = w(t[node])``, so ``t = t^lam . d(t)``.

A row-standard tableau is determined by its *row word*: the tuple whose
``(k-1)``-th entry is the 0-based row containing ``k``.  The heavy machinery in
:mod:`seminormal_hecke.specht` works with row words; :class:`Tableau` is the
user-facing wrapper.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable, Sequence

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Node = tuple[int, int]
Permutation = tuple[int, ...]
RowWord = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions

def as_partition(parts: Iterable[int]) -> Partition:
    lam = tuple(int(p) for p in parts)
    if any(p <= 0 for p in lam) or any(lam[i] < lam[i + 1] for i in range(len(lam) - 1)):
        raise ValueError(f"not a partition: {lam}")
    return lam


def parse_partition(text: str) -> Partition:
    """Parse ``"3,2,2"``."""
    text = text.strip()
    if not text:
        return ()
    return as_partition(int(x) for x in text.split(","))


def partition_text(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    def gen(rest, cap):
        if rest == 0:
            yield ()
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in gen(rest - p, p):
                yield (p,) + tail

    return tuple(gen(n, n))


def _partial_sums(parts: Sequence[int], length: int) -> list[int]:
    out, s = [], 0
    for i in range(length):
        s += parts[i] if i < len(parts) else 0
        out.append(s)
    return out


def dominance_leq(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam <= mu`` in the dominance order."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same size")
    k = max(len(lam), len(mu))
    return all(a <= b for a, b in zip(_partial_sums(lam, k), _partial_sums(mu, k)))


def total_prec(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam`` precedes or equals ``mu`` in the lexicographic refinement of dominance."""
    if sum(lam) != sum(mu):
        raise ValueError("comparison of partitions of different sizes")
    k = max(len(lam), len(mu))
    return _partial_sums(lam, k) <= _partial_sums(mu, k)


def conjugate(lam: Sequence[int]) -> Partition:
    return tuple(sum(1 for p in lam if p > c) for c in range(lam[0])) if lam else ()


def dimension(lam: Sequence[int]) -> int:
    """Number of standard lam-tableaux (hook length formula)."""
    lam = tuple(lam)
    conj = conjugate(lam)
    hooks = 1
    for r, row in enumerate(lam):
        for c in range(row):
            hooks *= (row - c - 1) + (conj[c] - r - 1) + 1
    return factorial(sum(lam)) // hooks


# ---------------------------------------------------------------------------
# nodes

def content(node: Node) -> int:
    r, c = node
    return c - r


def radial_distance(a: Node, b: Node) -> int:
    """Radial distance from node a to node b, i.e. content(b) - content(a)."""
    return content(b) - content(a)


def removable_nodes(lam: Sequence[int]) -> list[Node]:
    """Removable nodes, top to bottom."""
    return [(r + 1, p) for r, p in enumerate(lam) if r + 1 == len(lam) or lam[r + 1] < p]


def addable_nodes(lam: Sequence[int]) -> list[Node]:
    """Addable nodes, top to bottom."""
    out = [(r + 1, p + 1) for r, p in enumerate(lam) if r == 0 or lam[r - 1] > p]
    out.append((len(lam) + 1, 1))
    return out


def remove_node(lam: Sequence[int], node: Node) -> Partition:
    r, c = node
    if node not in removable_nodes(lam):
        raise ValueError(f"{node} is not removable from {tuple(lam)}")
    parts = list(lam)
    parts[r - 1] -= 1
    return tuple(p for p in parts if p)


# ---------------------------------------------------------------------------
# permutations

def identity(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(u: Permutation, w: Permutation) -> Permutation:
    """Left-to-right product ``u*w``: first u, then w."""
    return tuple(w[x - 1] for x in u)


def inverse(w: Permutation) -> Permutation:
    out = [0] * len(w)
    for i, x in enumerate(w, start=1):
        out[x - 1] = i
    return tuple(out)


def length(w: Permutation) -> int:
    n = len(w)
    return sum(1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b])


def simple(i: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[i] = w[i], w[i - 1]
    return tuple(w)


def sigma(i: int, j: int, n: int) -> Permutation:
    """sigma_{i,j} = s_i s_{i+1} ... s_{j-1}: sends i to j and k to k-1 for i < k <= j."""
    if not 1 <= i <= j <= n:
        raise ValueError(f"sigma({i},{j}) needs 1 <= i <= j <= n={n}")
    w = list(range(1, n + 1))
    w[i - 1] = j
    for k in range(i + 1, j + 1):
        w[k - 1] = k - 1
    return tuple(w)


def transposition(i: int, m: int, n: int) -> Permutation:
    w = list(range(1, n + 1))
    w[i - 1], w[m - 1] = m, i
    return tuple(w)


def mul_simple_right(w: Permutation, i: int) -> Permutation:
    """``w * s_i``: swap the values i and i+1 in one-line notation."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def reduced_word(w: Permutation) -> list[int]:
    """Generators ``[i1, ..., ik]`` with ``w = s_i1 * ... * s_ik`` and k = length(w)."""
    w = list(w)
    pos = {x: p for p, x in enumerate(w)}
    word = []
    n = len(w)
    i = 1
    while i < n:
        if pos[i + 1] < pos[i]:
            pos[i], pos[i + 1] = pos[i + 1], pos[i]
            word.append(i)
            i = max(1, i - 1)
        else:
            i += 1
    word.reverse()
    return word


def word_to_perm(word: Iterable[int], n: int) -> Permutation:
    w = identity(n)
    for i in word:
        w = mul_simple_right(w, i)
    return w


# ---------------------------------------------------------------------------
# tableaux

class Tableau:
    """A filling of a Young diagram by ``1..n``; immutable and hashable."""

    __slots__ = ("rows", "_hash")

    def __init__(self, rows: Iterable[Iterable[int]]):
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        shape = tuple(len(r) for r in self.rows)
        as_partition(shape)
        if sorted(x for r in self.rows for x in r) != list(range(1, sum(shape) + 1)):
            raise ValueError(f"entries of {self.rows} are not 1..n")
        self._hash = hash(self.rows)

    @classmethod
    def parse(cls, text: str) -> "Tableau":
        """Parse ``"1,2,7/3,4/5,6"``."""
        return cls([int(x) for x in row.split(",")] for row in text.strip().split("/"))

    @classmethod
    def from_row_word(cls, rw: RowWord) -> "Tableau":
        rows: list[list[int]] = [[] for _ in range(max(rw) + 1 if rw else 0)]
        for k, r in enumerate(rw, start=1):
            rows[r].append(k)
        return cls(rows)

    @property
    def shape(self) -> Partition:
        return tuple(len(r) for r in self.rows)

    @property
    def n(self) -> int:
        return sum(len(r) for r in self.rows)

    def __getitem__(self, node: Node) -> int:
        r, c = node
        return self.rows[r - 1][c - 1]

    def node_of(self, k: int) -> Node:
        for r, row in enumerate(self.rows, start=1):
            if k in row:
                return (r, row.index(k) + 1)
        raise KeyError(k)

    def row_word(self) -> RowWord:
        """Row word; only meaningful (injective) for row-standard tableaux."""
        rw = [0] * self.n
        for r, row in enumerate(self.rows):
            for x in row:
                rw[x - 1] = r
        return tuple(rw)

    def is_row_standard(self) -> bool:
        return all(all(a < b for a, b in zip(row, row[1:])) for row in self.rows)

    def is_column_standard(self) -> bool:
        return all(
            self.rows[r][c] < self.rows[r + 1][c]
            for r in range(len(self.rows) - 1)
            for c in range(len(self.rows[r + 1]))
        )

    def is_standard(self) -> bool:
        return self.is_row_standard() and self.is_column_standard()

    def first_violation(self) -> str | None:
        """Human-readable description of the first failure of standardness."""
        for r, row in enumerate(self.rows, start=1):
            for c in range(len(row) - 1):
                if row[c] > row[c + 1]:
                    return f"row {r} decreases at columns {c + 1},{c + 2}"
        for r in range(len(self.rows) - 1):
            for c in range(len(self.rows[r + 1])):
                if self.rows[r][c] > self.rows[r + 1][c]:
                    return f"column {c + 1} decreases at rows {r + 1},{r + 2}"
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: "Tableau") -> bool:
        # deterministic sort order only; see dominance_leq_tableaux for the math
        return self.rows < other.rows

    def __str__(self) -> str:
        return "/".join(",".join(str(x) for x in row) for row in self.rows)

    def __repr__(self) -> str:
        return f"Tableau({self})"

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    @classmethod
    def from_json(cls, data) -> "Tableau":
        return cls(data)


def superstandard(lam: Sequence[int]) -> Tableau:
    """t^lam: rows filled consecutively."""
    rows, k = [], 1
    for p in lam:
        rows.append(range(k, k + p))
        k += p
    return Tableau(rows)


def column_superstandard(lam: Sequence[int]) -> Tableau:
    """t_lam: columns filled consecutively."""
    conj = conjugate(lam)
    rows = [[0] * p for p in lam]
    k = 1
    for c, h in enumerate(conj):
        for r in range(h):
            rows[r][c] = k
            k += 1
    return Tableau(rows)


def superstandard_row_word(lam: Sequence[int]) -> RowWord:
    return tuple(r for r, p in enumerate(lam) for _ in range(p))


def is_lattice(rw: RowWord) -> bool:
    counts = [0] * (max(rw) + 2 if rw else 1)
    for r in rw:
        counts[r] += 1
        if r and counts[r] > counts[r - 1]:
            return False
    return True


def prefix_shape(rw: RowWord, k: int) -> Partition:
    counts: dict[int, int] = {}
    for r in rw[:k]:
        counts[r] = counts.get(r, 0) + 1
    return tuple(counts[r] for r in range(len(counts)))


def order_key(rw: RowWord, rows: int) -> tuple[int, ...]:
    """Sort key: prefix shapes for k = n-1 down to 1, padded to ``rows`` parts.

    Sorting by this key descending gives a linear extension of dominance with
    ``t^lam`` first.
    """
    n = len(rw)
    counts = [0] * rows
    chain = []
    for r in rw:
        counts[r] += 1
        chain.append(tuple(counts))
    key: list[int] = []
    for k in range(n - 2, -1, -1):
        key.extend(chain[k])
    return tuple(key)


@lru_cache(maxsize=None)
def standard_row_words(lam: Partition) -> tuple[RowWord, ...]:
    """Row words of all standard lam-tableaux, in the package's fixed order."""
    lam = tuple(lam)
    rows = len(lam)
    out: list[RowWord] = []
    word: list[int] = []
    counts = [0] * rows

    def rec():
        if len(word) == sum(lam):
            out.append(tuple(word))
            return
        for r in range(rows):
            if counts[r] < lam[r] and (r == 0 or counts[r] < counts[r - 1]):
                counts[r] += 1
                word.append(r)
                rec()
                word.pop()
                counts[r] -= 1

    rec()
    out.sort(key=lambda rw: order_key(rw, rows), reverse=True)
    return tuple(out)


def standard_tableaux(lam: Sequence[int]) -> list[Tableau]:
    return [Tableau.from_row_word(rw) for rw in standard_row_words(tuple(lam))]


def shape_chain(t: Tableau) -> list[Partition]:
    """Shapes of t restricted to 1..k for k = 1..n."""
    rw = t.row_word()
    return [prefix_shape(rw, k) for k in range(1, t.n + 1)]


def dominance_leq_tableaux(s: Tableau, t: Tableau) -> bool:
    if s.shape != t.shape:
        raise ValueError("tableaux of different shapes")
    return all(dominance_leq(a, b) for a, b in zip(shape_chain(s), shape_chain(t)))


def total_prec_tableaux(s: Tableau, t: Tableau) -> bool:
    if s.shape != t.shape:
        raise ValueError("tableaux of different shapes")
    rows = len(s.shape)
    return order_key(s.row_word(), rows) <= order_key(t.row_word(), rows)


def rw_dominance_leq(a: RowWord, b: RowWord) -> bool:
    """Dominance of row-standard tableaux given by row words."""
    rows = max(max(a), max(b)) + 1
    ca, cb = [0] * rows, [0] * rows
    for x, y in zip(a, b):
        ca[x] += 1
        cb[y] += 1
        sa = sb = 0
        for r in range(rows):
            sa += ca[r]
            sb += cb[r]
            if sa > sb:
                return False
    return True


def apply(t: Tableau, w: Permutation) -> Tableau:
    """Right action ``t.w``: replace each entry x by w(x)."""
    return Tableau([w[x - 1] for x in row] for row in t.rows)


def d_of(t: Tableau) -> Permutation:
    """The permutation d(t) with ``t = t^lam . d(t)``."""
    top = superstandard(t.shape)
    w = [0] * t.n
    for trow, row in zip(top.rows, t.rows):
        for a, b in zip(trow, row):
            w[a - 1] = b
    return tuple(w)


def d_of_row_word(rw: RowWord, lam: Sequence[int]) -> Permutation:
    starts, s = [], 1
    for p in lam:
        starts.append(s)
        s += p
    w = [0] * len(rw)
    nxt = list(starts)
    for k, r in enumerate(rw, start=1):
        w[nxt[r] - 1] = k
        nxt[r] += 1
    return tuple(w)


def restrict(t: Tableau, k: int) -> Tableau:
    """The subtableau holding 1..k."""
    if not 0 <= k <= t.n:
        raise ValueError(f"cannot restrict to 1..{k}")
    rows = [tuple(x for x in row if x <= k) for row in t.rows]
    return Tableau(r for r in rows if r)


def james_murphy_tableau(lam: Sequence[int], node: Node) -> Tableau:
    """t_n = t^lam . sigma_{c,n} with c = t^lam[node]."""
    lam = tuple(lam)
    if node not in removable_nodes(lam):
        raise ValueError(f"{node} is not removable in {lam}")
    top = superstandard(lam)
    n = sum(lam)
    return apply(top, sigma(top[node], n, n))


def t_leq(t: Tableau, r: int, s: int) -> Tableau:
    """Keep the entries r..s of t in place, fill 1..r-1 by rows into the rest of t|_s."""
    if not 1 <= r <= s <= t.n:
        raise ValueError(f"need 1 <= r <= s <= n, got r={r}, s={s}")
    base = restrict(t, s)
    rows = [list(row) for row in base.rows]
    k = 1
    for row in rows:
        for c, x in enumerate(row):
            if x < r:
                row[c] = k
                k += 1
    return Tableau(rows)


# ---------------------------------------------------------------------------
# Garnir data

def _check_garnir(lam: Sequence[int], i: int, j: int) -> None:
    if not (2 <= i <= len(lam) and 1 <= j <= lam[i - 1]):
        raise ValueError(f"no Garnir belt at ({i},{j}) in {tuple(lam)}")


def garnir_mu(lam: Sequence[int], i: int, j: int) -> Composition:
    _check_garnir(lam, i, j)
    return tuple(lam[: i - 2]) + (j - 1, j)


def garnir_tableau(lam: Sequence[int], i: int, j: int) -> Tableau:
    """g_ij: t^mu on the composition mu, remaining nodes of lam filled by rows."""
    mu = garnir_mu(lam, i, j)
    rows = [[0] * p for p in lam]
    k = 1
    for r, p in enumerate(mu):
        for c in range(p):
            rows[r][c] = k
            k += 1
    for r, p in enumerate(lam):
        for c in range(p):
            if rows[r][c] == 0:
                rows[r][c] = k
                k += 1
    return Tableau(rows)


def garnir_coset(lam: Sequence[int], i: int, j: int) -> list[Permutation]:
    """The permutations w of {k..m} for which ``g_ij . w`` is row-standard."""
    g = garnir_tableau(lam, i, j)
    top = superstandard(lam)
    k, m = top[(i - 1, j)], top[(i, j)]
    n = sum(lam)
    lower = [g[(i, c)] for c in range(1, j + 1)]
    upper = [g[(i - 1, c)] for c in range(j, lam[i - 2] + 1)]
    out = []
    for chosen in combinations(range(k, m + 1), j):
        rest = [v for v in range(k, m + 1) if v not in chosen]
        w = list(range(1, n + 1))
        for src, dst in zip(lower, chosen):
            w[src - 1] = dst
        for src, dst in zip(upper, rest):
            w[src - 1] = dst
        out.append(tuple(w))
    return out
