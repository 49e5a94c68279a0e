"""Young's seminormal basis {f_t} of S^lam and four ways of computing it.

* ``projector``: f_t = e_t E_t, the product of Jucys-Murphy eigenprojections.
* ``gram-schmidt``: orthogonalise the standard basis against the form.
* ``stepwise``: walk up from t^lam, inverting the seminormal action
  ``f_t T_i = -(1/[rho]) f_t + f_s`` at every step (exponentially many terms).
* ``fast``: the P_t recursion, a product of short Hecke-algebra factors built
  from the row sums R_i.

The seminormal action of T_i on f_t, with rho the content difference:

    i, i+1 in the same row        q f_t
    i, i+1 in the same column     -f_t
    i in a higher row than i+1    -(1/[rho]) f_t + f_s
    i in a lower row than i+1     (q^rho/[rho]) f_t + c_up(rho) f_s

where s = t s_i, rho > 0 is the content difference of i and i+1, and
c_up(rho) = q [rho+1][rho-1] / [rho]^2.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .hecke import HeckeElement, row_sum_R, t_range
from .linalg import axpy, unitriangular_inverse
from .qcoeff import (
    ONE,
    Q,
    CyclotomicFactorization,
    NotProductOfCyclotomics,
    RationalFunction,
    ZERO,
    factor_cyclotomic,
    quantum_factorial,
    quantum_int,
)
from .specht import (
    SpechtVector,
    Vec,
    mperm_gen,
    mperm_gen_terms,
    mperm_word,
    merge_terms,
    specht_module,
)
from .tableaux import (
    Node,
    Partition,
    RowWord,
    Tableau,
    addable_nodes,
    apply,
    as_partition,
    content,
    is_lattice,
    james_murphy_tableau,
    order_key,
    prefix_shape,
    reduced_word,
    removable_nodes,
    restrict,
    rw_dominance_leq,
    sigma,
    superstandard,
    superstandard_row_word,
)

METHODS = ("projector", "gram-schmidt", "stepwise", "fast")
RESIDUE_MODES = ("branching", "per_m", "global")


# ---------------------------------------------------------------------------
# small helpers

def contents(rw: RowWord) -> list[int]:
    """Content (col - row) of the node holding k, at index k-1."""
    used: dict[int, int] = {}
    out = []
    for r in rw:
        c = used.get(r, 0)
        used[r] = c + 1
        out.append(c - r)
    return out


def swap(rw: RowWord, i: int) -> RowWord:
    return rw[: i - 1] + (rw[i], rw[i - 1]) + rw[i + 1 :]


@lru_cache(maxsize=None)
def c_up(rho: int) -> RationalFunction:
    """Coefficient of f_s in f_t T_i when s = t s_i lies below t."""
    return Q * quantum_int(rho + 1) * quantum_int(rho - 1) / quantum_int(rho) ** 2


def _mvec_apply_hecke(vec: Mapping[RowWord, RationalFunction], h: HeckeElement) -> Vec:
    out: Vec = {}
    for w, c in h.terms.items():
        axpy(out, c, mperm_word(vec, reduced_word(w)))
    return out


def _sort_key(rows: int):
    return lambda rw: tuple(-x for x in order_key(rw, rows))


class SeminormalVector(SpechtVector):
    """A SpechtVector known to equal f_t for the recorded tableau."""

    __slots__ = ("tableau",)

    def __init__(self, tableau: Tableau, coeffs: Mapping[RowWord, RationalFunction]):
        super().__init__(tableau.shape, coeffs)
        self.tableau = tableau

    def terms(self) -> list[tuple[Tableau, RationalFunction]]:
        key = _sort_key(len(self.shape))
        return [(Tableau.from_row_word(rw), c) for rw, c in sorted(self.coeffs.items(), key=lambda kv: key(kv[0]))]

    def is_unitriangular(self) -> bool:
        t = self.tableau.row_word()
        if self.coeffs.get(t) != ONE:
            return False
        return all(rw == t or (rw_dominance_leq(t, rw)) for rw in self.coeffs)

    def denominators(self) -> list[RationalFunction]:
        seen = {}
        for c in self.coeffs.values():
            if not c.is_laurent():
                d = RationalFunction.from_laurent(c.den)
                seen[d.key()] = d
        return [seen[k] for k in sorted(seen)]


def _as_tableau(t) -> Tableau:
    if isinstance(t, str):
        t = Tableau.parse(t)
    if not t.is_standard():
        raise ValueError(f"{t} is not standard: {t.first_violation()}")
    return t


# ---------------------------------------------------------------------------
# seminormal form

def seminormal_gen_action(t: Tableau, i: int) -> dict[Tableau, RationalFunction]:
    """f_t T_i as a combination of seminormal basis vectors."""
    rw = _as_tableau(t).row_word()
    if not 1 <= i < len(rw):
        raise ValueError(f"no generator T_{i} for n={len(rw)}")
    cont = contents(rw)
    if rw[i - 1] == rw[i]:
        return {t: Q}
    if cont[i - 1] - cont[i] in (1, -1):
        return {t: -ONE}
    s = Tableau.from_row_word(swap(rw, i))
    if rw[i - 1] < rw[i]:
        rho = cont[i - 1] - cont[i]
        return {t: -quantum_int(rho).inverse(), s: ONE}
    rho = cont[i] - cont[i - 1]
    return {t: RationalFunction.monomial(rho) / quantum_int(rho), s: c_up(rho)}


def gamma_recursion(shape: Sequence[int]) -> dict[RowWord, RationalFunction]:
    """gamma_t = <f_t, f_t> for every standard t, anchored at prod [lam_i]!."""
    lam = as_partition(shape)
    top = superstandard_row_word(lam)
    base = ONE
    for p in lam:
        base = base * quantum_factorial(p)
    gam = {top: base}
    frontier = [top]
    n = len(top)
    while frontier:
        nxt = []
        for rw in frontier:
            cont = contents(rw)
            for i in range(1, n):
                if rw[i - 1] >= rw[i]:
                    continue
                rho = cont[i - 1] - cont[i]
                if rho == 1:
                    continue  # same column
                s = swap(rw, i)
                val = c_up(rho) * gam[rw]
                old = gam.get(s)
                if old is None:
                    gam[s] = val
                    nxt.append(s)
                elif old != val:
                    raise ArithmeticError(f"gamma is path dependent at {s}")
        frontier = nxt
    return gam


# ---------------------------------------------------------------------------
# projector

def residue_candidates(rw: RowWord, m: int, mode: str = "branching") -> list[int]:
    """Contents c != content of m in t, for which (L_m - [c]) is applied."""
    own = contents(rw)[m - 1]
    if mode == "branching":
        lam = prefix_shape(rw, len(rw))
        mu = prefix_shape(rw, m - 1)
        cands = [
            content(node)
            for node in addable_nodes(mu)
            if node[0] <= len(lam) and node[1] <= lam[node[0] - 1]
        ]
    elif mode == "per_m":
        cands = list(range(-(m - 1), m))
    elif mode == "global":
        n = len(rw)
        cands = list(range(-(n - 1), n))
    else:
        raise ValueError(f"unknown residue mode {mode!r}")
    return [c for c in cands if c != own]


def f_via_projector(t, residues: str = "branching") -> SeminormalVector:
    """f_t = e_t E_t via the Jucys-Murphy eigenprojections."""
    t = _as_tableau(t)
    mod = specht_module(t.shape)
    rw = t.row_word()
    cont = contents(rw)
    vec: Vec = {rw: ONE}
    for m in range(2, len(rw) + 1):
        own = quantum_int(cont[m - 1])
        for c in residue_candidates(rw, m, residues):
            qc = quantum_int(c)
            lv = mod.jm_action(vec, m)
            axpy(lv, -qc, vec)
            scale = (own - qc).inverse()
            vec = {k: x * scale for k, x in lv.items()}
    return SeminormalVector(t, vec)


# ---------------------------------------------------------------------------
# stepwise

def ascent_path(t: Tableau) -> list[int]:
    """Generators i_1..i_k with t = t^lam s_i1 ... s_ik, every prefix standard and descending."""
    rw = t.row_word()
    ups = []
    n = len(rw)
    while True:
        for i in range(1, n):
            if rw[i] < rw[i - 1]:
                rw = swap(rw, i)
                ups.append(i)
                break
        else:
            break
    ups.reverse()
    return ups


@dataclass
class StepwiseResult:
    vector: SeminormalVector
    term_count_trace: list[int]
    raw_terms: int  # formal terms before straightening
    nonstandard_terms: int


def f_via_stepwise(t, merge: bool = True, straighten: bool = True) -> StepwiseResult:
    """Repeated seminormal steps f_{t s_i} = f_t (T_i + 1/[rho]) in M^lam, straightened at the end.

    With ``merge=False`` terms are kept as a formal list (used for term counting);
    ``straighten=False`` leaves non-standard indices in place.
    """
    t = _as_tableau(t)
    cur = superstandard_row_word(t.shape)
    trace = [1]
    if merge:
        vec: Vec = {cur: ONE}
    else:
        terms = [(cur, ONE)]
    for i in ascent_path(t):
        cont = contents(cur)
        rho = cont[i - 1] - cont[i]
        inv = quantum_int(rho).inverse()
        if merge:
            nxt = mperm_gen(vec, i)
            axpy(nxt, inv, vec)
            vec = nxt
            trace.append(len(vec))
        else:
            terms = mperm_gen_terms(terms, i) + [(rw, c * inv) for rw, c in terms]
            trace.append(len(terms))
        cur = swap(cur, i)
    assert cur == t.row_word()
    if not merge:
        vec = merge_terms(terms)
    raw = trace[-1]
    nonstd = sum(1 for rw in vec if not is_lattice(rw))
    if nonstd and straighten:
        vec = specht_module(t.shape).project(vec)
    return StepwiseResult(SeminormalVector(t, vec), trace, raw, nonstd)


def row_step(f: SeminormalVector, b: int, beta: int) -> SeminormalVector:
    """From f at t_b to f at t_beta when the entries b+1..beta fill a row of t_b."""
    rw = f.tableau.row_word()
    if beta == b:
        return f
    if not b < beta <= len(rw):
        raise ValueError("need b <= beta <= n")
    row = rw[b]
    if any(rw[k - 1] != row for k in range(b + 1, beta + 1)) or rw.count(row) != beta - b:
        raise ValueError(f"{b + 1}..{beta} do not fill a row of {f.tableau}")
    cont = contents(rw)
    r = cont[b - 1] - cont[beta - 1]
    if r == 1:
        raise ValueError("radial distance 1: t_b would be a Garnir tableau")
    n = len(rw)
    h = t_range(b, beta, n)
    tail = HeckeElement(n, {sigma(b, c, n): ONE for c in range(b, beta)})
    h = h + tail.scale(quantum_int(r).inverse())
    vec = _mvec_apply_hecke(f.coeffs, h)
    if any(not is_lattice(k) for k in vec):
        vec = specht_module(f.shape).project(vec)
    target = apply(f.tableau, sigma(b, beta, n))
    return SeminormalVector(target, vec)


# ---------------------------------------------------------------------------
# fat hooks

def fat_hook_params(shape: Sequence[int]) -> tuple[int, int, int, int]:
    """``(lam1, k1, lam2, k2)``; k2 = 0 for rectangles."""
    lam = as_partition(shape)
    sizes = sorted(set(lam), reverse=True)
    if len(sizes) == 1:
        return lam[0], len(lam), 0, 0
    if len(sizes) != 2:
        raise ValueError(f"{lam} is not a fat hook")
    k1 = lam.count(sizes[0])
    return sizes[0], k1, sizes[1], lam.count(sizes[1])


@dataclass
class FatHookResult:
    vector: SeminormalVector
    F_terms: list  # formal (row word, coeff) list of F_{k1+k2}
    r: int
    R: dict[int, HeckeElement]
    nonstandard_terms: int

    @property
    def F(self) -> Vec:
        return merge_terms(self.F_terms)


def _apply_R_terms(terms: list, lam: Partition, i: int) -> list:
    a, b = sum(lam[: i - 1]), sum(lam[:i])
    out = list(terms)
    for c in range(a + 1, b):
        cur = terms
        for g in range(a, c):
            cur = mperm_gen_terms(cur, g)
        out.extend(cur)
    return out


def fat_hook_fn(shape: Sequence[int]) -> FatHookResult:
    """f_n for the node (k1, lam1) of a fat hook: e_n + F_{k1+k2}/[r]."""
    lam = as_partition(shape)
    lam1, k1, lam2, k2 = fat_hook_params(lam)
    n = sum(lam)
    top = superstandard_row_word(lam)
    a = k1 * lam1
    tn = james_murphy_tableau(lam, (k1, lam1))
    if k2 == 0:
        return FatHookResult(SeminormalVector(tn, {top: ONE}), [], 0, {}, 0)
    r = lam1 - lam2 + k2
    R = {i: row_sum_R(lam, i) for i in range(k1 + 1, k1 + k2 + 1)}
    F = _apply_R_terms([(top, ONE)], lam, k1 + 1)
    for i in range(k1 + 2, k1 + k2 + 1):
        ai = sum(lam[: i - 1])
        e_ai = mperm_word({top: ONE}, reduced_word(sigma(a, ai, n)))
        (rw_ai, c_ai), = e_ai.items()
        F = _apply_R_terms([(rw_ai, c_ai)] + [(rw, -Q * c) for rw, c in F], lam, i)
    vec = {tn.row_word(): ONE}
    axpy(vec, quantum_int(r).inverse(), merge_terms(F))
    nonstd = sum(1 for rw, _ in F if not is_lattice(rw))
    if nonstd:
        vec = specht_module(lam).project(vec)
    return FatHookResult(SeminormalVector(tn, vec), F, r, R, nonstd)


# ---------------------------------------------------------------------------
# general partitions

@dataclass
class PFactor:
    """One bracket ``T_{sigma(c_j, c_{j+1})} + F_j / [r_{j+1}]`` of P_n."""

    c_from: int
    c_to: int
    F: HeckeElement
    r: int

    def element(self) -> HeckeElement:
        n = self.F.n
        return t_range(self.c_from, self.c_to, n) + self.F.scale(quantum_int(self.r).inverse())


@dataclass
class GeneralFnResult:
    vector: SeminormalVector
    factors: list[PFactor]
    radial: list[int]
    n: int
    nonstandard_terms: int = 0

    def P(self) -> HeckeElement:
        out = HeckeElement.one(self.n)
        for f in self.factors:
            out = out * f.element()
        return out


def fn_data(shape: Sequence[int], node: Node) -> tuple[list[Node], list[int], list[int]]:
    """Removable nodes from ``node`` downwards, their t^lam entries c_j and the r_j."""
    lam = as_partition(shape)
    rem = removable_nodes(lam)
    if node not in rem:
        raise ValueError(f"{node} is not removable in {lam}")
    nodes = rem[rem.index(node):]
    top = superstandard(lam)
    cs = [top[nd] for nd in nodes]
    rs = [content(node) - content(nd) for nd in nodes]
    return nodes, cs, rs


def p_factors(shape: Sequence[int], node: Node) -> tuple[list[PFactor], list[int]]:
    """The factors of P_n for the James-Murphy tableau with n at ``node``."""
    lam = as_partition(shape)
    n = sum(lam)
    nodes, cs, rs = fn_data(lam, node)
    factors = []
    for j in range(len(nodes) - 1):
        kj = nodes[j][0]
        kn, ln = nodes[j + 1]
        phi = row_sum_R(lam, kj + 1)
        for i in range(2, kn - kj + 1):
            shift = t_range(cs[j], cs[j] + (i - 1) * ln, n)
            phi = (shift - phi.scale(Q)) * row_sum_R(lam, kj + i)
        factors.append(PFactor(cs[j], cs[j + 1], phi, rs[j + 1]))
    return factors, rs[1:]


def general_fn(shape: Sequence[int], node: Node) -> GeneralFnResult:
    """f_n = e_lam P_n for the James-Murphy tableau t^lam sigma_{c,n}."""
    lam = as_partition(shape)
    n = sum(lam)
    factors, radial = p_factors(lam, node)
    top = superstandard_row_word(lam)
    vec: Vec = {top: ONE}
    nonstd = 0
    for f in factors:
        vec = _mvec_apply_hecke(vec, f.element())
        nonstd += sum(1 for rw in vec if not is_lattice(rw))
    if nonstd:
        vec = specht_module(lam).project(vec)
    return GeneralFnResult(SeminormalVector(james_murphy_tableau(lam, node), vec), factors, radial, n, nonstd)


@dataclass
class GeneralFtResult:
    vector: SeminormalVector
    P: dict[int, list[PFactor]]  # i -> factors of P_i (empty list means P_i = 1)
    radial: dict[int, list[int]]
    nonstandard_terms: int
    term_count_trace: list[int] = field(default_factory=list)  # terms after each P_i, i = n..1

    def P_element(self, i: int) -> HeckeElement:
        out = HeckeElement.one(i)
        for f in self.P[i]:
            out = out * f.element()
        return out


def general_ft(t) -> GeneralFtResult:
    """f_t = e_lam P_n P_{n-1} ... P_1."""
    t = _as_tableau(t)
    lam = t.shape
    n = t.n
    top = superstandard_row_word(lam)
    vec: Vec = {top: ONE}
    P: dict[int, list[PFactor]] = {}
    radial: dict[int, list[int]] = {}
    nonstd = 0
    mod = None
    trace = [1]
    for i in range(n, 0, -1):
        sub = restrict(t, i)
        factors, rs = p_factors(sub.shape, sub.node_of(i))
        P[i], radial[i] = factors, rs
        for f in factors:
            vec = _mvec_apply_hecke(vec, f.element())
        bad = [rw for rw in vec if not is_lattice(rw)]
        if bad:
            nonstd += len(bad)
            mod = mod or specht_module(lam)
            vec = mod.project(vec)
        trace.append(len(vec))
    return GeneralFtResult(SeminormalVector(t, vec), P, radial, nonstd, trace)


# ---------------------------------------------------------------------------
# base change

@dataclass
class BaseChange:
    shape: Partition
    order: tuple[Tableau, ...]
    M: list[list[RationalFunction]]  # row t holds f_t in the e-basis
    Minv: list[list[RationalFunction]]
    gammas: list[RationalFunction]
    method: str = "fast"

    def vector(self, t: Tableau) -> SeminormalVector:
        k = self.order.index(t)
        return SeminormalVector(t, {s.row_word(): c for s, c in zip(self.order, self.M[k]) if not c.is_zero()})

    def gram(self) -> list[list[RationalFunction]]:
        """Gram matrix of the standard basis: Minv diag(gamma) Minv^T."""
        d = len(self.order)
        out = [[ZERO] * d for _ in range(d)]
        for a in range(d):
            for b in range(a, d):
                acc = ZERO
                for k in range(min(a, b) + 1):
                    x, y = self.Minv[a][k], self.Minv[b][k]
                    if not x.is_zero() and not y.is_zero():
                        acc = acc + x * y * self.gammas[k]
                out[a][b] = out[b][a] = acc
        return out

    def to_json(self) -> dict:
        return {
            "shape": list(self.shape),
            "method": self.method,
            "order": [t.to_json() for t in self.order],
            "M": [[c.to_json() for c in row] for row in self.M],
            "Minv": [[c.to_json() for c in row] for row in self.Minv],
            "gammas": [g.to_json() for g in self.gammas],
        }


def f_vector(t, method: str = "fast") -> SeminormalVector:
    if method == "projector":
        return f_via_projector(t)
    if method == "stepwise":
        return f_via_stepwise(t).vector
    if method == "fast":
        return general_ft(t).vector
    if method == "gram-schmidt":
        t = _as_tableau(t)
        return f_via_gram_schmidt(t.shape).vector(t)
    raise ValueError(f"unknown method {method!r}; choose from {METHODS}")


def _assemble(shape: Partition, rows: list[Vec], method: str) -> BaseChange:
    mod = specht_module(shape)
    M = [[row.get(rw, ZERO) for rw in mod.basis] for row in rows]
    gam = gamma_recursion(shape)
    return BaseChange(
        shape,
        tuple(mod.tableaux()),
        M,
        unitriangular_inverse(M, ONE, ZERO),
        [gam[rw] for rw in mod.basis],
        method,
    )


def base_change(shape: Sequence[int], method: str = "fast") -> BaseChange:
    lam = as_partition(shape)
    if method == "gram-schmidt":
        return f_via_gram_schmidt(lam)
    mod = specht_module(lam)
    rows = [f_vector(Tableau.from_row_word(rw), method).coeffs for rw in mod.basis]
    return _assemble(lam, rows, method)


def f_via_gram_schmidt(shape: Sequence[int], route: str = "definitional", order: Sequence[RowWord] | None = None) -> BaseChange:
    """Weak Gram-Schmidt: f_t = e_t - sum_{s > t} <f_s, e_t>/<f_s, f_s> f_s.

    ``order`` may be any linear extension of dominance (top first); the default is
    the package's fixed enumeration.
    """
    lam = as_partition(shape)
    mod = specht_module(lam)
    if route == "definitional":
        G = mod.gram_definitional()
    elif route == "oracle":
        from .hecke import murphy_basis_oracle

        mb = murphy_basis_oracle(mod.n)
        G = [[mb.form(lam, s, t) for t in mod.basis] for s in mod.basis]
    else:
        raise ValueError(f"unknown form route {route!r}")
    idx = mod.index
    seq = list(order) if order is not None else list(mod.basis)
    fs: dict[RowWord, Vec] = {}
    gam: dict[RowWord, RationalFunction] = {}

    def pair(vec: Vec, t: RowWord) -> RationalFunction:
        col = idx[t]
        acc = ZERO
        for s, c in vec.items():
            g = G[idx[s]][col]
            if not g.is_zero():
                acc = acc + c * g
        return acc

    for t in seq:
        f = {t: ONE}
        for s in fs:
            if s != t and rw_dominance_leq(t, s):
                coef = pair(fs[s], t)
                if not coef.is_zero():
                    axpy(f, -coef / gam[s], fs[s])
        fs[t] = f
        g = pair(f, t)
        if g.is_zero():
            raise ArithmeticError(f"zero norm at {t}")
        gam[t] = g
    M = [[fs[t].get(s, ZERO) for s in mod.basis] for t in mod.basis]
    return BaseChange(
        lam,
        tuple(mod.tableaux()),
        M,
        unitriangular_inverse(M, ONE, ZERO),
        [gam[t] for t in mod.basis],
        "gram-schmidt",
    )


# ---------------------------------------------------------------------------
# denominator certificates

@dataclass
class DenominatorCertificate:
    tableau: Tableau
    denominators: list[CyclotomicFactorization]
    predicted: CyclotomicFactorization | None
    radial: list[int]
    laurent_after_scaling: bool | None
    divides: bool | None
    non_cyclotomic: list[RationalFunction] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.non_cyclotomic and self.laurent_after_scaling is not False and self.divides is not False

    def to_json(self) -> dict:
        return {
            "tableau": self.tableau.to_json(),
            "denominators": [d.to_json() for d in self.denominators],
            "predicted": self.predicted.to_json() if self.predicted else None,
            "radial": self.radial,
            "laurent_after_scaling": self.laurent_after_scaling,
            "divides": self.divides,
            "non_cyclotomic": [c.to_json() for c in self.non_cyclotomic],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "DenominatorCertificate":
        pred = data["predicted"]
        return cls(
            Tableau.from_json(data["tableau"]),
            [CyclotomicFactorization.from_json(d) for d in data["denominators"]],
            CyclotomicFactorization.from_json(pred) if pred is not None else None,
            list(data["radial"]),
            data["laurent_after_scaling"],
            data["divides"],
            [RationalFunction.from_json(c) for c in data["non_cyclotomic"]],
        )


def _jm_node(t: Tableau) -> Node | None:
    """The node of n if t is a James-Murphy tableau, else None."""
    n = t.n
    node = t.node_of(n)
    if node in removable_nodes(t.shape) and james_murphy_tableau(t.shape, node) == t:
        return node
    return None


def certify(f: SeminormalVector, radial: Sequence[int] | None = None) -> DenominatorCertificate:
    dens, bad = [], []
    for d in f.denominators():
        try:
            dens.append(factor_cyclotomic(d))
        except NotProductOfCyclotomics:
            bad.append(d)
    if radial is None:
        return DenominatorCertificate(f.tableau, dens, None, [], None, None, bad)
    pred = ONE
    for r in radial:
        pred = pred * quantum_int(r)
    pred_f = factor_cyclotomic(pred)
    laurent = all((pred * c).is_laurent() for c in f.coeffs.values())
    divides = all(d.divides(pred_f) for d in dens)
    return DenominatorCertificate(f.tableau, dens, pred_f, list(radial), laurent, divides, bad)


def denominator_certificate(target, node: Node | None = None, method: str = "fast") -> DenominatorCertificate:
    """Certificate for a tableau, or for ``(shape, node)`` meaning its James-Murphy tableau."""
    if node is not None:
        lam = as_partition(target)
        if method == "fast":
            res = general_fn(lam, node)
            return certify(res.vector, res.radial)
        t = james_murphy_tableau(lam, node)
        _, _, rs = fn_data(lam, node)
        return certify(f_vector(t, method), rs[1:])
    t = _as_tableau(target)
    if method == "fast":
        res = general_ft(t)
        return certify(res.vector, [r for i in sorted(res.radial, reverse=True) for r in res.radial[i]])
    jm = _jm_node(t)
    f = f_vector(t, method)
    if jm is None:
        return certify(f)
    _, _, rs = fn_data(t.shape, jm)
    return certify(f, rs[1:])


# ---------------------------------------------------------------------------
# recovering the ascent coefficient from the projector

C_UP_CANDIDATES = {
    "q[rho+1][rho-1]/[rho]^2": lambda rho: Q * quantum_int(rho + 1) * quantum_int(rho - 1) / quantum_int(rho) ** 2,
    "q[rho+1][rho+1]/[rho]^2": lambda rho: Q * quantum_int(rho + 1) ** 2 / quantum_int(rho) ** 2,
    "[rho+1][rho-1]/[rho]^2": lambda rho: quantum_int(rho + 1) * quantum_int(rho - 1) / quantum_int(rho) ** 2,
    "q": lambda rho: Q,
    "1": lambda rho: ONE,
}


def ascent_pairs(shape: Sequence[int]) -> list[tuple[Tableau, int]]:
    """All (t, i) with t standard and t s_i standard and below t in dominance."""
    out = []
    for rw in specht_module(tuple(shape)).basis:
        cont = contents(rw)
        for i in range(1, len(rw)):
            if rw[i - 1] > rw[i] and cont[i] - cont[i - 1] > 1:
                out.append((Tableau.from_row_word(rw), i))
    return out


def observed_ascent(t: Tableau, i: int) -> tuple[int, RationalFunction, RationalFunction]:
    """``(rho, diagonal, off-diagonal)`` of f_t T_i, measured with projector vectors."""
    rw = t.row_word()
    cont = contents(rw)
    rho = cont[i] - cont[i - 1]
    mod = specht_module(t.shape)
    ft = f_via_projector(t)
    s = Tableau.from_row_word(swap(rw, i))
    fs = f_via_projector(s)
    img = mod.act_gen(ft.coeffs, i)
    diag = img.get(rw, ZERO)
    rest = dict(img)
    axpy(rest, -diag, ft.coeffs)
    off = rest.get(s.row_word(), ZERO)
    axpy(rest, -off, fs.coeffs)
    if rest:
        raise ArithmeticError(f"f_t T_{i} is not in span(f_t, f_s) for t={t}")
    return rho, diag, off


def fit_c_up(samples: Iterable[tuple[int, RationalFunction]]) -> str | None:
    """Name of the unique candidate closed form matching every (rho, c_up) sample."""
    by_rho: dict[int, RationalFunction] = {}
    for rho, val in samples:
        if by_rho.setdefault(rho, val) != val:
            return None  # not a function of rho alone
    hits = [name for name, f in C_UP_CANDIDATES.items() if all(f(r) == v for r, v in by_rho.items())]
    return hits[0] if len(hits) == 1 else None
