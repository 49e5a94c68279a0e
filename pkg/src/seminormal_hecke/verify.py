"""Verification suites shared by ``seminormal verify`` and the test suite.

Each suite runs one check per partition and collects human-readable failures.
Work fans out over partitions; results are reported in enumeration order.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .hecke import MURPHY_ORACLE_MAX_N, murphy_basis_oracle
from .linalg import matmul, transpose
from .modular import branching_filtration, verify_submodule_fn, verify_submodule_tleq
from .qcoeff import ONE, Q, ZERO, quantum_int
from .seminormal import (
    base_change,
    denominator_certificate,
    f_via_gram_schmidt,
    f_via_projector,
    f_via_stepwise,
    fat_hook_fn,
    fat_hook_params,
    general_fn,
    general_ft,
)
from .specht import specht_module
from .tableaux import (
    Partition,
    content,
    dimension,
    partition_text,
    partitions_of,
    removable_nodes,
    rw_dominance_leq,
    t_leq,
)

SUITES = ("agreement", "eigen", "orthogonality", "denominators", "representation", "modular")
MODULAR_ORDERS = (2, 3, 4, 5)
TLEQ_MAX_N = 5


@dataclass
class SuiteResult:
    name: str
    max_n: int
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "max_n": self.max_n,
            "checked": self.checked,
            "passed": self.passed,
            "failures": self.failures,
        }


# ---------------------------------------------------------------------------
# per-partition checks: each returns (checks performed, failure messages)

def check_agreement(lam: Partition) -> tuple[int, list[str]]:
    mod = specht_module(lam)
    bad = []
    gs = f_via_gram_schmidt(lam)
    for k, t in enumerate(mod.tableaux()):
        fast = general_ft(t).vector
        routes = {
            "projector": f_via_projector(t),
            "stepwise": f_via_stepwise(t).vector,
            "gram-schmidt": gs.vector(t),
        }
        for name, v in routes.items():
            if v.coeffs != fast.coeffs:
                bad.append(f"{partition_text(lam)} {t}: {name} differs from fast")
        if not all(v.is_unitriangular() for v in [fast, *routes.values()]):
            bad.append(f"{partition_text(lam)} {t}: not unitriangular")
    return mod.dim, bad


def check_eigen(lam: Partition) -> tuple[int, list[str]]:
    mod = specht_module(lam)
    bad, count = [], 0
    for t in mod.tableaux():
        f = general_ft(t).vector
        if not f.is_unitriangular():
            bad.append(f"{partition_text(lam)} {t}: not unitriangular")
        for m in range(1, mod.n + 1):
            count += 1
            c = quantum_int(content(t.node_of(m)))
            want = {k: c * x for k, x in f.coeffs.items() if not c.is_zero()}
            if mod.jm_action(f.coeffs, m) != want:
                bad.append(f"{partition_text(lam)} {t}: L_{m} eigenvalue is not [{content(t.node_of(m))}]")
    return count, bad


def check_orthogonality(lam: Partition) -> tuple[int, list[str]]:
    mod = specht_module(lam)
    bc = base_change(lam, "fast")
    G = mod.gram_definitional()
    FG = matmul(bc.M, G, ZERO)  # <f_t, e_s>
    FGF = matmul(FG, transpose(bc.M), ZERO)  # <f_s, f_t>
    bad, count = [], 0
    basis = mod.basis
    for a, t in enumerate(basis):
        for b, s in enumerate(basis):
            count += 1
            if a != b and not FGF[a][b].is_zero():
                bad.append(f"{partition_text(lam)}: <f_{a}, f_{b}> != 0")
            if s != t and rw_dominance_leq(t, s) and not FG[a][b].is_zero():
                bad.append(f"{partition_text(lam)}: <f_{a}, e_{b}> != 0 with e-index above")
        if FGF[a][a] != bc.gammas[a]:
            bad.append(f"{partition_text(lam)}: norm of f_{a} differs from gamma")
    return count, bad


def check_denominators(lam: Partition) -> tuple[int, list[str]]:
    bad = []
    nodes = removable_nodes(lam)
    for node in nodes:
        cert = denominator_certificate(lam, node)
        if not (cert.ok and cert.laurent_after_scaling and cert.divides):
            bad.append(f"{partition_text(lam)} node {node}: certificate failed")
        if general_fn(lam, node).nonstandard_terms:
            bad.append(f"{partition_text(lam)} node {node}: nonstandard index in f_n")
    try:
        lam1, k1, _, k2 = fat_hook_params(lam)
    except ValueError:
        return len(nodes), bad
    fh = fat_hook_fn(lam)
    if fh.nonstandard_terms:
        bad.append(f"{partition_text(lam)}: nonstandard index in fat hook F")
    if fh.vector.coeffs != general_fn(lam, (k1, lam1)).vector.coeffs:
        bad.append(f"{partition_text(lam)}: fat hook f_n differs from general f_n")
    return len(nodes) + 1, bad


def _at_one(col: dict) -> dict:
    out = {}
    for k, c in col.items():
        v = c.evaluate(1)
        if v:
            out[k] = Fraction(v)
    return out


def _apply_dense(cols: list[dict], index: dict, vec: dict) -> dict:
    out: dict = {}
    for k, x in vec.items():
        for key, y in cols[index[k]].items():
            out[key] = out.get(key, 0) + x * y
    return {k: v for k, v in out.items() if v}


def check_representation(lam: Partition) -> tuple[int, list[str]]:
    mod = specht_module(lam)
    n = mod.n
    bad, count = [], 0
    name = partition_text(lam)
    specialised = {i: [_at_one(c) for c in mod.columns(i)] for i in range(1, n)}
    for rw in mod.basis:
        e = {rw: ONE}
        e1 = {rw: Fraction(1)}
        for i in range(1, n):
            count += 1
            ti = mod.act_gen(e, i)
            lhs = mod.act_gen(ti, i)
            rhs = {k: (Q - 1) * c for k, c in ti.items()}
            for k, c in e.items():
                rhs[k] = rhs.get(k, ZERO) + Q * c
            if lhs != {k: c for k, c in rhs.items() if not c.is_zero()}:
                bad.append(f"{name}: quadratic relation fails for T_{i}")
            if _apply_dense(specialised[i], mod.index, _apply_dense(specialised[i], mod.index, e1)) != e1:
                bad.append(f"{name}: s_{i}^2 != 1 at q = 1")
            for j in range(i + 1, n):
                if j == i + 1:
                    a = mod.act_generators(e, (i, j, i))
                    b = mod.act_generators(e, (j, i, j))
                    if a != b:
                        bad.append(f"{name}: braid relation fails for {i},{j}")
                    sa, sb = e1, e1
                    for g in (i, j, i):
                        sa = _apply_dense(specialised[g], mod.index, sa)
                    for g in (j, i, j):
                        sb = _apply_dense(specialised[g], mod.index, sb)
                    if sa != sb:
                        bad.append(f"{name}: braid relation fails at q = 1 for {i},{j}")
                elif mod.act_generators(e, (i, j)) != mod.act_generators(e, (j, i)):
                    bad.append(f"{name}: T_{i}, T_{j} do not commute")
    if n <= MURPHY_ORACLE_MAX_N:
        mb = murphy_basis_oracle(n)
        for i in range(1, n):
            cols = mod.columns(i)
            for k, rw in enumerate(mod.basis):
                count += 1
                if mb.action_column(lam, rw, i) != cols[k]:
                    bad.append(f"{name}: T_{i} column {k} differs from the Murphy basis oracle")
    return count, bad


def check_modular(lam: Partition) -> tuple[int, list[str]]:
    name = partition_text(lam)
    bad, count = [], 0
    filt = branching_filtration(lam)
    count += 1
    if not filt.closed:
        bad.append(f"{name}: branching filtration not closed")
    if [l.layer_dim for l in filt.layers] != [dimension(l.quotient_shape) for l in filt.layers]:
        bad.append(f"{name}: filtration layer dimensions")
    mod = specht_module(lam)
    count += 1
    if not all(c.is_laurent() for row in mod.gram_definitional() for c in row):
        bad.append(f"{name}: Gram matrix has a non-Laurent entry")
    nodes = removable_nodes(lam)
    for j in range(1, len(nodes) + 1):
        for e in MODULAR_ORDERS:
            count += 1
            rep = verify_submodule_fn(lam, j, e)
            if rep.hypothesis_holds and rep.verdict != "confirmed":
                bad.append(f"{name} j={j} e={e}: verdict {rep.verdict} although the hypothesis holds")
    n = mod.n
    if n > TLEQ_MAX_N:
        return count, bad
    for t in mod.tableaux():
        node = t.node_of(n)
        if general_ft(t_leq(t, n, n)).vector.coeffs != general_fn(lam, node).vector.coeffs:
            bad.append(f"{name} {t}: f for t<= with r = n differs from f_n")
        for r in range(2, n + 1):
            for e in MODULAR_ORDERS:
                count += 1
                rep = verify_submodule_tleq(lam, t, r, e)
                if rep.verdict == "refuted":
                    bad.append(f"{name} {t} r={r} e={e}: submodule refuted")
    return count, bad


CHECKS: dict[str, Callable[[Partition], tuple[int, list[str]]]] = {
    "agreement": check_agreement,
    "eigen": check_eigen,
    "orthogonality": check_orthogonality,
    "denominators": check_denominators,
    "representation": check_representation,
    "modular": check_modular,
}


def _task(args: tuple[str, Partition]) -> tuple[int, list[str]]:
    name, lam = args
    return CHECKS[name](lam)


def run_suites(names, max_n: int, jobs: int = 1) -> list[SuiteResult]:
    """Run the named suites over every partition of 1..max_n."""
    names = list(SUITES if names in ("all", None) else names)
    for name in names:
        if name not in CHECKS:
            raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    tasks = [(name, lam) for name in names for n in range(1, max_n + 1) for lam in partitions_of(n)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outcomes = list(pool.map(_task, tasks, chunksize=1))
    else:
        outcomes = [_task(t) for t in tasks]
    results = {name: SuiteResult(name, max_n) for name in names}
    for (name, _), (count, bad) in zip(tasks, outcomes):
        results[name].checked += count
        results[name].failures.extend(bad)
    return [results[name] for name in names]
