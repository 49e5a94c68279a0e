"""Serializable f_t expansions as emitted by ``seminormal expand``."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Mapping

from .hecke import HeckeElement
from .qcoeff import RationalFunction
from .seminormal import (
    METHODS,
    DenominatorCertificate,
    PFactor,
    certify,
    f_via_gram_schmidt,
    f_via_projector,
    f_via_stepwise,
    general_ft,
)
from .tableaux import Partition, Tableau, as_partition


class NonstandardTableauError(ValueError):
    """The requested index is not a standard tableau."""


@dataclass
class Expansion:
    shape: Partition
    tableau: Tableau
    method: str
    terms: list[tuple[Tableau, RationalFunction]]
    denominators: DenominatorCertificate
    term_count_trace: list[int]
    factors: dict[int, list[PFactor]] | None = field(default=None)  # fast route only

    def to_json(self) -> dict:
        out = {
            "shape": list(self.shape),
            "tableau": self.tableau.to_json(),
            "method": self.method,
            "terms": [{"tableau": t.to_json(), "coeff": c.to_json()} for t, c in self.terms],
            "denominators": self.denominators.to_json(),
            "term_count_trace": list(self.term_count_trace),
        }
        if self.factors is not None:
            out["factors"] = [
                {
                    "i": i,
                    "factors": [
                        {"from": f.c_from, "to": f.c_to, "r": f.r, "F": f.F.to_json()} for f in fs
                    ],
                }
                for i, fs in sorted(self.factors.items(), reverse=True)
            ]
        return out

    @classmethod
    def from_json(cls, data: Mapping) -> "Expansion":
        factors = None
        if "factors" in data:
            factors = {
                blk["i"]: [
                    PFactor(f["from"], f["to"], HeckeElement.from_json(f["F"], blk["i"]), f["r"])
                    for f in blk["factors"]
                ]
                for blk in data["factors"]
            }
        return cls(
            as_partition(data["shape"]),
            Tableau.from_json(data["tableau"]),
            data["method"],
            [(Tableau.from_json(d["tableau"]), RationalFunction.from_json(d["coeff"])) for d in data["terms"]],
            DenominatorCertificate.from_json(data["denominators"]),
            list(data["term_count_trace"]),
            factors,
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    @classmethod
    def loads(cls, text: str) -> "Expansion":
        return cls.from_json(json.loads(text))

    def text(self) -> str:
        lines = [f"f_{{{self.tableau}}} in S^{list(self.shape)} via {self.method}:"]
        for t, c in self.terms:
            lines.append(f"  {c}  *  e[{t}]")
        lines.append(f"term count trace: {self.term_count_trace}")
        dens = ", ".join(repr(d) for d in self.denominators.denominators) or "none"
        lines.append(f"denominators: {dens}")
        if self.denominators.predicted is not None:
            lines.append(
                f"predicted bound {self.denominators.radial}: divides={self.denominators.divides}"
                f" laurent_after_scaling={self.denominators.laurent_after_scaling}"
            )
        if self.factors is not None:
            for i, fs in sorted(self.factors.items(), reverse=True):
                if fs:
                    body = " ".join(f"(T[{f.c_from},{f.c_to}] + F/[{f.r}])" for f in fs)
                    lines.append(f"P_{i} = {body}")
        return "\n".join(lines)


def check_standard(t: Tableau, shape: Partition | None = None) -> None:
    if shape is not None and t.shape != tuple(shape):
        raise NonstandardTableauError(f"tableau {t} has shape {list(t.shape)}, expected {list(shape)}")
    if not t.is_standard():
        raise NonstandardTableauError(f"tableau {t} is not standard: {t.first_violation()}")


def expand(t: Tableau, method: str = "fast") -> Expansion:
    """f_t in the standard basis, with its denominator certificate."""
    check_standard(t)
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    factors = None
    if method == "fast":
        res = general_ft(t)
        vec, trace, factors = res.vector, res.term_count_trace, res.P
        cert = certify(vec, _bound(res))
    else:
        if method == "stepwise":
            res = f_via_stepwise(t)
            vec, trace = res.vector, res.term_count_trace
        elif method == "projector":
            vec = f_via_projector(t)
            trace = [len(vec.coeffs)]
        else:
            vec = f_via_gram_schmidt(t.shape).vector(t)
            trace = [len(vec.coeffs)]
        cert = _certificate(t, vec)
    return Expansion(t.shape, t, method, vec.terms(), cert, trace, factors)


def _bound(res) -> list[int]:
    return [r for i in sorted(res.radial, reverse=True) for r in res.radial[i]]


def _certificate(t: Tableau, vec) -> DenominatorCertificate:
    # the fast route's bound applies whichever route produced the vector
    return certify(vec, _bound(general_ft(t)))
