"""Closed-form orbit invariants, their exact oracles, and verification sweeps."""

from __future__ import annotations

import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import exact
from .algebra import build_algebra, centralizer_dims, evaluate_form, orbit_representative
from .errors import InvalidLabel, InvariantMismatch, UnsupportedFamily
from .families import (
    EXCEPTIONAL_ODD_DIM,
    F4_TABLE,
    G3_TABLE,
    GAMMA_TABLE,
    P_WEIGHT_OFFSET,
    AlgebraSpec,
    Family,
    OrbitLabel,
    check_label,
    gamma_key,
    orbit_labels,
)
from .partitions import Partition, jordan_matrix, min_sum

__all__ = [
    "OrbitLabel",
    "InvariantReport",
    "VerificationRecord",
    "VerificationReport",
    "k_formula",
    "k_oracle",
    "ell",
    "epsilon",
    "even_orbit_dim",
    "superdimension",
    "report",
    "verify_family",
    "resolve_p_convention",
    "p_weighted_sum",
    "sweep_specs",
    "DEFAULT_GAMMA_SIGMAS",
    "THREADS_ENV",
]

THREADS_ENV = "SUPERORBITS_THREADS"

DEFAULT_GAMMA_SIGMAS: tuple[tuple[Fraction, Fraction, Fraction], ...] = tuple(
    (Fraction(a), Fraction(b), -Fraction(a) - Fraction(b))
    for a, b in [(1, 1), (1, 2), ("1/2", "1/3"), (-1, 3), ("2/3", "-7/5"), (5, "-1/4")]
)


def ell(k: int) -> int:
    if k < 0:
        raise ValueError("k must be nonnegative")
    return (k + 1) // 2


def epsilon(mu: Partition) -> int:
    """1 when every part of mu is even, else 0."""
    return int(all(p % 2 == 0 for p in mu))


def _square_dual_sum(mu: Partition) -> int:
    return sum(p * p for p in mu.dual())


def p_weighted_sum(mu: Partition) -> int:
    """2 * sum_i (N - i) b_i, with b_i the subdiagonal entries of the lower Jordan matrix."""
    j = jordan_matrix(mu, "below")
    big = mu.weight
    return 2 * sum((big - i) * int(j[i, i - 1]) for i in range(1, big))


def k_formula(label: OrbitLabel) -> int:
    """Closed-form k for the orbit named by ``label``."""
    f = label.family
    if f in (Family.GL, Family.SL):
        return 2 * (label.mu.weight * label.nu.weight - min_sum(label.mu, label.nu))
    if f is Family.OSP:
        m, n = label.mu.weight, label.nu.weight
        if m == 1:
            return n - label.nu.dual().part(1)
        if m == 2:
            return 2 * (n - label.nu.dual().part(1))
        return m * n - min_sum(label.mu, label.nu)
    if f in (Family.G3, Family.F4):
        return EXCEPTIONAL_ODD_DIM[f] - min_sum(label.mu, label.nu)
    if f is Family.Q:
        return label.mu.weight**2 - _square_dual_sum(label.mu)
    if f is Family.SQ:
        return label.mu.weight**2 - _square_dual_sum(label.mu) - 2 * epsilon(label.mu)
    if f is Family.P:
        return label.mu.weight**2 - _square_dual_sum(label.mu)
    if f is Family.GAMMA:
        key = gamma_key(label.triple)
        for triple, _, k in GAMMA_TABLE:
            if triple == key:
                return k
    raise InvalidLabel(f"no closed form for {label}")


def _representative(spec: AlgebraSpec, label: OrbitLabel):
    x = orbit_representative(spec, label)
    return build_algebra(x.spec), x


def k_oracle(spec: AlgebraSpec, label: OrbitLabel) -> int:
    """Exact rank of M(g) evaluated at an explicit representative."""
    if not spec.family.realizable:
        raise UnsupportedFamily(f"{spec.family.value} has no realization to evaluate")
    alg, x = _representative(spec, label)
    return exact.rank(evaluate_form(alg, x))


def even_orbit_dim(spec: AlgebraSpec, label: OrbitLabel) -> int:
    if not spec.family.realizable:
        raise UnsupportedFamily(f"{spec.family.value} has no realization; use the static tables")
    alg, x = _representative(spec, label)
    return alg.dim_even - centralizer_dims(alg, x)[0]


def has_even_form(spec: AlgebraSpec) -> bool:
    """Families with an even nondegenerate invariant form on all of g."""
    f = spec.family
    return f in (Family.GL, Family.OSP, Family.G3, Family.F4) or (f is Family.SL and spec.m != spec.n)


def superdimension(spec: AlgebraSpec, label: OrbitLabel, *, allow_outside: bool = False) -> tuple[int, int]:
    """(dim G0.x, k) for the orbit.

    The odd component is the closed form, cross-checked against the odd
    tangent dimension dim g1 - dim g1^x. Outside the families with an even
    nondegenerate form the pair is still computed when ``allow_outside`` is
    set, but the cross-check is skipped since it need not hold.
    """
    if not spec.family.realizable:
        raise UnsupportedFamily(f"{spec.family.value} has no realization")
    inside = has_even_form(spec)
    if not inside and not allow_outside:
        raise UnsupportedFamily(f"{spec} lacks an even nondegenerate form; pass allow_outside=True")
    check_label(spec, label)
    alg, x = _representative(spec, label)
    c0, c1 = centralizer_dims(alg, x)
    k = k_formula(label)
    if inside and alg.dim_odd - c1 != k:
        raise InvariantMismatch(f"{spec} {label}: odd tangent dimension {alg.dim_odd - c1} != k = {k}")
    return alg.dim_even - c0, k


@dataclass(frozen=True)
class InvariantReport:
    label: OrbitLabel
    k: int
    ell: int
    even_orbit_dim: int
    superdim: tuple[int, int]
    oracle_k: int | None
    agreement: bool
    has_even_form: bool
    odd_tangent_dim: int | None = None

    def as_row(self) -> dict:
        row = dict(self.label.as_dict())
        row.update(
            k=self.k,
            ell=self.ell,
            even_orbit_dim=self.even_orbit_dim,
            superdim=list(self.superdim),
            oracle_k=self.oracle_k,
            agree=self.agreement,
            caveat=None if self.has_even_form else "outside even-form hypothesis",
        )
        return row


_SL2_DIM = {Partition((2,)): 2, Partition((1, 1)): 0}


def report(spec: AlgebraSpec, label: OrbitLabel, *, oracle: bool = True) -> InvariantReport:
    """All invariants of one orbit; exceptional families use the static tables."""
    check_label(spec, label)
    k = k_formula(label)
    if spec.family.realizable:
        alg, x = _representative(spec, label)
        c0, c1 = centralizer_dims(alg, x)
        even = alg.dim_even - c0
        odd_tangent = alg.dim_odd - c1
        oracle_k = exact.rank(evaluate_form(alg, x)) if oracle else None
    else:
        rows = G3_TABLE if spec.family is Family.G3 else [(None, mu, d) for _, mu, d in F4_TABLE]
        even = next(d for _, mu, d in rows if mu == label.mu) + _SL2_DIM[label.nu]
        odd_tangent = None
        oracle_k = None
    return InvariantReport(
        label=label,
        k=k,
        ell=ell(k),
        even_orbit_dim=even,
        superdim=(even, k),
        oracle_k=oracle_k,
        agreement=oracle_k is None or oracle_k == k,
        has_even_form=has_even_form(spec),
        odd_tangent_dim=odd_tangent,
    )


# ---------------------------------------------------------------------------
# sweeps


@dataclass(frozen=True)
class VerificationRecord:
    family: str
    params: dict
    label: dict
    label_text: str
    k_formula: int
    k_oracle: int
    agree: bool


@dataclass
class VerificationReport:
    family: str
    records: list[VerificationRecord] = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def disagreements(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.agree]

    @property
    def ok(self) -> bool:
        return not self.disagreements

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "records": [asdict(r) for r in self.records],
            "count": len(self.records),
            "disagreements": len(self.disagreements),
            "notes": self.notes,
        }

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)


def sweep_specs(
    family: Family | str,
    *,
    max_m: int | None = None,
    max_n: int | None = None,
    sigmas: Sequence[Sequence] | None = None,
) -> list[AlgebraSpec]:
    """The parameter grid for a sweep; every bound must be explicit."""
    f = Family(family)
    if f in (Family.GL, Family.SL, Family.OSP):
        if max_m is None or max_n is None:
            raise ValueError(f"{f.value} sweeps need max_m and max_n")
        ns = range(2, max_n + 1, 2) if f is Family.OSP else range(1, max_n + 1)
        build = {Family.GL: AlgebraSpec.gl, Family.SL: AlgebraSpec.sl, Family.OSP: AlgebraSpec.osp}[f]
        return [build(m, n) for m in range(1, max_m + 1) for n in ns]
    if f in (Family.Q, Family.SQ, Family.P):
        if max_n is None:
            raise ValueError(f"{f.value} sweeps need max_n")
        low = 1 if f is Family.P else 3
        build = {Family.Q: AlgebraSpec.q, Family.SQ: AlgebraSpec.sq, Family.P: AlgebraSpec.p}[f]
        return [build(n) for n in range(low, max_n + 1)]
    if f is Family.GAMMA:
        return [AlgebraSpec.gamma(*s) for s in (sigmas or DEFAULT_GAMMA_SIGMAS)]
    raise UnsupportedFamily(f"{f.value} has no realization to sweep")


def _verify_one(item: tuple[AlgebraSpec, OrbitLabel]) -> VerificationRecord:
    spec, label = item
    formula = k_formula(label)
    oracle = k_oracle(spec, label)
    return VerificationRecord(
        family=spec.family.value,
        params=spec.params,
        label=label.as_dict(),
        label_text=str(label),
        k_formula=formula,
        k_oracle=oracle,
        agree=formula == oracle,
    )


def worker_count(workers: int | None = None) -> int:
    if workers is not None:
        return max(1, workers)
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def run_ordered(fn, items: Sequence, workers: int | None = None) -> list:
    """Map ``fn`` over ``items``, possibly in worker processes; results keep input order."""
    n = worker_count(workers)
    if n == 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=n) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * n))))


def verify_family(
    family: Family | str,
    *,
    max_m: int | None = None,
    max_n: int | None = None,
    sigmas: Sequence[Sequence] | None = None,
    specs: Iterable[AlgebraSpec] | None = None,
    workers: int | None = None,
) -> VerificationReport:
    """Compare closed form and oracle on every label in the requested range."""
    f = Family(family)
    spec_list = list(specs) if specs is not None else sweep_specs(f, max_m=max_m, max_n=max_n, sigmas=sigmas)
    items = [(spec, label) for spec in spec_list for label in orbit_labels(spec)]
    out = VerificationReport(family=f.value, records=run_ordered(_verify_one, items, workers))
    if f is Family.P:
        out.notes["p_convention"] = resolve_p_convention(tuple(s.n for s in spec_list if s.n <= 3) or (1, 2, 3))
    if f is Family.SQ:
        out.notes["correction"] = "k' = k - 2*epsilon(mu), epsilon(mu) = 1 iff every part of mu is even"
    return out


def resolve_p_convention(n_values: Sequence[int] = (1, 2, 3)) -> dict:
    """Decide which partitions label P(n) orbits by testing both readings against the oracle.

    Reading "n": mu is a partition of n, placed in sl(n+1) as mu with an
    extra part 1, and k = n^2 - sum mu'_i^2. Reading "n+1": mu is a Jordan
    type of sl(n+1) itself and k = (n+1)^2 - sum mu'_i^2.
    """
    from .partitions import enumerate_partitions

    results = {}
    for offset, name in ((0, "n"), (1, "n+1")):
        checked, bad, examples = 0, 0, []
        for n in n_values:
            spec = AlgebraSpec.p(n)
            for mu in enumerate_partitions(n + offset):
                padded = mu if offset else Partition(mu.parts + (1,))
                oracle = k_oracle(spec, OrbitLabel(Family.P, padded))
                formula = (n + offset) ** 2 - _square_dual_sum(mu)
                checked += 1
                if oracle != formula:
                    bad += 1
                    if len(examples) < 3:
                        examples.append({"n": n, "mu": str(mu), "formula": formula, "oracle": oracle})
        results[name] = {"labels": checked, "disagreements": bad, "examples": examples}
    chosen = "n+1" if results["n+1"]["disagreements"] == 0 else ("n" if results["n"]["disagreements"] == 0 else None)
    return {
        "n_values": list(n_values),
        "candidates": results,
        "resolved": chosen,
        "shipped_weight_offset": P_WEIGHT_OFFSET,
        "consistent": chosen == ("n+1" if P_WEIGHT_OFFSET == 1 else "n"),
    }
