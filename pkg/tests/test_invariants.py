from __future__ import annotations

import jsonschema
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from superorbits import invariants
from superorbits.errors import InvalidLabel, InvariantMismatch, UnsupportedFamily
from superorbits.families import AlgebraSpec, Family, OrbitLabel, orbit_labels
from superorbits.invariants import (
    ell,
    epsilon,
    k_formula,
    k_oracle,
    p_weighted_sum,
    report,
    resolve_p_convention,
    run_ordered,
    superdimension,
    sweep_specs,
    verify_family,
)
from superorbits.algebra import build_algebra
from superorbits.output import load_schema
from superorbits.partitions import Partition, enumerate_partitions, jordan_matrix

P = Partition.of


def test_ell():
    assert [ell(k) for k in range(7)] == [0, 1, 1, 2, 2, 3, 3]
    with pytest.raises(ValueError):
        ell(-1)


@pytest.mark.parametrize(
    "label, k",
    [
        (OrbitLabel.pair("gl", "2", "1"), 2),
        (OrbitLabel.pair("gl", "3,1", "2,1"), 14),
        (OrbitLabel.pair("sl", "2", "2"), 4),
        (OrbitLabel.pair("osp", "3", "2"), 4),
        (OrbitLabel.pair("osp", "1", "2"), 1),
        (OrbitLabel.pair("osp", "1^2", "2"), 2),
        (OrbitLabel.pair("osp", "2^2", "2", tag="II"), 4),
        (OrbitLabel.single("q", "3"), 6),
        (OrbitLabel.single("sq", "2,2"), 6),
        (OrbitLabel.single("sq", "3,1"), 10),
        (OrbitLabel.single("p", "2"), 2),
        (OrbitLabel.gamma("2", "2", "2"), 5),
        (OrbitLabel.gamma("1^2", "2", "1^2"), 4),
        (OrbitLabel.pair("g3", "7", "2"), 12),
        (OrbitLabel.pair("f4", "7,1", "1^2"), 12),
    ],
    ids=str,
)
def test_k_formula_examples(label, k):
    assert k_formula(label) == k


def test_k_oracle_examples():
    assert k_oracle(AlgebraSpec.gl(3, 2), OrbitLabel.pair("gl", "3", "2")) == 8
    assert k_oracle(AlgebraSpec.q(3), OrbitLabel.single("q", "3")) == 6
    assert k_oracle(AlgebraSpec.sq(4), OrbitLabel.single("sq", "2,2")) == 6
    with pytest.raises(UnsupportedFamily):
        k_oracle(AlgebraSpec.g3(), OrbitLabel.pair("g3", "7", "2"))


def test_superdimension():
    assert superdimension(AlgebraSpec.osp(3, 2), OrbitLabel.pair("osp", "3", "2")) == (4, 4)
    assert superdimension(AlgebraSpec.gl(2, 1), OrbitLabel.pair("gl", "2", "1")) == (2, 2)
    with pytest.raises(UnsupportedFamily):
        superdimension(AlgebraSpec.q(3), OrbitLabel.single("q", "3"))
    assert superdimension(AlgebraSpec.q(3), OrbitLabel.single("q", "3"), allow_outside=True) == (6, 6)
    with pytest.raises(InvalidLabel):
        superdimension(AlgebraSpec.gl(2, 1), OrbitLabel.pair("gl", "3", "1"))


@pytest.mark.parametrize("spec", [AlgebraSpec.gl(3, 3), AlgebraSpec.sl(3, 2), AlgebraSpec.osp(5, 4), AlgebraSpec.osp(4, 4)], ids=str)
def test_superdimension_cross_check_holds(spec):
    for label in orbit_labels(spec):
        even, k = superdimension(spec, label)
        assert k == k_formula(label) and even >= 0


def test_superdimension_detects_wrong_k(monkeypatch):
    monkeypatch.setattr(invariants, "k_formula", lambda label: 99)
    with pytest.raises(InvariantMismatch):
        superdimension(AlgebraSpec.gl(2, 1), OrbitLabel.pair("gl", "2", "1"))


def test_report_rows():
    row = report(AlgebraSpec.osp(3, 2), OrbitLabel.pair("osp", "3", "2")).as_row()
    assert row["k"] == row["oracle_k"] == 4 and row["superdim"] == [4, 4] and row["caveat"] is None
    row = report(AlgebraSpec.p(2), OrbitLabel.single("p", "3")).as_row()
    assert row["caveat"] == "outside even-form hypothesis" and row["agree"]
    row = report(AlgebraSpec.g3(), OrbitLabel.pair("g3", "7", "2")).as_row()
    assert row["even_orbit_dim"] == 14 and row["oracle_k"] is None


@pytest.mark.parametrize(
    "family, kwargs",
    [
        ("gl", dict(max_m=3, max_n=3)),
        ("sl", dict(max_m=3, max_n=2)),
        ("osp", dict(max_m=4, max_n=4)),
        ("q", dict(max_n=4)),
        ("sq", dict(max_n=4)),
        ("p", dict(max_n=3)),
        ("gamma", {}),
    ],
)
def test_small_sweeps_agree(family, kwargs):
    rep = verify_family(family, **kwargs)
    assert rep.records and rep.ok, [r.label_text for r in rep.disagreements]


@pytest.mark.parametrize("r", [1, 2, 3])
def test_osp2_family_agrees(r):
    spec = AlgebraSpec.osp(2, 2 * r)
    for label in orbit_labels(spec):
        assert k_oracle(spec, label) == k_formula(label) == 2 * (2 * r - label.nu.dual().part(1))


def test_sweep_bounds_are_required():
    with pytest.raises(ValueError):
        sweep_specs("gl", max_m=2)
    with pytest.raises(ValueError):
        sweep_specs("q")
    with pytest.raises(UnsupportedFamily):
        sweep_specs("g3")
    assert [s.n for s in sweep_specs("osp", max_m=1, max_n=5)] == [2, 4]


@pytest.mark.parametrize("spec", [AlgebraSpec.gl(3, 2), AlgebraSpec.osp(3, 4), AlgebraSpec.q(4), AlgebraSpec.p(3), AlgebraSpec.gamma(1, 2, -3)], ids=str)
def test_k_bounds(spec):
    d1 = build_algebra(spec).dim_odd
    for label in orbit_labels(spec):
        k = k_formula(label)
        assert 0 <= k <= d1
        assert (k == 0) == label.is_zero


@pytest.mark.parametrize("spec", [AlgebraSpec.gl(3, 3), AlgebraSpec.osp(4, 2), AlgebraSpec.q(4), AlgebraSpec.sq(4)], ids=str)
def test_k_parity(spec):
    # gl, q and sq forms are even-rank; osp can be odd
    for label in orbit_labels(spec):
        if spec.family is not Family.OSP:
            assert k_formula(label) % 2 == 0


@pytest.mark.parametrize("n", range(1, 9))
def test_p_weighted_sum_identity(n):
    for mu in enumerate_partitions(n):
        assert p_weighted_sum(mu) == n * n - sum(p * p for p in mu.dual())


@given(st.integers(3, 7).flatmap(lambda n: st.sampled_from(enumerate_partitions(n))))
@settings(max_examples=40, deadline=None)
def test_sq_correction_is_epsilon(mu):
    diff = k_formula(OrbitLabel.single("q", mu)) - k_formula(OrbitLabel.single("sq", mu))
    assert diff == 2 * epsilon(mu)
    assert epsilon(mu) == (mu.weight % 2 == 0 and all(p % 2 == 0 for p in mu))


def test_verification_report_schema():
    doc = verify_family("gl", max_m=2, max_n=2).to_dict()
    jsonschema.validate(doc, load_schema("verification_report"))
    assert doc["count"] == len(doc["records"]) and doc["disagreements"] == 0


def test_p_report_carries_resolution():
    notes = verify_family("p", max_n=2).notes
    assert notes["p_convention"]["resolved"] == "n+1"


def test_resolve_p_convention():
    res = resolve_p_convention()
    assert res["resolved"] == "n+1" and res["consistent"] and res["shipped_weight_offset"] == 1
    assert res["candidates"]["n+1"]["disagreements"] == 0
    first = res["candidates"]["n"]["examples"][0]
    assert (first["n"], first["mu"], first["formula"], first["oracle"]) == (2, "2", 2, 4)


def test_parallel_sweep_matches_serial():
    specs = sweep_specs("gl", max_m=2, max_n=3)
    serial = verify_family("gl", specs=specs, workers=1)
    parallel = verify_family("gl", specs=specs, workers=2)
    assert serial.to_dict() == parallel.to_dict()
    assert run_ordered(abs, [-3, 1, -2], workers=2) == [3, 1, 2]


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv(invariants.THREADS_ENV, "3")
    assert invariants.worker_count() == 3
    monkeypatch.setenv(invariants.THREADS_ENV, "many")
    assert invariants.worker_count() == 1
    assert invariants.worker_count(0) == 1


@pytest.mark.parametrize("family, odd", [("g3", 7), ("f4", 8)])
def test_exceptional_k_matches_kronecker_rank(family, odd):
    spec = AlgebraSpec(Family(family))
    for label in orbit_labels(spec):
        jm = sympy.Matrix(jordan_matrix(label.mu).tolist())
        jn = sympy.Matrix(jordan_matrix(label.nu).tolist())
        op = sympy.kronecker_product(jm, sympy.eye(2)) + sympy.kronecker_product(sympy.eye(odd), jn)
        assert op.rank() == k_formula(label)
