from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import numpy as np
import pytest
import sympy

from superorbits import exact
from superorbits.algebra import (
    build_algebra,
    centralizer_dims,
    evaluate_form,
    factor_blocks,
    form_matrix,
    jacobi_check,
    jordan_type,
    orbit_representative,
)
from superorbits.errors import InvalidLabel, InvalidSpec, JacobiFailure, NotInEvenPart, NotNilpotent, UnsupportedFamily
from superorbits.families import AlgebraSpec, Family, OrbitLabel, orbit_labels
from superorbits.partitions import Partition, jordan_matrix, min_sum

P = Partition.of

SMALL_SPECS = [
    AlgebraSpec.gl(1, 1),
    AlgebraSpec.gl(2, 1),
    AlgebraSpec.gl(2, 3),
    AlgebraSpec.sl(1, 2),
    AlgebraSpec.sl(2, 2),
    AlgebraSpec.sl(3, 1),
    AlgebraSpec.osp(1, 2),
    AlgebraSpec.osp(2, 2),
    AlgebraSpec.osp(3, 4),
    AlgebraSpec.osp(4, 2),
    AlgebraSpec.q(3),
    AlgebraSpec.sq(3),
    AlgebraSpec.sq(4),
    AlgebraSpec.p(1),
    AlgebraSpec.p(2),
    AlgebraSpec.p(3),
    AlgebraSpec.gamma(1, 1, -2),
    AlgebraSpec.gamma(Fraction(1, 2), Fraction(1, 3), Fraction(-5, 6)),
]


@pytest.mark.parametrize(
    "spec, d0, d1",
    [
        (AlgebraSpec.gl(1, 1), 2, 2),
        (AlgebraSpec.gl(2, 3), 13, 12),
        (AlgebraSpec.sl(2, 3), 12, 12),
        (AlgebraSpec.osp(1, 2), 3, 2),
        (AlgebraSpec.osp(3, 2), 6, 6),
        (AlgebraSpec.q(3), 9, 9),
        (AlgebraSpec.sq(3), 9, 8),
        (AlgebraSpec.p(2), 8, 9),
        (AlgebraSpec.gamma(1, 1, -2), 9, 8),
    ],
)
def test_dimensions(spec, d0, d1):
    alg = build_algebra(spec)
    assert (alg.dim_even, alg.dim_odd) == (d0, d1)


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_self_checks_and_symmetry(spec):
    alg = build_algebra(spec)
    jacobi_check(alg)
    assert form_matrix(alg).is_symmetric()


@pytest.mark.parametrize("sigma", [(1, 1, 1), (1, 2, -2), (Fraction(1, 2), 1, -1)])
def test_gamma_jacobi_requires_zero_sum(sigma):
    spec = AlgebraSpec(Family.GAMMA, sigma=tuple(Fraction(s) for s in sigma), checked=False)
    with pytest.raises(JacobiFailure):
        build_algebra(spec)


@pytest.mark.parametrize(
    "make",
    [
        lambda: AlgebraSpec.osp(3, 3),
        lambda: AlgebraSpec.osp(0, 2),
        lambda: AlgebraSpec.q(2),
        lambda: AlgebraSpec.sq(1),
        lambda: AlgebraSpec.gamma(1, 1, 1),
        lambda: AlgebraSpec.gamma(0, 1, -1),
        lambda: AlgebraSpec.gl(0, 1),
        lambda: AlgebraSpec.osp(2, 2, gram1=[[1, 0], [0, 0]]),
        lambda: AlgebraSpec.osp(1, 2, gram2=[[0, 1], [1, 0]]),
    ],
)
def test_invalid_specs(make):
    with pytest.raises(InvalidSpec):
        make()


def test_exceptional_families_are_not_built():
    with pytest.raises(UnsupportedFamily):
        build_algebra(AlgebraSpec.g3())


def test_gl11_form_matrix():
    fm = form_matrix(build_algebra(AlgebraSpec.gl(1, 1)))
    assert fm.entry(0, 0) == (0, 0) and fm.entry(1, 1) == (0, 0)
    # [e12, e21] = e11 + e22
    assert fm.entry(0, 1) == (1, 1) == fm.entry(1, 0)
    assert fm.symbolic(0, 1) == "e1,1 + e2,2"


@pytest.mark.parametrize("m, n", [(1, 2), (2, 2), (3, 2)])
def test_gl_form_matrix_block_shape(m, n):
    alg = build_algebra(AlgebraSpec.gl(m, n))
    fm = form_matrix(alg)
    plus, minus = range(*alg.metadata["odd_plus"]), range(*alg.metadata["odd_minus"])
    assert fm.block_is_zero(plus, plus) and fm.block_is_zero(minus, minus)
    assert not fm.block_is_zero(plus, minus)


@pytest.mark.parametrize("n", [1, 2])
def test_p_form_matrix_blocks(n):
    alg = build_algebra(AlgebraSpec.p(n))
    fm = form_matrix(alg)
    plus, minus = range(*alg.metadata["odd_plus"]), range(*alg.metadata["odd_minus"])
    assert fm.block_is_zero(plus, plus) and fm.block_is_zero(minus, minus)


def _gamma_kronecker_form(sigma):
    """M(g) assembled as s3 Psi(x)Psi(x)Pi3 + s2 Psi(x)Pi2(x)Psi + s1 Pi1(x)Psi(x)Psi."""
    psi = [[0, 1], [-1, 0]]

    def pi(factor):
        # coefficient vectors over (e1,h1,f1,e2,h2,f2,e3,h3,f3)
        def vec(name, c):
            v = [0] * 9
            v[3 * factor + "ehf".index(name)] = c
            return v

        return [[vec("e", 2), vec("h", -1)], [vec("h", -1), vec("f", -2)]]

    out = np.zeros((8, 8, 9), dtype=object)
    triples = list(product(range(2), repeat=3))
    for i, a in enumerate(triples):
        for j, b in enumerate(triples):
            total = np.zeros(9, dtype=object)
            total += sigma[2] * psi[a[0]][b[0]] * psi[a[1]][b[1]] * np.array(pi(2)[a[2]][b[2]], dtype=object)
            total += sigma[1] * psi[a[0]][b[0]] * psi[a[2]][b[2]] * np.array(pi(1)[a[1]][b[1]], dtype=object)
            total += sigma[0] * psi[a[1]][b[1]] * psi[a[2]][b[2]] * np.array(pi(0)[a[0]][b[0]], dtype=object)
            out[i, j] = total
    return out


@pytest.mark.parametrize("sigma", [(1, 1, -2), (Fraction(2, 3), Fraction(-7, 5), Fraction(11, 15))])
def test_gamma_form_matrix_matches_kronecker_form(sigma):
    alg = build_algebra(AlgebraSpec.gamma(*sigma))
    assert alg.even_labels == ("e1", "h1", "f1", "e2", "h2", "f2", "e3", "h3", "f3")
    assert np.array_equal(form_matrix(alg).entries, _gamma_kronecker_form([Fraction(s) for s in sigma]))


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=str)
def test_evaluate_at_zero(spec):
    alg = build_algebra(spec)
    assert not np.any(evaluate_form(alg, alg.zero()))


def test_gl11_identity_evaluation():
    alg = build_algebra(AlgebraSpec.gl(1, 1))
    k = evaluate_form(alg, alg.element([[1, 0], [0, 1]]))
    # <e11 + e22, I> = tr(I) = 2 off the diagonal
    assert k.tolist() == [[0, 2], [2, 0]]
    assert exact.rank(k) == 2


def test_q2_analog_rank():
    alg = build_algebra(AlgebraSpec.q(2, checked=False))
    x = alg.element([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])
    assert exact.rank(evaluate_form(alg, x)) == 2


def test_not_in_even_part():
    alg = build_algebra(AlgebraSpec.gl(1, 1))
    with pytest.raises(NotInEvenPart):
        alg.element([[0, 1], [0, 0]])
    alg = build_algebra(AlgebraSpec.sl(2, 1))
    with pytest.raises(NotInEvenPart):
        alg.element(np.eye(3, dtype=int))
    other = build_algebra(AlgebraSpec.gl(2, 1)).zero()
    with pytest.raises(NotInEvenPart):
        evaluate_form(build_algebra(AlgebraSpec.gl(1, 2)), other)


def test_gl_representative():
    x = orbit_representative(AlgebraSpec.gl(2, 1), OrbitLabel.pair("gl", "2", "1"))
    assert x.matrix.tolist() == [[0, 1, 0], [0, 0, 0], [0, 0, 0]]


def test_osp_representative_preserves_forms():
    x = orbit_representative(AlgebraSpec.osp(3, 2), OrbitLabel.pair("osp", "3", "2"))
    assert x.preserves_forms()
    assert [jordan_type(b) for b in factor_blocks(x)] == [P(3), P(2)]


def test_very_even_tags_share_k():
    spec = AlgebraSpec.osp(4, 2)
    ks = {}
    for tag in ("I", "II"):
        x = orbit_representative(spec, OrbitLabel.pair("osp", "2^2", "2", tag=tag))
        assert x.preserves_forms()
        assert jordan_type(factor_blocks(x)[0]) == P(2, 2)
        ks[tag] = exact.rank(evaluate_form(build_algebra(x.spec), x))
    assert ks["I"] == ks["II"] == 4 * 2 - min_sum(P(2, 2), P(2))


def test_osp_labels_enforce_parity_and_tags():
    with pytest.raises(InvalidLabel):
        OrbitLabel.pair("osp", "2", "2")
    with pytest.raises(InvalidLabel):
        OrbitLabel.pair("osp", "3", "3")
    with pytest.raises(InvalidLabel):
        OrbitLabel.pair("osp", "2^2", "2")
    with pytest.raises(InvalidLabel):
        OrbitLabel.pair("osp", "3", "2", tag="I")
    with pytest.raises(InvalidLabel):
        orbit_representative(AlgebraSpec.osp(3, 2), OrbitLabel.pair("osp", "1", "2"))
    with pytest.raises(InvalidLabel):
        orbit_representative(AlgebraSpec.gl(2, 1), OrbitLabel.pair("osp", "1^2", "2"))


@pytest.mark.parametrize(
    "spec",
    [AlgebraSpec.gl(3, 2), AlgebraSpec.sl(2, 2), AlgebraSpec.osp(5, 4), AlgebraSpec.osp(6, 2), AlgebraSpec.q(4), AlgebraSpec.sq(3), AlgebraSpec.p(3), AlgebraSpec.gamma(1, 2, -3)],
    ids=str,
)
def test_representatives_round_trip(spec):
    for label in orbit_labels(spec):
        x = orbit_representative(spec, label)
        assert x.preserves_forms()
        types = [jordan_type(b) for b in factor_blocks(x)]
        if label.triple is not None:
            assert types == list(label.triple)
        elif label.nu is not None:
            assert types == [label.mu, label.nu]
        else:
            assert types == [label.mu]


def test_jordan_type_examples():
    assert jordan_type(jordan_matrix(P(3, 1))) == P(3, 1)
    assert jordan_type(np.zeros((4, 4), dtype=int)) == P(1, 1, 1, 1)
    g = sympy.Matrix([[1, 2, 0, 1], [0, 1, 3, 0], [0, 0, 1, -1], [0, 0, 0, 1]]) * sympy.Matrix(
        [[1, 0, 0, 0], [1, 1, 0, 0], [0, 2, 1, 0], [3, 0, 1, 1]]
    )
    assert g.det() == 1
    conj = g * sympy.Matrix(jordan_matrix(P(2, 2)).tolist()) * g.inv()
    assert jordan_type(conj.tolist()) == P(2, 2)
    with pytest.raises(NotNilpotent):
        jordan_type([[1, 0], [0, 0]])


def test_centralizer_examples():
    alg = build_algebra(AlgebraSpec.gl(2, 2))
    assert centralizer_dims(alg, alg.zero()) == (8, 8)
    x = orbit_representative(AlgebraSpec.gl(2, 2), OrbitLabel.pair("gl", "2", "2"))
    assert centralizer_dims(alg, x) == (4, 4)


@pytest.mark.parametrize("m, n", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3)])
def test_gl_odd_centralizer(m, n):
    spec = AlgebraSpec.gl(m, n)
    alg = build_algebra(spec)
    for label in orbit_labels(spec):
        x = orbit_representative(spec, label)
        assert centralizer_dims(alg, x)[1] == 2 * min_sum(label.mu, label.nu)


@pytest.mark.parametrize("spec", [AlgebraSpec.gl(3, 2), AlgebraSpec.sl(2, 3), AlgebraSpec.osp(4, 4), AlgebraSpec.osp(5, 2)], ids=str)
def test_rank_equals_odd_codimension(spec):
    for label in orbit_labels(spec):
        x = orbit_representative(spec, label)
        alg = build_algebra(x.spec)
        assert exact.rank(evaluate_form(alg, x)) == alg.dim_odd - centralizer_dims(alg, x)[1]


def _unimodular(n, rng):
    g = sympy.eye(n)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i == j:
            continue
        e = sympy.eye(n)
        e[i, j] = rng.choice([-2, -1, 1, 2])
        g = g * e
    return g


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize("spec", [AlgebraSpec.gl(3, 2), AlgebraSpec.q(3), AlgebraSpec.p(2)], ids=str)
def test_rank_is_conjugation_invariant(spec, seed):
    rng = random.Random(seed)
    alg = build_algebra(spec)
    for label in orbit_labels(spec):
        x = orbit_representative(spec, label)
        base = exact.rank(evaluate_form(alg, x))
        mat = sympy.Matrix(x.matrix.tolist())
        if spec.family is Family.GL:
            g = sympy.diag(_unimodular(spec.m, rng), _unimodular(spec.n, rng))
        elif spec.family is Family.Q:
            a = _unimodular(spec.n, rng)
            g = sympy.diag(a, a)
        else:
            a = _unimodular(spec.n + 1, rng)
            g = sympy.diag(a, a.inv().T)
        conj = (g * mat * g.inv()).tolist()
        y = alg.element(conj)
        assert exact.rank(evaluate_form(alg, y)) == base
