from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hexpansive.corpus import EXAMPLE2_X, all_examples, example1, example2, example3, example4, example5
from hexpansive.errors import (
    DimensionError,
    InvalidTransformError,
    NotExpansiveError,
    PreconditionError,
)
from hexpansive.generator import PlantSpec, plant
from hexpansive.krein import HPair, defect, unobservable_subspace
from hexpansive.matrix import Matrix, hstack
from hexpansive.structure import (
    decompose,
    neutral_core,
    selfadjoint_decompose,
    skew_link,
    unitary_compression,
    verify,
    verify_selfadjoint,
)
from hexpansive.subspace import Subspace, extend_complement

SWAP = Matrix([[0, 1], [1, 0]])


def e(n, *idx):
    return Subspace.coordinates(n, [i - 1 for i in idx])


# ---- neutral core and skew link ------------------------------------------------


@pytest.mark.parametrize(
    "ex, expected",
    [(example3(), Subspace.zero(5)), (example1(), e(5, 1, 2)), (example5(), e(4, 1, 2))],
    ids=["example3", "example1", "example5"],
)
def test_neutral_core_examples(ex, expected):
    assert neutral_core(ex.N, ex.pair.H) == expected


def test_skew_link_trivial():
    assert skew_link(Subspace.zero(3), Subspace.zero(3), Matrix.identity(3)).shape == (3, 0)
    assert skew_link(e(2, 1), Subspace.zero(2), SWAP) == Matrix([[0], [1]])


def test_skew_link_example2():
    ex = example2()
    y = skew_link(e(5, 1), e(5, 2, 3, 4), ex.pair.H)
    assert [y[i, 0].re for i in range(5)] == [Fraction(x) for x in EXAMPLE2_X]
    assert all(y[i, 0].im == 0 for i in range(5))


def test_skew_link_preconditions():
    h = Matrix.identity(2)
    with pytest.raises(PreconditionError):
        skew_link(e(2, 1), Subspace.zero(2), h)
    with pytest.raises(PreconditionError):
        skew_link(e(3, 1), e(3, 2), Matrix([[0, 0, 1], [0, 0, 1], [1, 1, 0]]))


planted = st.integers(0, 10_000).map(
    lambda s: plant(PlantSpec(s % 3 + 1, (s // 3) % 3, (s // 9) % 3, seed=s, complex_entries=bool(s % 2)))
)


@given(planted, st.integers(0, 2**32))
def test_skew_link_contract(pp, seed):
    h = pp.pair.H
    n_space = unobservable_subspace(defect(pp.pair), pp.pair.A)
    m = neutral_core(n_space, h)
    m1 = extend_complement(m, n_space, seed=seed)
    y = skew_link(m, m1, h)
    p, q = m.basis, m1.basis
    assert p.adjoint() @ h @ y == Matrix.identity(m.dim)
    assert (y.adjoint() @ h @ y).is_zero()
    assert (q.adjoint() @ h @ y).is_zero()


# ---- decompose -------------------------------------------------------------------


@pytest.mark.parametrize("ex", all_examples(), ids=lambda ex: f"example{ex.id}")
def test_decompose_corpus(ex):
    dec = decompose(ex.pair)
    assert dec.dims == ex.dims
    assert dec.N == ex.N and dec.M == ex.M
    a22, h22, unitary_part = unitary_compression(dec)
    assert a22 == ex.A22 and h22 == ex.H22
    if ex.is_unitary_part is not None:
        assert unitary_part is ex.is_unitary_part
    assert verify(ex.pair, dec.S, dec.dims).all_pass


def test_example3_compression_is_the_pair():
    ex = example3()
    dec = decompose(ex.pair)
    a22, h22, part = unitary_compression(dec)
    assert (a22, h22, part) == (ex.pair.A, ex.pair.H, True)
    assert dec.S == Matrix.identity(5)


def test_strictly_expansive_has_no_neutral_part():
    dec = decompose(HPair(Matrix.diag([2, 2]), Matrix.identity(2)))
    assert dec.dims == (0, 0, 0, 2)
    assert dec.N.dim == 0
    assert dec.report.all_pass


def test_not_expansive():
    with pytest.raises(NotExpansiveError) as info:
        decompose(HPair(Matrix.diag(["1/2", "1/2"]), Matrix.identity(2)))
    assert info.value.inertia.neg == 2


@pytest.mark.parametrize("ex", [example1(), example2(), example4()], ids=["example1", "example2", "example4"])
def test_randomized_complement_keeps_dims(ex):
    base = decompose(ex.pair)
    for seed in range(10):
        dec = decompose(ex.pair, complement_seed=seed)
        assert dec.dims == base.dims
        assert dec.report.all_pass


def test_decomposition_blocks_are_consistent():
    dec = decompose(example1().pair)
    s, p = dec.S, example1().pair
    assert dec.transformed_A == p.conjugated(s).A
    assert dec.transformed_H == s.adjoint() @ p.H @ s
    assert dec.transformed_D == s.adjoint() @ defect(p) @ s
    assert dec.D22.shape == (0, 0) and dec.D11.shape == (2, 2)


# ---- verify ----------------------------------------------------------------------


def test_verify_example2_printed_s():
    ex = example2()
    assert verify(ex.pair, ex.S, ex.dims).all_pass
    assert ex.pair.conjugated(ex.S).A == ex.S_inv_A_S
    assert ex.S.adjoint() @ ex.pair.H @ ex.S == ex.S_star_H_S


def test_verify_example1_neutral_s():
    ex = example1()
    assert verify(ex.pair, ex.notes["neutral_S"], ex.dims).all_pass


def test_example1_printed_s_reproduces_printed_products():
    ex = example1()
    assert ex.pair.conjugated(ex.S).A == ex.S_inv_A_S
    assert ex.S.adjoint() @ ex.pair.H @ ex.S == ex.S_star_H_S


def test_example1_printed_s_pairing_is_not_neutral():
    # the printed S*HS carries -4 in the M2 Gram block, which the H-pattern forbids
    ex = example1()
    report = verify(ex.pair, ex.S, ex.dims)
    assert not report["h_pattern"].passed
    assert report["h_pattern"].witness is not None


@pytest.mark.parametrize("pos", [(0, 0), (3, 1), (1, 4), (2, 3)])
def test_verify_detects_perturbation(pos):
    ex = example1()
    s = ex.notes["neutral_S"]
    rows = s.tolist()
    rows[pos[0]][pos[1]] += 1
    bad = Matrix(rows)
    report = verify(ex.pair, bad, ex.dims)
    assert not report.all_pass
    for c in report.failed():
        assert c.witness is not None


def test_report_witness_iff_fail():
    ex = example1()
    for s in (ex.S, ex.notes["neutral_S"]):
        for c in verify(ex.pair, s, ex.dims).checks:
            assert (c.witness is None) == c.passed


def test_verify_rejects_bad_inputs():
    ex = example1()
    with pytest.raises(InvalidTransformError):
        verify(ex.pair, Matrix.zeros(5), ex.dims)
    with pytest.raises(DimensionError):
        verify(ex.pair, ex.S, (1, 1, 1, 1))
    with pytest.raises(DimensionError):
        verify(ex.pair, ex.S, (2, 1, 1, 1))


# ---- selfadjoint variant -----------------------------------------------------------


def test_selfadjoint_identity():
    h = Matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    for n_space in (Subspace.zero(3), e(3, 1), e(3, 1, 2), Subspace.whole(3)):
        dec = selfadjoint_decompose(HPair(Matrix.identity(3), h), n_space)
        assert dec.report.all_pass


def test_selfadjoint_nilpotent():
    a = Matrix([[0, 1], [0, 0]])
    dec = selfadjoint_decompose(HPair(a, SWAP), e(2, 1))
    assert dec.M == e(2, 1) and dec.M1.dim == 0
    assert dec.dims == (1, 0, 1, 0)
    assert dec.S[:, 1:2] == Matrix([[0], [1]])
    assert dec.A(1, 1) == Matrix([[0]])
    assert dec.A(1, 3) == Matrix([[1]])
    assert dec.A(3, 3) == Matrix([[0]])


def test_selfadjoint_preconditions():
    with pytest.raises(PreconditionError):
        selfadjoint_decompose(HPair(Matrix([[1, 1], [0, 1]]), Matrix.identity(2)), e(2, 1))
    with pytest.raises(PreconditionError):
        selfadjoint_decompose(HPair(Matrix([[0, 1], [0, 0]]), SWAP), e(2, 2))


def test_verify_selfadjoint_rejects_wrong_basis():
    a = Matrix([[0, 1], [0, 0]])
    p = HPair(a, SWAP)
    assert verify_selfadjoint(p, Matrix.identity(2), (1, 0, 1, 0)).all_pass
    assert not verify_selfadjoint(p, SWAP, (1, 0, 1, 0)).all_pass
