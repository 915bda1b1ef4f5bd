import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kaczframe.core import (
    UnitLowerTriangular,
    hermitian_extreme_eigs,
    invert_unit_lower_triangular,
    operator_norm,
)
from kaczframe.errors import NonFinite, NonHermitian, ShapeMismatch
from oracles import dense_inverse, jacobi_eigvals, random_hermitian


def test_extreme_eigs_identity():
    assert hermitian_extreme_eigs(np.eye(4)) == (1.0, 1.0)


def test_extreme_eigs_diagonal():
    lo, hi = hermitian_extreme_eigs(np.diag([0.25, 1.0, 4.0]))
    assert lo == pytest.approx(0.25, rel=1e-14)
    assert hi == pytest.approx(4.0, rel=1e-14)


def test_extreme_eigs_match_jacobi_oracle():
    h = random_hermitian(8, 11)
    w = jacobi_eigvals(h)
    lo, hi = hermitian_extreme_eigs(h)
    assert lo == pytest.approx(w[0], rel=1e-10)
    assert hi == pytest.approx(w[-1], rel=1e-10)


def test_extreme_eigs_rejects_non_hermitian():
    h = np.array([[1.0, 2.0], [0.0, 1.0]])
    with pytest.raises(NonHermitian):
        hermitian_extreme_eigs(h)


def test_extreme_eigs_rejects_bad_input():
    with pytest.raises(ShapeMismatch):
        hermitian_extreme_eigs(np.ones((2, 3)))
    with pytest.raises(NonFinite):
        hermitian_extreme_eigs(np.array([[np.nan]]))


def test_extreme_eigs_large():
    h = random_hermitian(512, 0)
    lo, hi = hermitian_extreme_eigs(h)
    w = np.linalg.eigvals(h).real
    assert lo == pytest.approx(w.min(), rel=1e-10)
    assert hi == pytest.approx(w.max(), rel=1e-10)


def test_rayleigh_quotients_are_bracketed(rng):
    h = random_hermitian(10, 4)
    lo, hi = hermitian_extreme_eigs(h)
    for _ in range(100):
        x = rng.standard_normal(10) + 1j * rng.standard_normal(10)
        q = np.vdot(x, h @ x).real / np.vdot(x, x).real
        assert lo - 1e-12 <= q <= hi + 1e-12


def test_operator_norm_zero():
    assert operator_norm(np.zeros((3, 3))) == 0.0


def test_operator_norm_remark_u():
    u = np.zeros((4, 4))
    u[1, 0] = -0.5
    assert operator_norm(u) == pytest.approx(0.5, abs=1e-15)


def test_operator_norm_matches_eig_oracle():
    rng = np.random.default_rng(3)
    t = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    expected = np.sqrt(jacobi_eigvals(t.conj().T @ t)[-1])
    assert operator_norm(t) == pytest.approx(expected, rel=1e-10)


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 8), st.integers(1, 8), st.integers(0, 2**31))
def test_operator_norm_dominates_columns(rows, cols, seed):
    rng = np.random.default_rng(seed)
    t = rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))
    assert operator_norm(t) >= np.max(np.linalg.norm(t, axis=0)) * (1 - 1e-12)


def test_unit_lower_discards_diagonal_and_upper():
    m = UnitLowerTriangular(np.arange(9.0).reshape(3, 3))
    np.testing.assert_array_equal(m.dense().real, [[1, 0, 0], [3, 1, 0], [6, 7, 1]])
    assert not m.strict.flags.writeable


def test_invert_identity():
    c = invert_unit_lower_triangular(UnitLowerTriangular.identity(5))
    np.testing.assert_array_equal(c.dense(), np.eye(5))


def test_invert_remark_matrix():
    m = UnitLowerTriangular.identity(4).dense()
    m[1, 0] = 0.5
    c = invert_unit_lower_triangular(UnitLowerTriangular.from_dense(m))
    expected = np.eye(4)
    expected[1, 0] = -0.5
    np.testing.assert_array_equal(c.dense(), expected)


@pytest.mark.parametrize("n", [20, 64, 512])
def test_invert_matches_dense_inverse(n):
    rng = np.random.default_rng(5)
    # entries scaled so M stays well conditioned at every size
    strict = np.tril(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)), -1) / n
    m = UnitLowerTriangular(strict)
    c = invert_unit_lower_triangular(m)
    assert np.max(np.abs(m.dense() @ c.dense() - np.eye(n))) <= 1e-12
    assert np.max(np.abs(c.dense() @ m.dense() - np.eye(n))) <= 1e-12
    if n <= 64:
        assert np.max(np.abs(c.dense() - dense_inverse(m.dense()))) <= 1e-12


def test_invert_random_fill_n20():
    rng = np.random.default_rng(5)
    m = UnitLowerTriangular(np.tril(rng.uniform(-1, 1, (20, 20)), -1))
    c = invert_unit_lower_triangular(m)
    ref = dense_inverse(m.dense())
    scale = max(1.0, np.max(np.abs(ref)))
    assert np.max(np.abs(c.dense() - ref)) <= 1e-12 * scale


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 24), st.integers(0, 2**31))
def test_double_inverse_roundtrip(n, seed):
    rng = np.random.default_rng(seed)
    strict = np.tril(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)), -1) / (2 * n)
    m = UnitLowerTriangular(strict)
    back = invert_unit_lower_triangular(invert_unit_lower_triangular(m))
    assert np.max(np.abs(back.dense() - m.dense())) <= 1e-12
