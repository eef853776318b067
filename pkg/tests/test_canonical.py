import numpy as np
import pytest

from skewvn.antilinear import AntilinearOperator
from skewvn.canonical import (
    K2,
    antilinear_block_skew_diagonalize,
    polar_factorize,
    youla_decompose,
)
from skewvn.errors import NotSkewSelfAdjoint, NotSkewSymmetric, OddKernel
from skewvn.matcore import frob


def random_complex(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_unitary(rng, n):
    q, r = np.linalg.qr(random_complex(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_skew(rng, n):
    w = random_complex(rng, n, n)
    return w - w.T


def roundtrip_residual(m, result):
    return frob(m - result.u @ result.block_matrix() @ result.u.T)


def test_youla_canonical_form_input():
    m = np.array([[0, 1], [-1, 0]], dtype=complex)
    result = youla_decompose(m)
    assert np.allclose(result.r, [1.0])
    assert result.kernel_dim == 0
    assert roundtrip_residual(m, result) <= 1e-10


def test_youla_zero():
    result = youla_decompose(np.zeros((2, 2)))
    assert result.r.size == 0
    assert result.kernel_dim == 2


def test_youla_with_kernel_svd_oracle():
    m = np.array([[0, 2j, 0], [-2j, 0, 0], [0, 0, 0]], dtype=complex)
    # oracle: singular values of m are {2, 2, 0}
    assert np.allclose(np.linalg.svd(m, compute_uv=False), [2, 2, 0])
    result = youla_decompose(m)
    assert np.allclose(result.r, [2.0])
    assert result.kernel_dim == 1
    assert roundtrip_residual(m, result) <= 1e-9 * (1 + frob(m))


def test_youla_rejects_non_skew():
    with pytest.raises(NotSkewSymmetric):
        youla_decompose(np.eye(3))


def test_youla_roundtrip_random():
    rng = np.random.default_rng(30)
    for n in (2, 3, 5, 8, 13, 21):
        m = random_skew(rng, n)
        result = youla_decompose(m)
        assert roundtrip_residual(m, result) <= 1e-9 * (1 + frob(m))
        assert (
            frob(result.u.conj().T @ result.u - np.eye(n)) <= 1e-10 * n
        )
        assert np.all(np.diff(result.r) <= 1e-12)
        # r carries each positive singular value with half its multiplicity
        s = np.linalg.svd(m, compute_uv=False)
        paired = np.sort(np.concatenate([result.r, result.r]))[::-1]
        positive = s[s > 1e-10 * s[0]]
        assert np.allclose(paired, positive, atol=1e-8 * (1 + s[0]))


def test_multiplicity_evenness():
    rng = np.random.default_rng(31)
    for n in (4, 7, 10):
        m = random_skew(rng, n)
        s = np.linalg.svd(m, compute_uv=False)
        s_max = s[0]
        positive = [x for x in s if x > 1e-10 * s_max]
        # cluster at relative gap 1e-8 and check each cluster size is even
        clusters = []
        for x in positive:
            if clusters and abs(clusters[-1][-1] - x) <= 1e-8 * s_max:
                clusters[-1].append(x)
            else:
                clusters.append([x])
        assert all(len(c) % 2 == 0 for c in clusters)


def test_antilinear_block_exact():
    a = AntilinearOperator(np.array([[0, -3], [3, 0]], dtype=complex))
    result = antilinear_block_skew_diagonalize(a)
    assert np.allclose(result.r, [3.0])
    compressed = result.u.conj().T @ a.mat @ np.conj(result.u)
    assert frob(compressed - 3 * K2) <= 1e-10


def test_antilinear_block_zero():
    result = antilinear_block_skew_diagonalize(AntilinearOperator(np.zeros((4, 4))))
    assert result.r.size == 0
    assert result.kernel_dim == 4


def test_antilinear_block_construct_recover():
    rng = np.random.default_rng(32)
    u0 = random_unitary(rng, 4)
    b = np.zeros((4, 4), dtype=complex)
    b[:2, :2] = 2 * K2
    b[2:, 2:] = 1 * K2
    a = AntilinearOperator(u0 @ b @ u0.T)
    result = antilinear_block_skew_diagonalize(a)
    assert np.allclose(result.r, [2.0, 1.0], atol=1e-10)
    target = np.zeros((4, 4), dtype=complex)
    for j, r in enumerate(result.r):
        target[2 * j : 2 * j + 2, 2 * j : 2 * j + 2] = r * K2
    compressed = result.u.conj().T @ a.mat @ np.conj(result.u)
    assert frob(compressed - target) <= 1e-9


def test_antilinear_block_rejects_non_skew():
    with pytest.raises(NotSkewSelfAdjoint):
        antilinear_block_skew_diagonalize(AntilinearOperator(np.eye(4)))


def test_polar_exact_two_by_two():
    a = AntilinearOperator(np.array([[0, 3], [-3, 0]], dtype=complex))
    result = polar_factorize(a)
    assert frob(result.modulus - 3 * np.eye(2)) <= 1e-10
    assert frob(result.kappa.mat - np.array([[0, 1], [-1, 0]])) <= 1e-10


def test_polar_odd_kernel():
    m = np.array([[0, 1, 0], [-1, 0, 0], [0, 0, 0]], dtype=complex)
    with pytest.raises(OddKernel):
        polar_factorize(AntilinearOperator(m))


def test_polar_zero_operator():
    result = polar_factorize(AntilinearOperator(np.zeros((4, 4))))
    assert np.allclose(result.modulus, 0.0)
    k = result.kappa.mat
    assert frob(k.conj().T @ k - np.eye(4)) <= 1e-10
    assert frob(k @ np.conj(k) + np.eye(4)) <= 1e-10


def test_polar_identities_random():
    rng = np.random.default_rng(33)
    for n in (2, 4, 6, 10):
        a = AntilinearOperator(random_skew(rng, n))
        result = polar_factorize(a)
        k = result.kappa.mat
        s = result.modulus
        scale = 1e-9 * (1 + frob(a.mat))
        # A = kappa |A|: antilinear o linear has matrix K conj(S)
        assert frob(a.mat - k @ np.conj(s)) <= scale
        # A = |A| kappa: linear o antilinear has matrix S K
        assert frob(a.mat - s @ k) <= scale
        assert frob(k @ np.conj(s) - s @ k) <= scale


def test_polar_kappa_commutes_with_spectral_projections():
    from skewvn.wvn import spectral_resolution

    rng = np.random.default_rng(34)
    a = AntilinearOperator(random_skew(rng, 8))
    result = polar_factorize(a)
    res = spectral_resolution(a)
    k = result.kappa.mat
    for proj in res.projections:
        # kappa o E and E o kappa as matrices: K conj(E) vs E K
        assert frob(k @ np.conj(proj) - proj @ k) <= 1e-9


def test_youla_antilinear_consistency():
    rng = np.random.default_rng(35)
    m = random_skew(rng, 9)
    r_youla = youla_decompose(m).r
    r_anti = antilinear_block_skew_diagonalize(AntilinearOperator(m)).r
    assert np.allclose(r_youla, r_anti, atol=1e-9)
