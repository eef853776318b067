"""Weyl-von Neumann decomposition of antilinear skew-self-adjoint operators.

The construction follows the finite-rank projection argument: split the
spectrum of |A| into n cells, push a seed vector through the spectral
projections to obtain an (f_k, kappa f_k) family, project onto its span,
and cancel the off-diagonal coupling with a small skew-self-adjoint
perturbation.  Iterating with a halving norm budget yields A = K + D with
||K||_p < epsilon and D block skew-diagonal.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from . import matcore
from .antilinear import (
    Anticonjugation,
    AntilinearOperator,
    Conjugation,
    is_skew_self_adjoint,
    is_tau_skew_symmetric,
    tau_fixed_basis,
)
from .canonical import antilinear_block_skew_diagonalize, polar_factorize
from .errors import (
    BudgetFailure,
    InvalidP,
    KernelMismatch,
    NotSkewSelfAdjoint,
    NotSkewSymmetric,
    OddKernel,
    SkewvnError,
    ZeroVector,
)
from .matcore import DEFAULT_TOL, frob, opnorm
from .schatten import numerical_rank, schatten_norm, singular_values

CLUSTER_TOL = 1e-8
SEED_TOL = 1e-10
CELL_DROP_TOL = 1e-12
N_MAX = 2**20


@dataclass(frozen=True)
class Interval:
    """[lo, hi) half-open cell, closed on the right when closed_right."""

    lo: float
    hi: float
    closed_right: bool = False

    def contains(self, x):
        if self.closed_right:
            return self.lo <= x <= self.hi
        return self.lo <= x < self.hi


@dataclass(frozen=True)
class Partition:
    """Uniform partition of [a, b] into n cells, the last one closed at b."""

    a: float
    b: float
    n: int

    def cells(self):
        h = (self.b - self.a) / self.n
        out = []
        for k in range(1, self.n + 1):
            lo = self.a + (k - 1) * h
            hi = self.a + k * h
            if k == self.n:
                out.append(Interval(lo, self.b, closed_right=True))
            else:
                out.append(Interval(lo, hi))
        return out

    @property
    def norm(self):
        return (self.b - self.a) / self.n


@dataclass(frozen=True)
class SpectralResolution:
    """Clustered eigendecomposition of |A| with orthogonal eigenprojections."""

    a: float
    b: float
    eigenvalues: np.ndarray
    projections: list

    def projection_for(self, omega):
        """Sum of eigenprojections with eigenvalue inside omega."""
        n = self.projections[0].shape[0] if self.projections else 0
        out = np.zeros((n, n), dtype=complex)
        for lam, proj in zip(self.eigenvalues, self.projections):
            if omega.contains(lam):
                out = out + proj
        return out


@dataclass(frozen=True)
class StepResult:
    p: np.ndarray
    k: AntilinearOperator
    kept_cells: list = field(default_factory=list)
    dropped_cells: list = field(default_factory=list)


@dataclass(frozen=True)
class WvnResult:
    k: AntilinearOperator
    d: AntilinearOperator
    basis: list
    d_values: np.ndarray
    p: float
    epsilon: float
    achieved_norm: float


def spectral_resolution(a, tol=DEFAULT_TOL):
    """Eigenvalues and eigenprojections of |A|, clustered at relative gap 1e-8."""
    if not is_skew_self_adjoint(a, tol):
        raise NotSkewSelfAdjoint("operator is not skew-self-adjoint")
    mat = a.mat
    s, v = matcore.singular_spectrum(mat)
    s_max = float(s[-1]) if s.size else 0.0
    clusters = matcore.cluster_indices(list(s), CLUSTER_TOL * max(s_max, 1e-300))
    eigenvalues = []
    projections = []
    for cluster in clusters:
        vc = v[:, cluster]
        eigenvalues.append(float(np.mean(s[cluster])))
        projections.append(vc @ vc.conj().T)
    return SpectralResolution(
        a=0.0,
        b=s_max,
        eigenvalues=np.array(eigenvalues),
        projections=projections,
    )


def spectral_projection(res, omega):
    return res.projection_for(omega)


def spectral_measure_G(a, kappa, omega, res=None):
    """G(omega) = kappa E(omega), the antilinear spectral measure of A."""
    if res is None:
        res = spectral_resolution(a)
    e = res.projection_for(omega)
    return AntilinearOperator(kappa.mat @ np.conj(e))


def rank_projection_step(a, kappa, f, n, tol=DEFAULT_TOL, res=None):
    """One finite-rank reduction step.

    Builds f_k = E(omega_k) f and g_k = kappa f_k over an n-cell partition
    of [0, ||A||], drops the cells where f_k vanishes, projects onto the
    span, and returns the projection P together with the skew-self-adjoint
    perturbation K = -(I-P)AP - PA(I-P), so that A + K is reduced by R(P).
    """
    f = np.asarray(f, dtype=complex).reshape(-1)
    fnorm = np.linalg.norm(f)
    if fnorm == 0.0:
        raise ZeroVector("seed vector is zero")
    if res is None:
        res = spectral_resolution(a, tol)
    part = Partition(res.a, res.b, n)
    kept, dropped = [], []
    fs, gs = [], []
    for cell in part.cells():
        e_proj = res.projection_for(cell)
        fk = e_proj @ f
        if np.linalg.norm(fk) <= CELL_DROP_TOL * fnorm:
            dropped.append(cell)
            continue
        kept.append(cell)
        fk = fk / np.linalg.norm(fk)
        fs.append(fk)
        gs.append(kappa(fk))
    vecs = fs + gs
    q = np.column_stack(vecs)
    p = q @ q.conj().T
    p = (p + p.conj().T) / 2.0
    mat = a.mat
    n_dim = a.dim
    ident = np.eye(n_dim)
    # antilinear composition: matrix of X o A o Y is X @ mat @ conj(Y)
    k_mat = -(ident - p) @ mat @ np.conj(p) - p @ mat @ np.conj(ident - p)
    return StepResult(
        p=p,
        k=AntilinearOperator(k_mat),
        kept_cells=kept,
        dropped_cells=dropped,
    )


def _check_p(p):
    if not (1 < p < math.inf):
        raise InvalidP(f"the decomposition needs 1 < p < inf, got {p}")


def _projection_split(p, dim):
    """Orthonormal bases of R(P) and R(I-P) from an approximate projection."""
    w, v = np.linalg.eigh(p)
    inside = v[:, w > 0.5]
    outside = v[:, w <= 0.5]
    return inside, outside


def wvn_decompose(a, epsilon, p=2.0, tol=DEFAULT_TOL, rank_tol=DEFAULT_TOL):
    """Decompose A = K + D with ||K||_p < epsilon and D block skew-diagonal.

    Repeats the rank-projection step on the unexplored complement, seeding
    each step with the first standard basis vector not yet captured and
    doubling the partition size until the step perturbation fits the
    halving budget epsilon / 2^j.  Each captured block is then exactly
    skew-diagonalized to produce the paired basis and the d-sequence.
    """
    _check_p(p)
    if epsilon <= 0:
        raise SkewvnError("epsilon must be positive")
    if not is_skew_self_adjoint(a, tol):
        raise NotSkewSelfAdjoint("operator is not skew-self-adjoint")
    n = a.dim
    kernel_dim = n - numerical_rank(a, rank_tol)
    if kernel_dim % 2 != 0:
        raise OddKernel(
            f"numerical kernel dimension {kernel_dim} is odd"
        )

    mat = a.mat
    k_total = np.zeros((n, n), dtype=complex)
    w = np.eye(n, dtype=complex)  # orthonormal basis of the unexplored complement
    blocks = []
    step_index = 0
    while w.shape[1] > 0:
        step_index += 1
        mat_cur = mat + k_total
        sub = w.conj().T @ mat_cur @ np.conj(w)
        a_sub = AntilinearOperator(sub)
        # seed: first standard basis vector with mass left in the complement
        f_sub = None
        for i in range(n):
            c = w.conj().T[:, i]
            if np.linalg.norm(c) > SEED_TOL:
                f_sub = c
                break
        if f_sub is None:
            break
        polar = polar_factorize(a_sub, tol=tol, rank_tol=rank_tol)
        res = spectral_resolution(a_sub, tol)
        budget = epsilon / 2.0**step_index
        cells = 4
        while True:
            step = rank_projection_step(a_sub, polar.kappa, f_sub, cells, tol, res=res)
            if schatten_norm(step.k, p) < budget:
                break
            cells *= 2
            if cells > N_MAX:
                raise BudgetFailure(
                    f"partition size exceeded {N_MAX} before meeting the budget"
                )
        k_total = k_total + w @ step.k.mat @ w.T
        inside, outside = _projection_split(step.p, w.shape[1])
        blocks.append(w @ inside)
        w = w @ outside

    d_mat = mat + k_total
    basis = []
    d_values = []
    for vb in blocks:
        sub_d = vb.conj().T @ d_mat @ np.conj(vb)
        yres = antilinear_block_skew_diagonalize(AntilinearOperator(sub_d), tol=1e-8)
        for j, r in enumerate(yres.r):
            e = vb @ yres.u[:, 2 * j]
            f = vb @ yres.u[:, 2 * j + 1]
            basis.append((e, f))
            d_values.append(float(r))
        k0 = 2 * len(yres.r)
        for j in range(k0, k0 + yres.kernel_dim, 2):
            basis.append((vb @ yres.u[:, j], vb @ yres.u[:, j + 1]))
            d_values.append(0.0)

    achieved = schatten_norm(AntilinearOperator(k_total), p)
    return WvnResult(
        k=AntilinearOperator(k_total),
        d=AntilinearOperator(d_mat),
        basis=basis,
        d_values=np.array(d_values),
        p=p,
        epsilon=epsilon,
        achieved_norm=achieved,
    )


def block_skew_matrix(d_values, dim):
    """Direct sum of d_j [[0, 1], [-1, 0]] blocks padded with zeros."""
    out = np.zeros((dim, dim), dtype=complex)
    for j, d in enumerate(d_values):
        out[2 * j, 2 * j + 1] = d
        out[2 * j + 1, 2 * j] = -d
    return out


@dataclass(frozen=True)
class SkewWvnResult:
    k: np.ndarray
    d: np.ndarray
    u: np.ndarray
    d_values: np.ndarray
    achieved_norm: float


def skew_symmetric_wvn(t, tau, epsilon, p=2.0, tol=DEFAULT_TOL, rank_tol=DEFAULT_TOL):
    """T = K + U D U^tr for a tau-skew-symmetric linear operator T.

    D is the literal block matrix diag of d_j [[0, 1], [-1, 0]] in the
    standard basis.  For the standard conjugation the identity uses the
    plain transpose; for a general tau the transpose is taken in a
    tau-fixed basis, which amounts to T = K + U D U^T conj(C) with C the
    matrix of tau.
    """
    _check_p(p)
    t = matcore.require_square(t)
    if not is_tau_skew_symmetric(t, tau, tol):
        raise NotSkewSymmetric("matrix is not tau-skew-symmetric within tolerance")
    r_basis = tau_fixed_basis(tau)
    t_fixed = r_basis.conj().T @ t @ r_basis  # plain skew-symmetric here
    a = AntilinearOperator(t_fixed)
    res = wvn_decompose(a, epsilon, p, tol, rank_tol)
    n = t.shape[0]
    k = r_basis @ res.k.mat @ r_basis.conj().T
    d = block_skew_matrix(res.d_values, n)
    cols = []
    for e, f in res.basis:
        # column order (f, e) makes U D U^tr reproduce the antilinear block form
        cols.extend([r_basis @ f, r_basis @ e])
    u = np.column_stack(cols) if cols else np.eye(n, dtype=complex)
    return SkewWvnResult(
        k=k, d=d, u=u, d_values=res.d_values, achieved_norm=res.achieved_norm
    )


def skew_wvn_residual(t, tau, result):
    """Frobenius residual of T - K - U D U^tr (tau-basis transpose)."""
    recon = result.k + result.u @ result.d @ result.u.T @ np.conj(tau.mat)
    return frob(t - recon)


def kernel_split_wvn(t, tau, epsilon, p=2.0, tol=DEFAULT_TOL, rank_tol=DEFAULT_TOL):
    """Kernel-splitting variant: works for any kernel dimension when
    N(T) = N(T*).

    Splits H into the numerical kernel and its complement, runs the
    decomposition on the (injective) compression, and re-embeds with the
    identity on the kernel block.
    """
    _check_p(p)
    t = matcore.require_square(t)
    if not is_tau_skew_symmetric(t, tau, tol):
        raise NotSkewSymmetric("matrix is not tau-skew-symmetric within tolerance")
    n = t.shape[0]
    u_sv, s, vh = np.linalg.svd(t)
    s_max = float(s[0]) if s.size else 0.0
    small = s <= rank_tol * max(s_max, 1e-300)
    ker_t = vh.conj().T[:, small]  # right null space
    ker_tstar = u_sv[:, small]  # null space of T*
    p_t = ker_t @ ker_t.conj().T
    p_tstar = ker_tstar @ ker_tstar.conj().T
    if frob(p_t - p_tstar) > max(tol, 1e-8):
        raise KernelMismatch("numerical kernels of T and T* differ")
    # tau must reduce N(T): tau of every kernel vector stays in the kernel
    tau_leak = frob((np.eye(n) - p_t) @ tau.mat @ np.conj(p_t))
    if tau_leak > max(tol, 1e-8):
        raise SkewvnError("conjugation does not reduce the kernel of T")

    if ker_t.shape[1] == n:
        return SkewWvnResult(
            k=np.zeros((n, n), dtype=complex),
            d=np.zeros((n, n), dtype=complex),
            u=np.eye(n, dtype=complex),
            d_values=np.zeros(0),
            achieved_norm=0.0,
        )

    b_ker = tau_fixed_basis(tau, ker_t) if ker_t.shape[1] else np.zeros((n, 0))
    perp = u_sv[:, ~small]  # range of T = N(T)^perp here
    b_perp = tau_fixed_basis(tau, perp)
    t2 = b_perp.conj().T @ t @ b_perp
    tau2 = Conjugation.standard(t2.shape[0])
    sub = skew_symmetric_wvn(t2, tau2, epsilon, p, tol, rank_tol)
    k = b_perp @ sub.k @ b_perp.conj().T
    d = block_skew_matrix(sub.d_values, n)
    u = np.column_stack([b_perp @ sub.u, b_ker]) if b_ker.shape[1] else b_perp @ sub.u
    return SkewWvnResult(
        k=k, d=d, u=u, d_values=sub.d_values, achieved_norm=sub.achieved_norm
    )
