"""Geometric means on the positive definite cone.

The weighted two-variable geometric mean

    A #_t B = A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}

is the point at parameter ``t`` on the unique Riemannian geodesic from A
to B.  This module provides the mean, a numerical checker for its
classical property suite, means of finite sample sets, the
maximum-determinant representative of means of partial matrices, the
Karcher mean via weighted inductive means, the arithmetic-harmonic
iteration, and determinant/entropy integral identities for Gaussian
covariances.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, fields

import numpy as np
from scipy.integrate import simpson

from .completion import CompletionReport, max_det_completion
from .errors import DimensionMismatch, NotPositiveDefinite
from .linalg import (
    DEFAULT_TOL,
    det,
    fro_norm,
    invm,
    invsqrtm,
    is_pd,
    log_det,
    logm,
    mat_fn,
    op_norm,
    powm,
    riemannian_dist,
    sqrtm,
    sym,
)


def geomean(a, b, t=0.5, tol=DEFAULT_TOL):
    """Weighted geometric mean ``A #_t B``.

    ``t = 0`` returns A, ``t = 1`` returns B, and ``t = 1/2`` is the
    geodesic midpoint.  Values of ``t`` outside [0, 1] extend the
    geodesic and are computed with a warning; the property guarantees
    hold only on [0, 1].
    """
    if not 0.0 <= t <= 1.0:
        warnings.warn(
            f"geomean parameter t = {t} lies outside [0, 1]; extending the geodesic",
            stacklevel=2,
        )
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.shape != b.shape:
        raise DimensionMismatch(f"shape mismatch: {a.shape} vs {b.shape}")
    if not is_pd(a, tol) or not is_pd(b, tol):
        raise NotPositiveDefinite("geomean requires positive definite arguments")
    rs = sqrtm(a, tol)
    ris = invsqrtm(a, tol)
    inner = mat_fn(sym(ris @ b @ ris), lambda w: w**t)
    return sym(rs @ inner @ rs)


@dataclass(frozen=True)
class GeomeanPropertyReport:
    """Boolean outcome of each classical geometric-mean property."""

    commuting_power_law: bool
    scalar_homogeneity: bool
    reversal: bool
    monotonicity: bool
    continuity_lipschitz: bool
    congruence_invariance: bool
    joint_concavity: bool
    inversion: bool
    determinant_identity: bool
    agm_sandwich: bool

    @property
    def all_hold(self):
        return all(getattr(self, f.name) for f in fields(self))


def _close(x, y, rtol):
    return fro_norm(x - y) <= rtol * max(1.0, fro_norm(x), fro_norm(y))


def _psd_geq(x, y, rtol):
    """x >= y up to an eigenvalue slack of rtol * scale."""
    d = sym(x - y)
    scale = max(1.0, op_norm(x), op_norm(y))
    return float(np.linalg.eigvalsh(d)[0]) >= -rtol * scale


def geomean_properties_check(a, b, c, d, t, lam, s, rtol=1e-8):
    """Numerically verify the classical geometric-mean property suite.

    Parameters
    ----------
    a, b, c, d : positive definite matrices of a common dimension.
    t, lam : floats in [0, 1]; ``lam`` doubles as the second geodesic
        parameter in the continuity bound and as the convex weight in
        joint concavity.
    s : invertible matrix for the congruence check.
    rtol : relative tolerance of every comparison; semidefiniteness
        checks allow an eigenvalue slack of ``rtol * scale``.

    Returns
    -------
    GeomeanPropertyReport
        One boolean per property:

        1.  commuting pairs reduce to ``A^{1-t} B^t``
        2.  ``(aA) #_t (bB) = a^{1-t} b^t (A #_t B)``
        3.  reversal ``A #_t B = B #_{1-t} A``
        4.  monotonicity in both arguments
        5.  geodesic-parameter Lipschitz continuity bound
        6.  congruence invariance ``S^T (A #_t B) S``
        7.  joint concavity
        8.  inversion ``(A #_t B)^{-1} = A^{-1} #_t B^{-1}``
        9.  ``det(A #_t B) = (det A)^{1-t} (det B)^t``
        10. harmonic/arithmetic sandwich
    """
    g_ab = geomean(a, b, t)

    commuting_partner = sym(a @ a) + np.eye(a.shape[0])
    p1 = _close(
        geomean(a, commuting_partner, t),
        sym(powm(a, 1.0 - t) @ powm(commuting_partner, t)),
        rtol,
    )

    alpha, beta = 1.0 + lam, 2.0 - lam
    p2 = _close(
        geomean(alpha * a, beta * b, t),
        alpha ** (1.0 - t) * beta**t * g_ab,
        rtol,
    )

    p3 = _close(g_ab, geomean(b, a, 1.0 - t), rtol)

    p4 = _psd_geq(geomean(a + c, b + d, t), g_ab, rtol)

    lhs = riemannian_dist(geomean(a, b, lam), geomean(c, d, t))
    bound = (
        abs(lam - t) * riemannian_dist(a, b)
        + (1.0 - t) * riemannian_dist(a, c)
        + t * riemannian_dist(b, d)
    )
    p5 = lhs <= bound + rtol * max(1.0, bound)

    p6 = _close(
        sym(s.T @ g_ab @ s),
        geomean(sym(s.T @ a @ s), sym(s.T @ b @ s), t),
        rtol,
    )

    p7 = _psd_geq(
        geomean((1.0 - lam) * a + lam * b, (1.0 - lam) * c + lam * d, t),
        (1.0 - lam) * geomean(a, c, t) + lam * geomean(b, d, t),
        rtol,
    )

    p8 = _close(invm(g_ab), geomean(invm(a), invm(b), t), rtol)

    lhs_det = det(g_ab)
    rhs_det = det(a) ** (1.0 - t) * det(b) ** t
    p9 = abs(lhs_det - rhs_det) <= rtol * max(1.0, abs(lhs_det), abs(rhs_det))

    harmonic = invm((1.0 - t) * invm(a) + t * invm(b))
    arithmetic = (1.0 - t) * a + t * b
    p10 = _psd_geq(g_ab, harmonic, rtol) and _psd_geq(arithmetic, g_ab, rtol)

    return GeomeanPropertyReport(
        commuting_power_law=p1,
        scalar_homogeneity=p2,
        reversal=p3,
        monotonicity=p4,
        continuity_lipschitz=p5,
        congruence_invariance=p6,
        joint_concavity=p7,
        inversion=p8,
        determinant_identity=p9,
        agm_sandwich=p10,
    )


@dataclass(frozen=True)
class SampleSet:
    """Finite set of positive definite matrices of one dimension."""

    members: tuple

    def __post_init__(self):
        members = tuple(np.asarray(m, dtype=float) for m in self.members)
        if not members:
            raise ValueError("sample set must be non-empty")
        n = members[0].shape[0]
        for m in members:
            if m.shape != (n, n):
                raise DimensionMismatch("sample set members must share one dimension")
            if not is_pd(m, DEFAULT_TOL):
                raise NotPositiveDefinite("sample set members must be positive definite")
        object.__setattr__(self, "members", members)

    def __len__(self):
        return len(self.members)

    @property
    def dim(self):
        return self.members[0].shape[0]

    def scale(self, alpha):
        """Memberwise positive scalar multiple."""
        if alpha <= 0:
            raise ValueError("scale factor must be positive")
        return SampleSet(tuple(alpha * m for m in self.members))

    def inverse(self):
        """Memberwise inverse."""
        return SampleSet(tuple(invm(m) for m in self.members))


def set_geomean(s, t_set, t=0.5, dedup_tol=1e-12):
    """All pairwise weighted geometric means of two sample sets.

    Duplicates (Frobenius distance <= ``dedup_tol``) are removed, so the
    result has at most ``len(s) * len(t_set)`` members.
    """
    out = []
    for x in s.members:
        for y in t_set.members:
            g = geomean(x, y, t)
            if all(fro_norm(g - kept) > dedup_tol for kept in out):
                out.append(g)
    return SampleSet(tuple(out))


def block_max_property(a, b, tol=1e-8, probe=1e-6):
    """Check that ``A # B`` is the largest symmetric block completing
    ``[[A, X], [X, B]]`` to a positive semidefinite matrix.

    Verifies the block matrix is PSD at ``X = A # B`` and stops being PSD
    once ``X`` is pushed by ``probe * ||X||`` along the identity.
    """
    x = geomean(a, b, 0.5)
    n = a.shape[0]
    block = np.block([[a, x], [x, b]])
    at_mean = float(np.linalg.eigvalsh(sym(block))[0]) >= -tol * max(1.0, op_norm(block))
    bumped = x + probe * op_norm(x) * np.eye(n)
    block_bumped = sym(np.block([[a, bumped], [bumped, b]]))
    beyond = float(np.linalg.eigvalsh(block_bumped)[0]) < -tol * max(
        1.0, op_norm(block_bumped)
    )
    return at_mean and beyond


@dataclass
class PartialGeomeanResult:
    """Maximum-determinant representative of the mean of two partial
    matrices: the weighted mean of their max-det completions."""

    matrix: np.ndarray
    determinant: float
    t: float
    completion_a: CompletionReport
    completion_b: CompletionReport


def partial_geomean_maxdet(pa, pb, t=0.5, tol=1e-10):
    """Mean of two partial PD matrices through their max-det completions.

    Among all pairwise means of completions, the mean of the two
    maximum-determinant completions uniquely maximizes the determinant,
    which then equals ``det(Ahat)^{1-t} det(Bhat)^t``.
    """
    if pa.n != pb.n:
        raise DimensionMismatch(f"dimension mismatch: {pa.n} vs {pb.n}")
    rep_a = max_det_completion(pa, tol=tol)
    rep_b = max_det_completion(pb, tol=tol)
    m = geomean(rep_a.matrix, rep_b.matrix, t)
    return PartialGeomeanResult(
        matrix=m,
        determinant=det(m),
        t=t,
        completion_a=rep_a,
        completion_b=rep_b,
    )


@dataclass(frozen=True)
class WeightVector:
    """Positive weights summing to one."""

    weights: tuple

    def __post_init__(self):
        w = tuple(float(x) for x in self.weights)
        if not w or any(x <= 0 for x in w):
            raise ValueError("weights must be positive")
        if abs(sum(w) - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {sum(w)!r}")
        object.__setattr__(self, "weights", w)

    @classmethod
    def uniform(cls, n):
        return cls(weights=(1.0 / n,) * n)

    def __len__(self):
        return len(self.weights)

    def __iter__(self):
        return iter(self.weights)


@dataclass
class KarcherResult:
    """Karcher mean estimate with its optimality certificate.

    ``gradient_norm`` is ``|| sum_i w_i log(X^{-1/2} A_i X^{-1/2}) ||_F``,
    which vanishes exactly at the minimizer of the weighted sum of
    squared Riemannian distances.
    """

    matrix: np.ndarray
    steps: int
    gradient_norm: float
    converged: bool


def _karcher_gradient(x, mats, weights):
    ris = invsqrtm(x)
    g = sum(w * logm(sym(ris @ a @ ris)) for w, a in zip(weights, mats))
    return sym(g)


def karcher_mean(weights, mats, tol=1e-9, max_steps=None, refine_steps=200):
    """Weighted Karcher mean of positive definite matrices.

    Runs the sequence of weighted inductive means: with the weights
    repeated cyclically and ``s(N)`` their running sum,

        S_1 = A_1,   S_N = A_k #_{s(N-1)/s(N)} S_{N-1},   k = N mod n,

    stopping when the iterate moves less than ``tol`` (Riemannian
    distance) over a full period or ``max_steps`` is reached.  The
    inductive sequence converges only asymptotically, so its output is
    then refined by the fixed-point iteration
    ``X <- X^{1/2} exp(sum_i w_i log(X^{-1/2} A_i X^{-1/2})) X^{1/2}``
    until the gradient certificate drops below ``tol``.

    Returns a :class:`KarcherResult`; ``converged`` is False when the
    step budgets were exhausted first.
    """
    if not isinstance(weights, WeightVector):
        weights = WeightVector(weights=tuple(weights))
    mats = [np.asarray(m, dtype=float) for m in mats]
    if len(weights) != len(mats):
        raise ValueError(f"{len(weights)} weights for {len(mats)} matrices")
    for m in mats:
        if not is_pd(m, DEFAULT_TOL):
            raise NotPositiveDefinite("karcher_mean requires positive definite matrices")
    count = len(mats)
    dim = mats[0].shape[0]
    if max_steps is None:
        max_steps = 50 * dim * count

    s = mats[0]
    window = [s]
    s_prev = weights.weights[0]
    steps = 1
    for n_iter in range(2, max_steps + 1):
        k = (n_iter - 1) % count
        s_cur = s_prev + weights.weights[k]
        s = geomean(mats[k], s, s_prev / s_cur)
        s_prev = s_cur
        steps = n_iter
        window.append(s)
        if len(window) > count + 1:
            window.pop(0)
        if len(window) == count + 1 and riemannian_dist(s, window[0]) <= tol:
            break

    x = s
    grad = _karcher_gradient(x, mats, weights)
    gnorm = fro_norm(grad)
    for _ in range(refine_steps):
        if gnorm <= tol:
            break
        rs = sqrtm(x)
        x = sym(rs @ mat_fn(grad, np.exp) @ rs)
        steps += 1
        grad = _karcher_gradient(x, mats, weights)
        gnorm = fro_norm(grad)
    return KarcherResult(
        matrix=x, steps=steps, gradient_norm=float(gnorm), converged=bool(gnorm <= tol)
    )


@dataclass
class AgmResult:
    """Arithmetic-harmonic iteration output.

    ``lower_iterates``/``upper_iterates`` hold the harmonic and
    arithmetic sequences from the first computed pair onward; each lower
    iterate sits below ``A # B`` and each upper iterate above it in the
    Loewner order.
    """

    matrix: np.ndarray
    iterations: int
    converged: bool
    lower_iterates: list
    upper_iterates: list


def agm_iteration(a, b, tol=1e-12, max_steps=100):
    """Arithmetic-harmonic mean iteration converging to ``A # B``.

        A_{k+1} = ((A_k^{-1} + B_k^{-1}) / 2)^{-1},
        B_{k+1} = (A_k + B_k) / 2.

    Both sequences converge monotonically to the geometric mean; the
    iteration stops when ``||A_k - B_k||_F <= tol * ||B_k||_F`` and
    returns the arithmetic midpoint of the final pair.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if not is_pd(a, DEFAULT_TOL) or not is_pd(b, DEFAULT_TOL):
        raise NotPositiveDefinite("agm_iteration requires positive definite arguments")
    lower, upper = a, b
    lowers, uppers = [], []
    converged = False
    iterations = 0
    for iterations in range(1, max_steps + 1):
        harmonic = invm(0.5 * (invm(lower) + invm(upper)))
        arithmetic = sym(0.5 * (lower + upper))
        lower, upper = harmonic, arithmetic
        lowers.append(lower)
        uppers.append(upper)
        if fro_norm(lower - upper) <= tol * fro_norm(upper):
            converged = True
            break
    mid = sym(0.5 * (lower + upper))
    return AgmResult(
        matrix=mid,
        iterations=iterations,
        converged=converged,
        lower_iterates=lowers,
        upper_iterates=uppers,
    )


def _trace_quadrature(a0, a1, quad_points):
    """Simpson quadrature of lambda -> tr(A(lambda)^{-1} (A1 - A0))."""
    lam = np.linspace(0.0, 1.0, quad_points)
    diff = a1 - a0
    vals = np.empty(quad_points)
    for idx, t in enumerate(lam):
        m = (1.0 - t) * a0 + t * a1
        vals[idx] = float(np.trace(np.linalg.solve(m, diff)))
    return float(simpson(vals, x=lam))


def det_integral_identity(a0, a1, quad_points=201):
    """Integral representation of a determinant ratio.

    Along the segment ``A(lambda) = (1-lambda) A0 + lambda A1`` (inside
    the PD cone by convexity),

        det(A1) = det(A0) exp( integral_0^1 tr(A(lambda)^{-1} (A1-A0)) dlambda ).

    Returns ``(lhs, rhs)`` = (det of A1, the right-hand side evaluated by
    composite Simpson quadrature on ``quad_points`` nodes).
    """
    a0 = np.asarray(a0, dtype=float)
    a1 = np.asarray(a1, dtype=float)
    if not is_pd(a0, DEFAULT_TOL) or not is_pd(a1, DEFAULT_TOL):
        raise NotPositiveDefinite("det_integral_identity requires positive definite arguments")
    lhs = det(a1)
    rhs = det(a0) * math.exp(_trace_quadrature(a0, a1, quad_points))
    return lhs, rhs


def gaussian_entropy(sigma, tol=DEFAULT_TOL):
    """Shannon entropy of a zero-mean Gaussian with covariance ``sigma``:
    ``log(det sigma)/2 + n (1 + log 2 pi)/2``."""
    sigma = np.asarray(sigma, dtype=float)
    n = sigma.shape[0]
    return 0.5 * log_det(sigma, tol) + 0.5 * n * (1.0 + math.log(2.0 * math.pi))


@dataclass(frozen=True)
class EntropyIdentities:
    """Two entropy identities for Gaussian covariances.

    The entropy difference equals half the trace integral along the
    segment between the covariances, and the entropy of the geodesic
    point interpolates the endpoint entropies linearly.
    """

    entropy_diff: float
    entropy_diff_integral: float
    entropy_geomean: float
    entropy_interpolated: float


def entropy_identities(sigma0, sigma1, t=0.5, quad_points=201):
    """Evaluate both Gaussian entropy identities for a covariance pair."""
    h0 = gaussian_entropy(sigma0)
    h1 = gaussian_entropy(sigma1)
    integral = 0.5 * _trace_quadrature(
        np.asarray(sigma0, dtype=float), np.asarray(sigma1, dtype=float), quad_points
    )
    h_mean = gaussian_entropy(geomean(sigma0, sigma1, t))
    return EntropyIdentities(
        entropy_diff=h1 - h0,
        entropy_diff_integral=integral,
        entropy_geomean=h_mean,
        entropy_interpolated=(1.0 - t) * h0 + t * h1,
    )
