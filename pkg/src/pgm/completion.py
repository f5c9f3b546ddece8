"""Maximum-determinant positive definite completion.

The single-entry subproblem has a closed form: permuting a symmetric
matrix so the free position lands at the corner,

    H(x) = [[a, v^T, x],
            [v, C,   w],
            [x, w^T, b]],

the completions H(x) > 0 are exactly |x - v^T C^{-1} w| <
sqrt(det A det B) / det C with A, B the leading/trailing principal
blocks, and x = v^T C^{-1} w maximizes the determinant.  Cycling this
step over all missing positions converges to the unique global
maximum-determinant completion, which is certified by its inverse
vanishing at every unspecified position.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    InternalNumerics,
    NotCompletable,
    NotPartialPD,
    OutOfRange,
    PatternMismatch,
)
from .linalg import DEFAULT_TOL, det, is_pd, op_norm, sym
from .partial import is_partial_pd, restrict
from .pattern import (
    Pattern,
    connected_components,
    is_chordal,
    maximal_cliques,
    missing_positions,
)


@dataclass(frozen=True)
class FeasibilityInterval:
    """Open interval of values keeping a single-entry completion PD.

    The interval is ``(center - half_width, center + half_width)`` with
    ``center = v^T C^{-1} w`` (the maximum-determinant value) and
    ``half_width = sqrt(det A det B) / det C``.
    """

    position: tuple
    center: float
    half_width: float

    @property
    def lower(self):
        return self.center - self.half_width

    @property
    def upper(self):
        return self.center + self.half_width

    def contains(self, x):
        return self.lower < x < self.upper


@dataclass
class CompletionReport:
    """Result of a completion run.

    ``residual`` is the largest absolute inverse entry over unspecified
    positions (zero there certifies the maximum-determinant completion);
    ``converged`` records whether the residual dropped below tolerance
    relative to ``||M^{-1}||`` within the cycle budget.
    """

    matrix: np.ndarray
    determinant: float
    iterations: int
    residual: float
    converged: bool


def _corner_permutation(n, i0, j0):
    """Permutation matrix sending row/col i0 -> 0 and j0 -> n-1."""
    order = [i0] + [k for k in range(n) if k != i0 and k != j0] + [j0]
    p = np.zeros((n, n))
    p[np.arange(n), order] = 1.0
    return p


def single_entry_interval(m, i, j, tol=DEFAULT_TOL):
    """Feasibility interval for one free position of a full matrix.

    All entries of ``m`` except position ``(i, j)`` are taken as fixed.
    Raises :class:`NotPartialPD` when either bordered principal block is
    not positive definite (no PD completion exists in that coordinate).
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    i0, j0 = i - 1, j - 1
    if not (0 <= i0 < n and 0 <= j0 < n) or i0 == j0:
        raise ValueError(f"position ({i}, {j}) is not an off-diagonal position")
    p = _corner_permutation(n, i0, j0)
    mp = p @ m @ p.T
    a_blk = mp[:-1, :-1]
    b_blk = mp[1:, 1:]
    if not is_pd(a_blk, tol) or not is_pd(b_blk, tol):
        raise NotPartialPD(
            f"no positive definite completion in position ({i}, {j}): "
            "a bordered principal block is not positive definite"
        )
    c_blk = mp[1:-1, 1:-1]
    v = mp[1:-1, 0]
    w = mp[1:-1, -1]
    if c_blk.size == 0:
        center = 0.0
        ld_c = 0.0
    else:
        center = float(v @ np.linalg.solve(c_blk, w))
        ld_c = np.linalg.slogdet(c_blk)[1]
    ld_a = np.linalg.slogdet(a_blk)[1]
    ld_b = np.linalg.slogdet(b_blk)[1]
    half = float(np.exp(0.5 * (ld_a + ld_b) - ld_c))
    return FeasibilityInterval(position=(min(i, j), max(i, j)), center=center, half_width=half)


def _conditional_center(m, i, j):
    """v^T C^{-1} w for position (i, j); assumes the blocks are PD."""
    n = m.shape[0]
    idx = [k for k in range(n) if k != i - 1 and k != j - 1]
    if not idx:
        return 0.0
    c_blk = m[np.ix_(idx, idx)]
    v = m[idx, i - 1]
    w = m[idx, j - 1]
    try:
        return float(v @ np.linalg.solve(c_blk, w))
    except np.linalg.LinAlgError as exc:
        raise NotCompletable(
            f"singular conditioning block at position ({i}, {j})"
        ) from exc


def _junction_forest(cliques):
    """Maximum-weight spanning tree of the clique graph (Kruskal).

    Weights are intersection sizes; zero-weight edges are allowed so the
    result spans disconnected patterns as well.  For a chordal graph the
    positive-weight edges form a junction tree per component.
    """
    k = len(cliques)
    sets = [set(c) for c in cliques]
    parent = list(range(k))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = sorted(
        ((len(sets[a] & sets[b]), a, b) for a in range(k) for b in range(a + 1, k)),
        key=lambda e: (-e[0], e[1], e[2]),
    )
    tree = []
    for _, a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
            tree.append((a, b))
    return tree


def _feasible_fill(pm, tol):
    """One-pass feasible completion of a chordal partial PD matrix.

    Adds one missing entry at a time.  Each step picks an edge of the
    current junction forest, joins a vertex from each side across their
    separator S, and fills the new position with the conditional center
    of the principal submatrix on S plus the two vertices.  The graph
    stays chordal and the partial matrix stays partial PD throughout, so
    the final full matrix is positive definite.
    """
    n = pm.n
    m = pm.to_dense(0.0)
    edges = set(pm.pattern.edges)
    total = n * (n + 1) // 2
    while len(edges) < total:
        g = Pattern(n=n, edges=frozenset(edges))
        cliques = maximal_cliques(g)
        tree = _junction_forest(cliques)
        if not tree:
            raise InternalNumerics("no junction edge available during feasible fill")
        a, b = tree[0]
        sep = set(cliques[a]) & set(cliques[b])
        i = min(set(cliques[a]) - sep)
        j = min(set(cliques[b]) - sep)
        if i > j:
            i, j = j, i
        verts = sorted(sep | {i, j})
        idx = [v - 1 for v in verts]
        sub = m[np.ix_(idx, idx)]
        try:
            iv = single_entry_interval(sub, verts.index(i) + 1, verts.index(j) + 1, tol)
        except NotPartialPD as exc:
            raise InternalNumerics(
                f"feasible fill hit an infeasible subproblem at ({i}, {j})"
            ) from exc
        m[i - 1, j - 1] = m[j - 1, i - 1] = iv.center
        edges.add((i, j))
    return m


def max_det_completion(pm, tol=1e-10, max_cycles=500, pd_tol=DEFAULT_TOL):
    """Maximum-determinant positive definite completion.

    Sweeps the missing positions in row-major order, setting each to its
    conditional center, until the inverse of the current completion
    vanishes (relative to ``||M^{-1}||``) at every unspecified position
    or the cycle budget runs out.  The initial fill is zero; when that is
    not positive definite and the pattern is chordal, a one-pass feasible
    fill is used instead.  Non-chordal patterns are attempted best-effort
    and raise :class:`NotCompletable` if a subproblem becomes infeasible.

    Parameters
    ----------
    pm : PartialMatrix, partial positive definite.
    tol : float
        Convergence tolerance on the inverse-zero certificate.
    max_cycles : int
        Sweep budget; exceeding it returns the best iterate with
        ``converged=False``.
    """
    if not is_partial_pd(pm, pd_tol):
        raise NotPartialPD("input is not partial positive definite")
    missing = missing_positions(pm.pattern)
    m = pm.to_dense(0.0)
    if not missing:
        return CompletionReport(
            matrix=sym(m), determinant=det(m), iterations=0, residual=0.0, converged=True
        )
    m_is_pd = is_pd(m, pd_tol)
    if not m_is_pd and is_chordal(pm.pattern).chordal:
        m = _feasible_fill(pm, pd_tol)
        m_is_pd = True
    miss_idx = [(i - 1, j - 1) for i, j in missing]
    residual = np.inf
    converged = False
    cycles = 0
    for cycles in range(1, max_cycles + 1):
        for i, j in missing:
            if m_is_pd:
                center = _conditional_center(m, i, j)
            else:
                try:
                    center = single_entry_interval(m, i, j, pd_tol).center
                except NotPartialPD as exc:
                    raise NotCompletable(
                        f"completion became infeasible at position ({i}, {j})"
                    ) from exc
            m[i - 1, j - 1] = m[j - 1, i - 1] = center
        if not m_is_pd:
            m_is_pd = is_pd(m, pd_tol)
        inv = np.linalg.inv(m)
        residual = max(abs(inv[i, j]) for i, j in miss_idx)
        if residual <= tol * op_norm(inv):
            converged = True
            break
    return CompletionReport(
        matrix=sym(m),
        determinant=det(m),
        iterations=cycles,
        residual=float(residual),
        converged=converged,
    )


def feasibility_range(pm, pos=None, tol=DEFAULT_TOL):
    """Feasibility interval of the unique missing entry.

    The endpoints give singular positive semidefinite completions; the
    center gives the maximum-determinant completion.
    """
    missing = missing_positions(pm.pattern)
    if len(missing) != 1:
        raise ValueError(
            f"feasibility_range needs exactly one missing entry, found {len(missing)}"
        )
    if pos is not None and tuple(sorted(pos)) != missing[0]:
        raise ValueError(f"position {pos} is not the missing entry {missing[0]}")
    i, j = missing[0]
    return single_entry_interval(pm.to_dense(0.0), i, j, tol)


def partial_entry_bounds(pm, pos, tol=DEFAULT_TOL):
    """Values at one missing position keeping the partial matrix
    partial PD (other positions may stay missing).

    Intersects the single-entry intervals of every maximal-clique block
    that would contain the new entry.  Returns an ``(lower, upper)``
    pair; for a matrix whose only missing entry is ``pos`` this equals
    the full feasibility interval.
    """
    i, j = sorted(pos)
    if (i, j) in pm.pattern.edges:
        raise ValueError(f"position ({i}, {j}) is already specified")
    extended = Pattern(n=pm.n, edges=frozenset(pm.pattern.edges | {(i, j)}))
    dense = pm.to_dense(0.0)
    lo, hi = -np.inf, np.inf
    for clique in maximal_cliques(extended):
        if i not in clique or j not in clique:
            continue
        idx = [v - 1 for v in clique]
        sub = dense[np.ix_(idx, idx)]
        iv = single_entry_interval(sub, clique.index(i) + 1, clique.index(j) + 1, tol)
        lo = max(lo, iv.lower)
        hi = min(hi, iv.upper)
    if not lo < hi:
        raise NotPartialPD(f"no value at ({i}, {j}) keeps the matrix partial PD")
    return float(lo), float(hi)


def completion_with_det(pm, k, rel_tol=1e-8, tol=1e-10):
    """A positive definite completion with determinant ``k``.

    Valid targets are ``0 < k < det(max-det completion)``.  The matrix is
    found by bisecting the segment from the maximum-determinant
    completion toward a singular boundary completion; the determinant is
    monotone along it, and the result satisfies ``|det - k| <= rel_tol*k``.
    """
    report = max_det_completion(pm, tol=tol)
    d_max = report.determinant
    if not 0.0 < k < d_max:
        raise OutOfRange(f"target determinant must lie in (0, {d_max:.6g}), got {k:.6g}")
    missing = missing_positions(pm.pattern)
    if not missing:
        raise OutOfRange("a complete matrix admits only its own determinant")
    ahat = report.matrix
    i, j = missing[0]
    iv = single_entry_interval(ahat, i, j)
    boundary = ahat.copy()
    boundary[i - 1, j - 1] = boundary[j - 1, i - 1] = iv.upper
    lo, hi = 0.0, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        m = (1.0 - mid) * ahat + mid * boundary
        d = det(m)
        if abs(d - k) <= rel_tol * k:
            return sym(m)
        if d > k:
            lo = mid
        else:
            hi = mid
    raise InternalNumerics("determinant bisection did not reach the requested target")


def fischer_bound(pm, tol=1e-10):
    """Determinant bound for block-decomposable patterns.

    For a pattern splitting into components with every cross entry
    missing, no completion determinant exceeds the product of the
    components' maximum completion determinants, with equality exactly
    at zero cross blocks.  Returns that product.
    """
    comps = connected_components(pm.pattern)
    if len(comps) < 2:
        raise PatternMismatch(
            "pattern has no fully-missing off-diagonal block to split on"
        )
    bound = 1.0
    for comp in comps:
        bound *= max_det_completion(restrict(pm, comp), tol=tol).determinant
    return bound
