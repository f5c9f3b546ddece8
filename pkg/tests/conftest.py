"""Shared test helpers: random instances and independent oracles.

The oracles here deliberately avoid the library's own code paths: the
chordality oracle enumerates induced cycles, the clique oracle enumerates
subsets, and the max-det oracle uses the closed-form clique/separator
inverse formula with a scipy spanning tree.
"""

from itertools import combinations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import minimum_spanning_tree

from pgm import Pattern, PartialMatrix, project


def rand_spd(rng, n, spread=1.0):
    """Random SPD matrix with eigenvalues in exp(+-spread)."""
    q = np.linalg.qr(rng.standard_normal((n, n)))[0]
    w = np.exp(rng.uniform(-spread, spread, n))
    m = q @ np.diag(w) @ q.T
    return 0.5 * (m + m.T)


def rand_invertible(rng, n):
    while True:
        s = rng.standard_normal((n, n))
        if abs(np.linalg.det(s)) > 1e-3:
            return s


def rand_chordal_pattern(rng, n, fill=0.5):
    """Random chordal pattern built vertex by vertex.

    Each new vertex attaches to a vertex u plus a random subset of u's
    later neighbors, which form a clique by induction, so the insertion
    order is a perfect elimination ordering.  Vertices are relabeled at
    the end to hide that ordering.
    """
    adj = [set() for _ in range(n)]
    for v in range(n - 2, -1, -1):
        later = list(range(v + 1, n))
        if not later or rng.random() > 0.9:
            continue
        u = int(rng.choice(later))
        chosen = {u} | {w for w in adj[u] if w > u and rng.random() < fill}
        for w in chosen:
            adj[v].add(w)
            adj[w].add(v)
    relabel = rng.permutation(n)
    pairs = [
        (int(relabel[i]) + 1, int(relabel[j]) + 1)
        for i in range(n)
        for j in adj[i]
        if i < j
    ]
    return Pattern.from_pairs(n, pairs)


def rand_partial_pd(rng, pattern, spread=1.0):
    """Project a random SPD matrix onto a pattern (always partial PD)."""
    return project(rand_spd(rng, pattern.n, spread), pattern)


# --- chordality oracle -------------------------------------------------

def _induced_degree_two_and_connected(pattern, verts):
    for v in verts:
        deg = sum(1 for u in verts if u != v and pattern.has_edge(u, v))
        if deg != 2:
            return False
    seen = {verts[0]}
    stack = [verts[0]]
    while stack:
        v = stack.pop()
        for u in verts:
            if u not in seen and pattern.has_edge(u, v) and u != v:
                seen.add(u)
                stack.append(u)
    return len(seen) == len(verts)


def brute_force_has_hole(pattern):
    """A chordless cycle of length >= 4 exists iff some vertex subset
    induces a connected 2-regular subgraph."""
    n = pattern.n
    for k in range(4, n + 1):
        for verts in combinations(range(1, n + 1), k):
            if _induced_degree_two_and_connected(pattern, verts):
                return True
    return False


def brute_force_maximal_cliques(pattern):
    n = pattern.n
    cliques = []
    for k in range(1, n + 1):
        for verts in combinations(range(1, n + 1), k):
            if all(pattern.has_edge(i, j) for i, j in combinations(verts, 2)):
                cliques.append(set(verts))
    maximal = [c for c in cliques if not any(c < other for other in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def is_valid_chordless_cycle(pattern, cycle):
    k = len(cycle)
    if k < 4 or len(set(cycle)) != k:
        return False
    for idx in range(k):
        if not pattern.has_edge(cycle[idx], cycle[(idx + 1) % k]):
            return False
    for a in range(k):
        for b in range(a + 2, k):
            if a == 0 and b == k - 1:
                continue
            if pattern.has_edge(cycle[a], cycle[b]):
                return False
    return True


# --- max-det completion oracle ----------------------------------------

def maxdet_oracle(pm):
    """Closed-form max-det completion of a chordal partial PD matrix.

    The inverse of the completion is the sum of padded clique-block
    inverses minus padded separator-block inverses, with separators read
    off a maximum-weight spanning tree of the clique intersection graph.
    """
    cliques = brute_force_maximal_cliques(pm.pattern)
    k = len(cliques)
    dense = pm.to_dense(0.0)
    n = pm.n
    kmat = np.zeros((n, n))
    for c in cliques:
        idx = [v - 1 for v in c]
        kmat[np.ix_(idx, idx)] += np.linalg.inv(dense[np.ix_(idx, idx)])
    if k > 1:
        # shift weights so every pair is present; minimizing (n+1 - |inter|)
        # maximizes the intersection size
        w = np.zeros((k, k))
        for a in range(k):
            for b in range(a + 1, k):
                w[a, b] = n + 1 - len(set(cliques[a]) & set(cliques[b]))
        tree = minimum_spanning_tree(csr_matrix(w)).tocoo()
        for a, b in zip(tree.row, tree.col):
            sep = sorted(set(cliques[a]) & set(cliques[b]))
            if sep:
                idx = [v - 1 for v in sep]
                kmat[np.ix_(idx, idx)] -= np.linalg.inv(dense[np.ix_(idx, idx)])
    out = np.linalg.inv(kmat)
    return 0.5 * (out + out.T)


# --- paper example instances -------------------------------------------

def four_cycle_pattern():
    return Pattern.from_pairs(4, [(1, 2), (1, 4), (2, 3), (3, 4)])


def chordal_example_pattern():
    return Pattern.from_pairs(4, [(1, 3), (1, 4), (2, 3), (3, 4)])


def matrix_n_noncompletable():
    return PartialMatrix(
        pattern=four_cycle_pattern(),
        values={
            (1, 1): 1.0, (2, 2): 2.0, (3, 3): 3.0, (4, 4): 1.0,
            (1, 2): -1.0, (1, 4): 0.0, (2, 3): 2.0, (3, 4): 1.0,
        },
    )


def matrix_a_chordal_example():
    return PartialMatrix(
        pattern=chordal_example_pattern(),
        values={
            (1, 1): 1.0, (2, 2): 5.0, (3, 3): 3.0, (4, 4): 2.0,
            (1, 3): 1.0, (1, 4): 1.0, (2, 3): 1.0, (3, 4): 1.0,
        },
    )


def matrix_b_chordal_example():
    return PartialMatrix(
        pattern=chordal_example_pattern(),
        values={
            (1, 1): 4.0, (2, 2): 3.0, (3, 3): 6.0, (4, 4): 3.0,
            (1, 3): 2.0, (1, 4): -1.0, (2, 3): 1.0, (3, 4): 1.0,
        },
    )


def order_example_a():
    return PartialMatrix(
        pattern=chordal_example_pattern(),
        values={
            (1, 1): 3.0, (2, 2): 6.0, (3, 3): 4.0, (4, 4): 5.0,
            (1, 3): 2.0, (1, 4): 1.0, (2, 3): 1.0, (3, 4): 1.0,
        },
    )


def ex1_partial_a():
    """3x3, one missing entry at (1, 3)."""
    return PartialMatrix(
        pattern=Pattern.from_pairs(3, [(1, 2), (2, 3)]),
        values={(1, 1): 3.0, (2, 2): 3.0, (3, 3): 4.0, (1, 2): -1.0, (2, 3): 2.0},
    )


def ex1_partial_b():
    return PartialMatrix(
        pattern=Pattern.from_pairs(3, [(1, 2), (2, 3)]),
        values={(1, 1): 4.0, (2, 2): 5.0, (3, 3): 2.0, (1, 2): 3.0, (2, 3): -1.0},
    )


def ex2_partial_a():
    """5x5, one missing entry at (1, 5)."""
    rows = np.array(
        [
            [3, -1, 1, 1, 0],
            [-1, 3, -1, 1, 0],
            [1, -1, 3, 2, 1],
            [1, 1, 2, 4, 2],
            [0, 0, 1, 2, 4],
        ],
        dtype=float,
    )
    pattern = Pattern.from_pairs(
        5, [(i, j) for i in range(1, 6) for j in range(i + 1, 6) if (i, j) != (1, 5)]
    )
    values = {(i, j): rows[i - 1, j - 1] for i, j in pattern.edges}
    return PartialMatrix(pattern=pattern, values=values)


def ex2_partial_b():
    rows = np.array(
        [
            [3, 0, 1, 2, 0],
            [0, 1, 0, -1, 0],
            [1, 0, 5, -1, 1],
            [2, -1, -1, 3, 0],
            [0, 0, 1, 0, 4],
        ],
        dtype=float,
    )
    pattern = Pattern.from_pairs(
        5, [(i, j) for i in range(1, 6) for j in range(i + 1, 6) if (i, j) != (1, 5)]
    )
    values = {(i, j): rows[i - 1, j - 1] for i, j in pattern.edges}
    return PartialMatrix(pattern=pattern, values=values)


def identity_ring_partial(n):
    """Identity values with the single corner entry (1, n) missing."""
    pattern = Pattern.from_pairs(
        n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1) if (i, j) != (1, n)]
    )
    values = {(i, j): 1.0 if i == j else 0.0 for i, j in pattern.edges}
    return PartialMatrix(pattern=pattern, values=values)


def golden_pair_completions():
    """Two PD completions of the chordal 4x4 example."""
    a1 = np.array(
        [[1, 1, 1, 1], [1, 5, 1, 1], [1, 1, 3, 1], [1, 1, 1, 2]], dtype=float
    )
    a2 = np.array(
        [[1, -1, 1, 1], [-1, 5, 1, -1], [1, 1, 3, 1], [1, -1, 1, 2]], dtype=float
    )
    return a1, a2


GOLDEN_MEAN_DISPLAYED = np.array(
    [
        [0.8750, -0.0769, 1.0, 0.8750],
        [-0.0769, 4.1251, 1.0, -0.0769],
        [1.0, 1.0, 3.0, 1.0],
        [0.8750, -0.0769, 1.0, 1.8750],
    ]
)
