"""Shared fixtures and independent oracles.

The oracles here deliberately avoid the package's machinery: distances come
from a dict-based BFS, subsets from itertools, and every check follows the
plain definition.  Agreement between these and the fast implementations is
what the randomized tests certify.
"""

import itertools
import random
from collections import deque

import pytest

from resolving import all_pairs_distances, build_graph


# ---------------------------------------------------------------------------
# independent distance computation


def bfs_distances(g):
    """dists[u][v] via plain BFS; no numpy, no package distance code."""
    out = []
    for source in range(g.n):
        dist = {source: 0}
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        out.append([dist[v] for v in range(g.n)])
    return out


def oracle_array(dist, anchors, target):
    return tuple(min(dist[s][t] for t in target) for s in anchors)


def size_colex_subsets(n, max_size, min_size=1):
    """All subsets with min_size <= |.| <= max_size, smaller sizes first,
    colex within a size (sort combinations by their reversal)."""
    for k in range(min_size, max_size + 1):
        yield from sorted(itertools.combinations(range(n), k), key=lambda c: c[::-1])


# ---------------------------------------------------------------------------
# definitional checks


def oracle_is_resolving(dist, anchors, order):
    n = len(dist)
    seen = {}
    for sub in size_colex_subsets(n, order):
        arr = oracle_array(dist, anchors, sub)
        if arr in seen:
            return False
        seen[arr] = sub
    return True


def oracle_first_resolving_collision(dist, anchors, order):
    """First (earlier, later, array) pair in size-then-colex order, or None."""
    n = len(dist)
    seen = {}
    for sub in size_colex_subsets(n, order):
        arr = oracle_array(dist, anchors, sub)
        if arr in seen:
            return seen[arr], sub, arr
        seen[arr] = sub
    return None


def oracle_is_solid(dist, anchors, order):
    """Literal definition: no set X with |X| <= order shares its distance
    array with any other nonempty set Y."""
    n = len(dist)
    arrays = {}
    for sub in size_colex_subsets(n, n):
        arrays[sub] = oracle_array(dist, anchors, sub)
    small = [sub for sub in arrays if len(sub) <= order]
    for x in small:
        ax = arrays[x]
        for y, ay in arrays.items():
            if y != x and ay == ax:
                return False
    return True


def oracle_first_domination(dist, anchors, order):
    """First (x, Y) with x not in Y, |Y| <= order, and no anchor strictly
    closer to x than to Y; Y in size-then-colex order, x ascending."""
    n = len(dist)
    for y in size_colex_subsets(n, order):
        yset = set(y)
        for x in range(n):
            if x in yset:
                continue
            if all(dist[s][x] >= min(dist[s][t] for t in y) for s in anchors):
                return x, y
    return None


def oracle_is_doubly(dist, anchors):
    n = len(dist)
    for u in range(n):
        for v in range(u + 1, n):
            diffs = {dist[s][u] - dist[s][v] for s in anchors}
            if len(diffs) == 1:
                return False
    return True


def oracle_forced(dist, order, kind):
    """v is forced iff the full vertex set minus v fails the check."""
    n = len(dist)
    forced = []
    for v in range(n):
        rest = tuple(u for u in range(n) if u != v)
        if kind == "solid":
            ok = oracle_is_solid(dist, rest, order)
        else:
            ok = oracle_is_resolving(dist, rest, order)
        if not ok:
            forced.append(v)
    return tuple(forced)


def oracle_minimum_size(dist, mode_kind, order):
    """Smallest passing cardinality by brute force over all subsets."""
    n = len(dist)
    for k in range(1, n + 1):
        for sub in itertools.combinations(range(n), k):
            if mode_kind == "resolving":
                if oracle_is_resolving(dist, sub, order):
                    return k
            elif mode_kind == "solid":
                if oracle_is_solid(dist, sub, order):
                    return k
            else:
                if k >= 2 and oracle_is_doubly(dist, sub):
                    return k
    return None


# ---------------------------------------------------------------------------
# random instances


def random_connected_graph(rng, n_min=2, n_max=9):
    """Random tree plus random extra edges; always connected."""
    n = rng.randint(n_min, n_max)
    edges = set()
    for v in range(1, n):
        edges.add((rng.randrange(v), v))
    extra = rng.randint(0, n)
    for _ in range(extra):
        u = rng.randrange(n)
        v = rng.randrange(n)
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return build_graph(n, sorted(edges))


def random_anchor_set(rng, n, max_size=5):
    size = rng.randint(1, min(max_size, n))
    return tuple(sorted(rng.sample(range(n), size)))


@pytest.fixture
def rng():
    return random.Random(20260814)


@pytest.fixture(scope="session")
def demo():
    from resolving import demo_graph

    g = demo_graph()
    return g, all_pairs_distances(g)
