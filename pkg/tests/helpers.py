"""Shared oracles and graph builders for the test suite.

The oracles here are deliberately naive and independent of the library's
algorithms: reachability by bitmask closure, complete dicuts by scanning
every subset.  They exist to cross-check the clever implementations.
"""

from __future__ import annotations

import itertools
from random import Random

from strongext import StrictDigraph, weak_components


def _closure_masks(n: int, edges) -> list[int]:
    reach = [1 << v for v in range(n)]
    for u, v in edges:
        reach[u] |= 1 << v
    changed = True
    while changed:
        changed = False
        for u in range(n):
            acc = reach[u]
            rest = acc
            while rest:
                low = rest & -rest
                acc |= reach[low.bit_length() - 1]
                rest ^= low
            if acc != reach[u]:
                reach[u] = acc
                changed = True
    return reach


def oracle_is_strong(g: StrictDigraph) -> bool:
    if g.n == 0:
        return False
    full = (1 << g.n) - 1
    return all(m == full for m in _closure_masks(g.n, g.edges))


def oracle_has_complete_dicut(g: StrictDigraph) -> bool:
    n = g.n
    out = [0] * n
    for u, v in g.edges:
        out[u] |= 1 << v
    full = (1 << n) - 1
    for mask in range(1, full):
        comp = full ^ mask
        ok = True
        rest = mask
        while rest and ok:
            low = rest & -rest
            ok = out[low.bit_length() - 1] & comp == comp
            rest ^= low
        rest = comp
        while rest and ok:
            low = rest & -rest
            ok = not out[low.bit_length() - 1] & mask
            rest ^= low
        if ok:
            return True
    return False


def all_strict_digraphs(n: int):
    """Every strict digraph on n labeled vertices, 3^C(n,2) of them."""
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((0, 1, 2), repeat=len(pairs)):
        edges = set()
        for (u, v), state in zip(pairs, states):
            if state == 1:
                edges.add((u, v))
            elif state == 2:
                edges.add((v, u))
        yield StrictDigraph(n, frozenset(edges))


def all_tournaments(n: int):
    pairs = list(itertools.combinations(range(n), 2))
    for states in itertools.product((1, 2), repeat=len(pairs)):
        edges = set()
        for (u, v), state in zip(pairs, states):
            edges.add((u, v) if state == 1 else (v, u))
        yield StrictDigraph(n, frozenset(edges))


def has_strong_completion(g: StrictDigraph) -> bool:
    """Whether some strict supergraph on the same vertices is strong.

    Strongness is monotone under edge addition, so it is enough to try
    every orientation of the non-adjacent pairs.
    """
    pairs = g.nonadjacent_pairs()
    for states in itertools.product((1, 2), repeat=len(pairs)):
        edges = set(g.edges)
        for (u, v), state in zip(pairs, states):
            edges.add((u, v) if state == 1 else (v, u))
        if oracle_is_strong(StrictDigraph(g.n, frozenset(edges))):
            return True
    return False


def random_digraph(rng: Random, n: int, density: float) -> StrictDigraph:
    edges = set()
    for u, v in itertools.combinations(range(n), 2):
        if rng.random() < density:
            edges.add((u, v) if rng.random() < 0.5 else (v, u))
    return StrictDigraph(n, frozenset(edges))


def random_strong_blob(rng: Random, vertices: list[int]) -> set[tuple[int, int]]:
    """Directed cycle through the given vertices plus a few chords.

    A single vertex is a valid (trivially strong) blob; two vertices are not,
    so sizes must avoid 2.
    """
    k = len(vertices)
    assert k == 1 or k >= 3
    if k == 1:
        return set()
    order = vertices[:]
    rng.shuffle(order)
    edges = {(order[i], order[(i + 1) % k]) for i in range(k)}
    for u, v in itertools.combinations(vertices, 2):
        if (u, v) in edges or (v, u) in edges:
            continue
        if rng.random() < 0.3:
            edges.add((u, v) if rng.random() < 0.5 else (v, u))
    return edges


def random_all_strong_disconnected(rng: Random, max_n: int = 8) -> StrictDigraph:
    """Disjoint union of at least two strong weak components."""
    budget = rng.randint(4, max_n)
    sizes: list[int] = []
    while budget:
        room = budget - 1 if not sizes else budget
        size = rng.choice([s for s in (1, 3, 4, 5) if s <= room] or [1])
        sizes.append(size)
        budget -= size
    edges = set()
    base = 0
    for size in sizes:
        edges |= random_strong_blob(rng, list(range(base, base + size)))
        base += size
    assert len(sizes) >= 2
    return StrictDigraph(base, frozenset(edges))


def random_mixed_disconnected(rng: Random, max_n: int = 8) -> StrictDigraph:
    """A non-strong weakly connected dicut-free part plus a strong blob."""
    while True:
        part = rng.randint(3, max_n - 1)
        g = random_digraph(rng, part, rng.choice([0.3, 0.5, 0.7]))
        if oracle_has_complete_dicut(g) or oracle_is_strong(g):
            continue
        if len(weak_components(g)) != 1:
            continue
        blob = rng.choice([s for s in (1, 3, 4) if part + s <= max_n] or [1])
        edges = set(g.edges) | random_strong_blob(
            rng, list(range(part, part + blob))
        )
        return StrictDigraph(part + blob, frozenset(edges))


def random_dicut_free(rng: Random, max_n: int = 8) -> StrictDigraph:
    while True:
        g = random_digraph(rng, rng.randint(3, max_n), rng.choice([0.2, 0.4, 0.6]))
        if not oracle_has_complete_dicut(g):
            return g


def criterion_sample(seed: int, count: int = 1000) -> list[StrictDigraph]:
    """Mixed dicut-free sample: random, all-strong disconnected, mixed."""
    rng = Random(seed)
    sample = []
    for i in range(count):
        if i % 4 == 2:
            sample.append(random_all_strong_disconnected(rng))
        elif i % 4 == 3:
            sample.append(random_mixed_disconnected(rng))
        else:
            sample.append(random_dicut_free(rng))
    return sample
