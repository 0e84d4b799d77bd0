"""Strong extensions: constructive algorithm, bounds, oracles, and generators.

Any strict digraph on at least three vertices with no complete dicut can be
made strongly connected by adding at most r edges, where r is the number of
strong components; at most r - 1 unless the digraph is disconnected with
every weak component already strong.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .dicut import DicutCertificate, find_complete_dicut
from .digraph import (
    Condensation,
    Edge,
    StrictDigraph,
    is_strong,
    serialize_edge_list,
    strong_components,
    weak_components,
)
from .errors import (
    BudgetError,
    DisconnectedError,
    HasCompleteDicutError,
    InvalidInputError,
    NotStrongError,
    NotTournamentError,
    TooSmallError,
)

MIN_EXTENSION_PAIR_BUDGET = 24
MIN_EXTENSION_VERTEX_BUDGET = 10
CYCLIC_ORDER_PERMUTATION_LIMIT = 8


@dataclass(frozen=True)
class ExtensionPlan:
    """Ordered edge additions that make the input strong, plus the result."""

    added: tuple[Edge, ...]
    resulting: StrictDigraph


@dataclass(frozen=True)
class BoundsReport:
    """Bounds on the minimum number of added edges for a strong extension.

    ``lower`` is max(s, t), or 0 for an already strong input.  The matched
    and cyclic entries are None when their shape precondition does not hold
    (purely bipartite orientation, respectively disconnectedness), and
    ``brute_min`` is None when the exact search budget is exceeded.
    """

    lower: int
    lower_matched: int | None
    upper_theorem: int
    upper_cyclic: int | None
    upper_prop: int | None
    brute_min: int | None


def _require_order(g: StrictDigraph):
    if g.n < 3:
        raise TooSmallError(f"need at least 3 vertices, got {g.n}")


def _require_no_complete_dicut(g: StrictDigraph):
    cert = find_complete_dicut(g)
    if cert is not None:
        raise HasCompleteDicutError(cert)


def _case_step(g: StrictDigraph, cond: Condensation) -> list[Edge]:
    """Edges added by one round of the weakly connected construction.

    Let S be the vertices of the source components.  [S, S^c] is a dicut, so
    it is not complete and some pair y in S, x outside S is non-adjacent; the
    edge x -> y is added.  If x's component was not a successor of y's, the
    edge y -> z is added as well, where z sits in a source component that is
    a predecessor of x's component (legal because no edge joins two source
    components).  Either way the component count drops.
    """
    src = sorted(
        v for cid in cond.source_components for v in cond.components[cid]
    )
    src_set = set(src)
    outside = [v for v in range(g.n) if v not in src_set]
    pick = None
    for y in src:
        for x in outside:
            if (y, x) not in g.edges:
                pick = (y, x)
                break
        if pick is not None:
            break
    if pick is None:
        raise AssertionError("source cut is complete; invariant violated")
    y, x = pick
    added = [(x, y)]
    cx, cy = cond.component_of[x], cond.component_of[y]
    if cx not in cond.quotient_reachable(cy):
        source_preds = sorted(
            cid
            for cid in cond.source_components
            if cx in cond.quotient_reachable(cid)
        )
        z = cond.components[source_preds[0]][0]
        added.append((y, z))
    return added


def _grow_until_strong(g: StrictDigraph) -> tuple[list[Edge], StrictDigraph]:
    added: list[Edge] = []
    current = g
    cond = strong_components(current)
    while cond.r > 1:
        step = _case_step(current, cond)
        added.extend(step)
        current = current.with_edges(step)
        next_cond = strong_components(current)
        assert next_cond.r < cond.r
        cond = next_cond
    return added, current


def extend_connected(g: StrictDigraph) -> ExtensionPlan:
    """Strong extension of a weakly connected digraph with at most r - 1 edges."""
    _require_order(g)
    if len(weak_components(g)) != 1:
        raise DisconnectedError("digraph is not weakly connected")
    _require_no_complete_dicut(g)
    added, result = _grow_until_strong(g)
    return ExtensionPlan(tuple(added), result)


def extend(g: StrictDigraph) -> ExtensionPlan:
    """Strong extension of any strongly connectable digraph, at most r edges.

    Exactly r edges are used only when g is disconnected with every weak
    component strong; otherwise at most r - 1.
    """
    _require_order(g)
    _require_no_complete_dicut(g)
    cond = strong_components(g)
    if cond.c == 1:
        added, result = _grow_until_strong(g)
        return ExtensionPlan(tuple(added), result)
    groups = [cond.components_in_weak(wid) for wid in range(cond.c)]
    if all(len(group) == 1 for group in groups):
        bridge = _link_strong_components(cond)
        result = g.with_edges(bridge)
        assert is_strong(result)
        return ExtensionPlan(tuple(bridge), result)
    bridge = _link_weak_components(cond, groups)
    more, result = _grow_until_strong(g.with_edges(bridge))
    return ExtensionPlan(tuple(bridge) + tuple(more), result)


def _link_strong_components(cond: Condensation) -> list[Edge]:
    """Join c strong weak components with exactly c new edges."""
    blocks = cond.weak_components
    k = len(blocks)
    if k > 2:
        reps = [block[0] for block in blocks]
        return [(reps[i], reps[(i + 1) % k]) for i in range(k)]
    first, second = blocks
    forward = (first[0], second[0])
    # the return edge must use a different vertex pair; n >= 3 guarantees one
    if len(second) >= 2:
        backward = (second[1], first[0])
    else:
        backward = (second[0], first[1])
    return [forward, backward]


def _link_weak_components(cond: Condensation, groups: list[list[int]]) -> list[Edge]:
    """One edge from each weak component's chosen sink into the next's source.

    In each weak component the smallest-id source component is chosen; the
    exit point is that component itself when the weak component is strong,
    otherwise the smallest-id sink component reachable from it.
    """
    k = len(groups)
    entry: list[int] = []
    exits: list[int] = []
    for group in groups:
        s_cid = next(cid for cid in group if cid in cond.source_components)
        if len(group) == 1:
            t_cid = s_cid
        else:
            reach = cond.quotient_reachable(s_cid)
            t_cid = next(
                cid
                for cid in group
                if cid in cond.sink_components and cid in reach
            )
        entry.append(cond.components[s_cid][0])
        exits.append(cond.components[t_cid][0])
    edges = [(exits[i], entry[(i + 1) % k]) for i in range(k)]
    if k == 2:
        assert set(edges[0]) != set(edges[1])
    return edges


def bounds(g: StrictDigraph, *, brute: bool = True) -> BoundsReport:
    """Bounds on the minimum extension size of a connectable digraph.

    ``brute=False`` skips the exact search even when its budget would allow it.
    """
    _require_order(g)
    _require_no_complete_dicut(g)
    cond = strong_components(g)
    lower = max(cond.s, cond.t) if cond.r > 1 else 0
    lower_matched = _oriented_bipartite_bound(g)
    all_weak_strong = all(
        len(cond.components_in_weak(wid)) == 1 for wid in range(cond.c)
    )
    upper_theorem = cond.r if (cond.c > 1 and all_weak_strong) else cond.r - 1
    upper_cyclic = upper_prop = None
    if cond.c > 1:
        upper_cyclic = _best_cyclic_bound(cond)
        upper_prop = cond.s + cond.t - cond.c
    brute_min = None
    if (
        brute
        and g.n <= MIN_EXTENSION_VERTEX_BUDGET
        and len(g.nonadjacent_pairs()) <= MIN_EXTENSION_PAIR_BUDGET
    ):
        result = brute_force_min_extension(g)
        assert result is not None
        brute_min = result[0]
    return BoundsReport(
        lower=lower,
        lower_matched=lower_matched,
        upper_theorem=upper_theorem,
        upper_cyclic=upper_cyclic,
        upper_prop=upper_prop,
        brute_min=brute_min,
    )


def _oriented_bipartite_bound(g: StrictDigraph) -> int | None:
    """Matching-based lower bound when every vertex is purely tail or head."""
    tails = {u for u, _ in g.edges}
    heads = {v for _, v in g.edges}
    if not tails or tails & heads or len(tails) + len(heads) != g.n:
        return None
    return bipartite_matching_lower_bound(g, sorted(tails), sorted(heads))


def bipartite_matching_lower_bound(g: StrictDigraph, xs, ys) -> int:
    """Lower bound |xs| + |ys| - m for a digraph oriented from xs to ys.

    m is the size of a maximum matching from ys into xs over the pairs not
    adjacent in g; those are the only legal return edges, and each can serve
    one xs vertex needing an entering edge and one ys vertex needing a
    leaving edge at the same time.
    """
    xs = sorted(set(xs))
    ys = sorted(set(ys))
    x_set, y_set = set(xs), set(ys)
    if not xs or not ys:
        raise InvalidInputError("both sides of the bipartition must be nonempty")
    if x_set & y_set or (x_set | y_set) != set(range(g.n)):
        raise InvalidInputError("xs and ys must partition the vertex set")
    for u, v in g.edges:
        if u not in x_set or v not in y_set:
            raise InvalidInputError(f"edge ({u}, {v}) does not go from xs to ys")
    if len(g.edges) == len(xs) * len(ys):
        raise HasCompleteDicutError(DicutCertificate(frozenset(xs)))
    candidates = {y: [x for x in xs if (x, y) not in g.edges] for y in ys}
    return len(xs) + len(ys) - _max_matching(ys, candidates)


def _max_matching(left: list[int], adj: dict[int, list[int]]) -> int:
    """Maximum bipartite matching size by augmenting paths."""
    matched: dict[int, int] = {}

    def augment(u: int, seen: set[int]) -> bool:
        for v in adj[u]:
            if v in seen:
                continue
            seen.add(v)
            if v not in matched or augment(matched[v], seen):
                matched[v] = u
                return True
        return False

    return sum(1 for u in left if augment(u, set()))


def _best_cyclic_bound(cond: Condensation) -> int:
    """Upper bound from linking weak components in a cyclic order.

    Joining consecutive components costs max(t_prev, s_next) edges.  The
    base order sorts weak components by smallest vertex; all orders are
    tried for small counts, otherwise the rotations of the base order.
    """
    per_weak: list[tuple[int, int]] = []
    for wid in range(cond.c):
        group = cond.components_in_weak(wid)
        s_w = sum(1 for cid in group if cid in cond.source_components)
        t_w = sum(1 for cid in group if cid in cond.sink_components)
        per_weak.append((s_w, t_w))
    k = cond.c
    base = tuple(range(k))
    if k <= CYCLIC_ORDER_PERMUTATION_LIMIT:
        orders = itertools.permutations(base)
    else:
        orders = (base[i:] + base[:i] for i in range(k))
    return min(
        sum(
            max(per_weak[order[i - 1]][1], per_weak[order[i]][0])
            for i in range(k)
        )
        for order in orders
    )


def brute_force_min_extension(
    g: StrictDigraph,
) -> tuple[int, ExtensionPlan] | None:
    """Exact minimum strong extension by exhaustive search.

    Added-edge sets are enumerated in increasing size and lexicographically
    within each size; each non-adjacent pair contributes both orientations.
    Returns None when no strong extension exists at all.
    """
    pairs = g.nonadjacent_pairs()
    if len(pairs) > MIN_EXTENSION_PAIR_BUDGET or g.n > MIN_EXTENSION_VERTEX_BUDGET:
        raise BudgetError(
            f"minimum-extension search supports at most "
            f"{MIN_EXTENSION_PAIR_BUDGET} addable pairs on "
            f"{MIN_EXTENSION_VERTEX_BUDGET} vertices; "
            f"got {len(pairs)} pairs on {g.n} vertices"
        )
    if is_strong(g):
        return 0, ExtensionPlan((), g)
    candidates = sorted(edge for u, v in pairs for edge in ((u, v), (v, u)))
    for size in range(1, len(pairs) + 1):
        for combo in itertools.combinations(candidates, size):
            keys = {(min(u, v), max(u, v)) for u, v in combo}
            if len(keys) < size:
                continue
            extended = g.with_edges(combo)
            if is_strong(extended):
                return size, ExtensionPlan(tuple(combo), extended)
    return None


def complete_to_tournament(g: StrictDigraph) -> StrictDigraph:
    """Orient every missing pair low-to-high; strongness is preserved."""
    if not is_strong(g):
        raise NotStrongError("digraph is not strongly connected")
    return g.with_edges(g.nonadjacent_pairs())


def hamiltonian_cycle_strong_tournament(t: StrictDigraph) -> list[int]:
    """Spanning directed cycle of a strong tournament.

    Starts from a directed triangle and grows the cycle.  A vertex with both
    an in-neighbour and an out-neighbour on the cycle can be inserted between
    some consecutive pair.  When no single vertex qualifies, every remaining
    vertex either beats the whole cycle or loses to it, and strongness forces
    an edge from a loser to a winner; that pair is spliced in together.  The
    result is rotated to start at its smallest vertex.
    """
    if t.n < 3:
        raise TooSmallError(f"need at least 3 vertices, got {t.n}")
    if len(t.edges) != t.n * (t.n - 1) // 2:
        raise NotTournamentError("every vertex pair must be adjacent")
    if not is_strong(t):
        raise NotStrongError("tournament is not strongly connected")
    cycle = _initial_triangle(t)
    in_cycle = set(cycle)
    remaining = [v for v in range(t.n) if v not in in_cycle]
    while remaining:
        if not _insert_single(t, cycle, remaining):
            _splice_pair(t, cycle, remaining)
    pos = cycle.index(min(cycle))
    return cycle[pos:] + cycle[:pos]


def _initial_triangle(t: StrictDigraph) -> list[int]:
    for a in range(t.n):
        for b in range(a + 1, t.n):
            for c in range(b + 1, t.n):
                if t.has_edge(a, b) and t.has_edge(b, c) and t.has_edge(c, a):
                    return [a, b, c]
                if t.has_edge(a, c) and t.has_edge(c, b) and t.has_edge(b, a):
                    return [a, c, b]
    raise AssertionError("strong tournament without a directed triangle")


def _insert_single(t: StrictDigraph, cycle: list[int], remaining: list[int]) -> bool:
    for idx, v in enumerate(remaining):
        for i in range(len(cycle)):
            a = cycle[i]
            b = cycle[(i + 1) % len(cycle)]
            if t.has_edge(a, v) and t.has_edge(v, b):
                cycle.insert(i + 1, v)
                del remaining[idx]
                return True
    return False


def _splice_pair(t: StrictDigraph, cycle: list[int], remaining: list[int]):
    winners = [v for v in remaining if all(t.has_edge(v, c) for c in cycle)]
    losers = [v for v in remaining if all(t.has_edge(c, v) for c in cycle)]
    assert len(winners) + len(losers) == len(remaining)
    for s in losers:
        for d in winners:
            if t.has_edge(s, d):
                cycle.insert(1, d)
                cycle.insert(1, s)
                remaining.remove(s)
                remaining.remove(d)
                return
    raise AssertionError("no loser-to-winner edge; tournament cannot be strong")


def gen_tt_minus_path(r: int) -> StrictDigraph:
    """Transitive tournament on r vertices minus its spanning path.

    A weakly connected digraph with r singleton strong components and no
    complete dicut whose minimum strong extension needs exactly r - 1 edges.
    """
    if r < 3:
        raise InvalidInputError(f"need r >= 3, got {r}")
    edges = {(i, j) for i in range(r) for j in range(i + 2, r)}
    return StrictDigraph(r, frozenset(edges))


def gen_bipartite_plus_isolated(p: int, q: int) -> StrictDigraph:
    """Complete bipartite p x q digraph oriented left-to-right, plus an
    isolated vertex; its minimum strong extension needs exactly p + q edges."""
    if p < 1 or q < 1:
        raise InvalidInputError("need p >= 1 and q >= 1")
    edges = {(i, p + j) for i in range(p) for j in range(q)}
    return StrictDigraph(p + q + 1, frozenset(edges))


def gen_disjoint_cycles(k: int, m: int) -> StrictDigraph:
    """m disjoint directed k-cycles."""
    if k < 3:
        raise InvalidInputError(f"cycle length must be at least 3, got {k}")
    if m < 1:
        raise InvalidInputError(f"need at least one cycle, got {m}")
    edges = set()
    for c in range(m):
        base = c * k
        for i in range(k):
            edges.add((base + i, base + (i + 1) % k))
    return StrictDigraph(k * m, frozenset(edges))


def serialize_plan(plan: ExtensionPlan) -> str:
    """Added edges as ``+ u v`` lines, followed by the resulting edge list."""
    lines = [f"+ {u} {v}" for u, v in plan.added]
    prefix = "\n".join(lines) + "\n" if lines else ""
    return prefix + serialize_edge_list(plan.resulting)


def serialize_bounds(report: BoundsReport) -> str:
    """Fixed-order ``key: value`` lines; absent entries are omitted."""
    lines = [f"lower: {report.lower}"]
    if report.lower_matched is not None:
        lines.append(f"lower-matched: {report.lower_matched}")
    lines.append(f"upper-theorem: {report.upper_theorem}")
    if report.upper_cyclic is not None:
        lines.append(f"upper-cyclic: {report.upper_cyclic}")
    if report.upper_prop is not None:
        lines.append(f"upper-prop: {report.upper_prop}")
    if report.brute_min is not None:
        lines.append(f"brute-min: {report.brute_min}")
    return "\n".join(lines) + "\n"
