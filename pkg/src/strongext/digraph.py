"""Strict digraphs and their strong/weak component structure.

A strict digraph is an orientation of a simple graph: no loops and at most
one edge per unordered vertex pair.  Vertices are dense indices 0..n-1.
"""

from __future__ import annotations

import heapq
from collections import deque
from dataclasses import dataclass

from .errors import ParseError

Edge = tuple[int, int]


@dataclass(frozen=True)
class StrictDigraph:
    """Immutable strict digraph; invalid edge sets are rejected on construction."""

    n: int
    edges: frozenset[Edge] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(self.edges))
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            if (v, u) in self.edges:
                raise ValueError(f"antiparallel pair between {u} and {v}")

    @classmethod
    def from_edges(cls, n: int, edges=()) -> StrictDigraph:
        return cls(n, frozenset(edges))

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edges

    def adjacent(self, u: int, v: int) -> bool:
        return (u, v) in self.edges or (v, u) in self.edges

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def out_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[u].append(v)
        return adj

    def in_adj(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.sorted_edges():
            adj[v].append(u)
        return adj

    def undirected_adj(self) -> list[list[int]]:
        adj: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return [sorted(s) for s in adj]

    def with_edges(self, extra) -> StrictDigraph:
        """New digraph with the extra edges added; duplicates are rejected."""
        extra = list(extra)
        for u, v in extra:
            if (u, v) in self.edges:
                raise ValueError(f"edge ({u}, {v}) already present")
        return StrictDigraph(self.n, self.edges | set(extra))

    def reverse(self) -> StrictDigraph:
        return StrictDigraph(self.n, frozenset((v, u) for u, v in self.edges))

    def nonadjacent_pairs(self) -> list[Edge]:
        """Unordered non-adjacent pairs (u, v) with u < v, in sorted order."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adjacent(u, v)
        ]


def parse_edge_list(text: str) -> StrictDigraph:
    """Parse the edge-list format: header ``n <N>``, then ``<u> <v>`` lines.

    Blank lines are skipped and lines starting with ``#`` are comments.
    Duplicate edges are deduplicated; loops, antiparallel pairs, and
    out-of-range indices raise a ParseError naming the offending line.
    """
    n = None
    edges: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise ParseError(lineno, "expected header 'n <N>'")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {tokens[1]!r}") from None
            if n < 0:
                raise ParseError(lineno, "vertex count must be nonnegative")
            continue
        if len(tokens) != 2:
            raise ParseError(lineno, f"expected '<u> <v>', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise ParseError(lineno, f"non-integer vertex in {line!r}") from None
        if u == v:
            raise ParseError(lineno, f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex index out of range in edge {u} {v}")
        if (v, u) in edges:
            raise ParseError(lineno, f"antiparallel pair between {u} and {v}")
        edges.add((u, v))
    if n is None:
        raise ParseError(1, "missing header 'n <N>'")
    return StrictDigraph(n, frozenset(edges))


def serialize_edge_list(g: StrictDigraph) -> str:
    """Inverse of parse_edge_list; edges are emitted sorted lexicographically."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def to_dot(g: StrictDigraph) -> str:
    """Emit a DOT digraph for visualization (output only, never parsed back)."""
    lines = ["digraph {"]
    incident = set()
    for u, v in g.sorted_edges():
        lines.append(f"  {u} -> {v};")
        incident.add(u)
        incident.add(v)
    for v in range(g.n):
        if v not in incident:
            lines.append(f"  {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Condensation:
    """Strong components plus the acyclic quotient and weak-component data.

    Component ids follow a deterministic topological order of the quotient:
    sources first, ties broken by smallest contained vertex.  Weak component
    ids are ordered by smallest member.  Every quotient edge goes from a
    lower component id to a higher one.
    """

    component_of: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    quotient_edges: frozenset[Edge]
    source_components: frozenset[int]
    sink_components: frozenset[int]
    weak_component_of: tuple[int, ...]
    weak_components: tuple[tuple[int, ...], ...]

    @property
    def r(self) -> int:
        """Number of strong components."""
        return len(self.components)

    @property
    def s(self) -> int:
        """Number of source components (no entering quotient edge)."""
        return len(self.source_components)

    @property
    def t(self) -> int:
        """Number of sink components (no leaving quotient edge)."""
        return len(self.sink_components)

    @property
    def c(self) -> int:
        """Number of weak components."""
        return len(self.weak_components)

    @property
    def c_prime(self) -> int:
        """Number of weak components that are not strongly connected."""
        return sum(1 for group in self._components_by_weak() if len(group) > 1)

    @property
    def u(self) -> int:
        """Strong components that are a source or a sink, counted once."""
        return len(self.source_components | self.sink_components)

    def _components_by_weak(self) -> list[list[int]]:
        groups: list[list[int]] = [[] for _ in range(len(self.weak_components))]
        for cid, members in enumerate(self.components):
            groups[self.weak_component_of[members[0]]].append(cid)
        return groups

    def components_in_weak(self, wid: int) -> list[int]:
        """Sorted ids of the strong components inside weak component wid."""
        return self._components_by_weak()[wid]

    def quotient_reachable(self, cid: int) -> frozenset[int]:
        """Component ids reachable from cid by a nonempty quotient path."""
        adj: dict[int, list[int]] = {}
        for a, b in self.quotient_edges:
            adj.setdefault(a, []).append(b)
        seen: set[int] = set()
        stack = list(adj.get(cid, []))
        while stack:
            x = stack.pop()
            if x not in seen:
                seen.add(x)
                stack.extend(adj.get(x, []))
        return frozenset(seen)


def _tarjan_sccs(n: int, adj: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan strongly connected components."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    sccs: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pi = work[-1]
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            descended = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work[-1] = (v, i + 1)
                    work.append((w, 0))
                    descended = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if descended:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                sccs.append(comp)
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return sccs


def weak_components(g: StrictDigraph) -> tuple[tuple[int, ...], ...]:
    """Partition by underlying-graph connectivity, ordered by smallest member."""
    adj = g.undirected_adj()
    seen = [False] * g.n
    blocks: list[tuple[int, ...]] = []
    for start in range(g.n):
        if seen[start]:
            continue
        seen[start] = True
        block = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


def strong_components(g: StrictDigraph) -> Condensation:
    """Condensation of g with deterministically numbered components."""
    raw = _tarjan_sccs(g.n, g.out_adj())
    raw_of = [0] * g.n
    for i, comp in enumerate(raw):
        for v in comp:
            raw_of[v] = i
    k = len(raw)
    succ: list[set[int]] = [set() for _ in range(k)]
    indeg = [0] * k
    for u, v in g.edges:
        a, b = raw_of[u], raw_of[v]
        if a != b and b not in succ[a]:
            succ[a].add(b)
            indeg[b] += 1
    min_vertex = [min(comp) for comp in raw]
    heap = [(min_vertex[i], i) for i in range(k) if indeg[i] == 0]
    heapq.heapify(heap)
    order: list[int] = []
    while heap:
        _, i = heapq.heappop(heap)
        order.append(i)
        for j in succ[i]:
            indeg[j] -= 1
            if indeg[j] == 0:
                heapq.heappush(heap, (min_vertex[j], j))
    new_id = [0] * k
    for pos, i in enumerate(order):
        new_id[i] = pos
    components = tuple(tuple(sorted(raw[i])) for i in order)
    component_of = tuple(new_id[raw_of[v]] for v in range(g.n))
    quotient = frozenset(
        (component_of[u], component_of[v])
        for u, v in g.edges
        if component_of[u] != component_of[v]
    )
    has_in = {b for _, b in quotient}
    has_out = {a for a, _ in quotient}
    weaks = weak_components(g)
    weak_of = [0] * g.n
    for wid, block in enumerate(weaks):
        for v in block:
            weak_of[v] = wid
    return Condensation(
        component_of=component_of,
        components=components,
        quotient_edges=quotient,
        source_components=frozenset(i for i in range(k) if i not in has_in),
        sink_components=frozenset(i for i in range(k) if i not in has_out),
        weak_component_of=tuple(weak_of),
        weak_components=weaks,
    )


def is_strong(g: StrictDigraph) -> bool:
    """True iff g has exactly one strong component; false on the empty graph."""
    if g.n == 0:
        return False
    if g.n == 1:
        return True
    return _reaches_all(g.n, g.out_adj(), 0) and _reaches_all(g.n, g.in_adj(), 0)


def _reaches_all(n: int, adj: list[list[int]], start: int) -> bool:
    seen = [False] * n
    seen[start] = True
    count = 1
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == n
