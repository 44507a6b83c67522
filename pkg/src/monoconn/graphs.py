"""Immutable simple graphs with bitset adjacency, generators and graph6 I/O.

Vertices are always the dense integers ``0..n-1``.  Adjacency is stored as a
tuple of integer bitmasks, which keeps every structural query (connectivity,
diameter, domination checks) a matter of a few machine-word operations for the
graph sizes the exact solvers accept (n <= ~12).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Sequence


class GraphFormatError(ValueError):
    """Raised for malformed graph6 or edge-list input."""


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``edges`` is a sorted tuple of sorted pairs; ``adj[v]`` is the neighbour
    bitmask of ``v``.  Instances are immutable and safe to share.
    """

    n: int
    edges: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def degrees(self) -> list[int]:
        return [bin(a).count("1") for a in self.adj]

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.adj[v])

    def nonadjacent_pairs(self) -> list[tuple[int, int]]:
        """All unordered non-adjacent vertex pairs, lexicographically."""
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not (self.adj[u] >> v) & 1
        ]

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, m={self.m})"


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return out


def from_edge_list(n: int, pairs: Iterable[Sequence[int]]) -> Graph:
    """Build a graph from an explicit edge list.

    Rejects self-loops, duplicate edges and out-of-range endpoints, naming the
    offending pair in the error message.
    """
    if n < 0:
        raise ValueError(f"vertex count must be non-negative, got {n}")
    adj = [0] * n
    edges = []
    seen = set()
    for pair in pairs:
        u, v = pair
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"vertex out of range 0..{n - 1}: pair {(u, v)}")
        if u == v:
            raise ValueError(f"self-loop rejected: pair {(u, v)}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ValueError(f"duplicate edge rejected: pair {(u, v)}")
        seen.add(e)
        edges.append(e)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n=n, edges=tuple(sorted(edges)), adj=tuple(adj))


# ---------------------------------------------------------------------------
# graph6 codec (bit-exact; 6-bit chunks offset by 63, upper triangle
# column-major: for j in 1..n-1, for i in 0..j-1).
# ---------------------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def _g6_size(text: str) -> tuple[int, int]:
    """Decode the leading size field, returning (n, chars consumed)."""
    if not text:
        raise GraphFormatError("empty graph6 string")
    c0 = ord(text[0])
    if c0 < 63 or c0 > 126:
        raise GraphFormatError(f"character out of graph6 range 63..126: {text[0]!r}")
    if c0 != 126:
        return c0 - 63, 1
    if len(text) >= 4 and ord(text[1]) != 126:
        vals = [ord(c) - 63 for c in text[1:4]]
        if any(v < 0 or v > 63 for v in vals):
            raise GraphFormatError("malformed length header")
        return (vals[0] << 12) | (vals[1] << 6) | vals[2], 4
    raise GraphFormatError("malformed length header")


def parse_graph6(text: str) -> Graph:
    """Parse one graph6 line (an optional '>>graph6<<' header is skipped)."""
    line = text.strip()
    if line.startswith(GRAPH6_HEADER):
        line = line[len(GRAPH6_HEADER):]
    n, pos = _g6_size(line)
    nbits = n * (n - 1) // 2
    nchars = (nbits + 5) // 6
    body = line[pos:]
    if len(body) != nchars:
        raise GraphFormatError(
            f"malformed length header: n={n} needs {nchars} data characters, got {len(body)}"
        )
    bits = 0
    for ch in body:
        v = ord(ch) - 63
        if v < 0 or v > 63:
            raise GraphFormatError(f"character out of graph6 range 63..126: {ch!r}")
        bits = (bits << 6) | v
    pad = nchars * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise GraphFormatError("trailing padding bits are nonzero")
    bits >>= pad
    adj = [0] * n
    edges = []
    # bits now holds the upper triangle, most significant bit first
    k = nbits
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if (bits >> k) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
                edges.append((i, j))
    return Graph(n=n, edges=tuple(sorted(edges)), adj=tuple(adj))


def to_graph6(g: Graph) -> str:
    """Encode a graph in canonical graph6 (no header)."""
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + chr(((n >> 12) & 63) + 63) + chr(((n >> 6) & 63) + 63) + chr((n & 63) + 63)
    else:
        raise GraphFormatError("graph too large for this graph6 encoder")
    bits = 0
    nbits = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            bits = (bits << 1) | ((g.adj[i] >> j) & 1)
    pad = (-nbits) % 6
    bits <<= pad
    nchars = (nbits + 5) // 6
    chars = []
    for k in range(nchars - 1, -1, -1):
        chars.append(chr(((bits >> (6 * k)) & 63) + 63))
    return head + "".join(chars)


def iter_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and headers."""
    for line in lines:
        line = line.strip()
        if not line or line == GRAPH6_HEADER:
            continue
        yield parse_graph6(line)


# ---------------------------------------------------------------------------
# Edge-list text format: first line "n m", then one "u v" line per edge.
# ---------------------------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise GraphFormatError(f"edge-list header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise GraphFormatError(f"edge-list header must be 'n m', got {lines[0]!r}") from exc
    pairs = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise GraphFormatError(f"edge line must be 'u v', got {ln!r}")
        pairs.append((int(parts[0]), int(parts[1])))
    if len(pairs) != m:
        raise GraphFormatError(f"edge-list declares m={m} but has {len(pairs)} edge lines")
    try:
        return from_edge_list(n, pairs)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from exc


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Structural queries
# ---------------------------------------------------------------------------

def _reach(adj: Sequence[int], start: int, allowed: int) -> int:
    """Bitmask of vertices reachable from start inside the allowed mask."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    full = (1 << g.n) - 1
    return _reach(g.adj, 0, full) == full


def diameter(g: Graph) -> int:
    """Maximum over vertex pairs of the shortest-path length."""
    if not is_connected(g):
        raise ValueError("disconnected")
    best = 0
    full = (1 << g.n) - 1
    for s in range(g.n):
        seen = 1 << s
        frontier = seen
        dist = 0
        while seen != full:
            nxt = 0
            for v in _bits(frontier):
                nxt |= g.adj[v]
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
            dist += 1
        best = max(best, dist)
    return best


def max_degree(g: Graph) -> int:
    return max((g.degree(v) for v in range(g.n)), default=0)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    adj = tuple((full & ~g.adj[v]) & ~(1 << v) for v in range(g.n))
    edges = tuple(
        (u, v) for u in range(g.n) for v in range(u + 1, g.n) if (adj[u] >> v) & 1
    )
    return Graph(n=g.n, edges=edges, adj=adj)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.adj[u] & g.adj[v]) for u, v in g.edges)


def has_cut_vertex(g: Graph) -> bool:
    """True if removing some single vertex disconnects the graph."""
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.n <= 2:
        return False
    full = (1 << g.n) - 1
    for v in range(g.n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if _reach(g.adj, start, rest) != rest:
            return True
    return False


def _local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally vertex-disjoint s-t paths (s,t non-adjacent).

    Unit-capacity max-flow on the split digraph: every vertex other than s,t
    becomes an in/out pair joined by a capacity-1 arc; each edge becomes a pair
    of directed arcs of effectively infinite capacity.
    """
    n = g.n
    # node ids: out(v) = v, in(v) = v + n ; arcs via capacity dict
    INF = n * n + 1
    cap: dict[tuple[int, int], int] = {}

    def add(a: int, b: int, c: int) -> None:
        cap[(a, b)] = cap.get((a, b), 0) + c
        cap.setdefault((b, a), 0)

    for v in range(n):
        if v != s and v != t:
            add(v + n, v, 1)
    for u, v in g.edges:
        add(u, v + n if v not in (s, t) else v, INF)
        add(v, u + n if u not in (s, t) else u, INF)
    source, sink = s, t
    adj_f: dict[int, list[int]] = {}
    for (a, b) in cap:
        adj_f.setdefault(a, []).append(b)
    flow = 0
    while True:
        # BFS for an augmenting path
        parent = {source: source}
        queue = [source]
        while queue and sink not in parent:
            nxt = []
            for a in queue:
                for b in adj_f.get(a, ()):
                    if b not in parent and cap[(a, b)] > 0:
                        parent[b] = a
                        nxt.append(b)
            queue = nxt
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Minimum number of vertex deletions that disconnect the graph (n-1 for K_n)."""
    if g.n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.is_complete():
        return g.n - 1
    return min(
        _local_vertex_connectivity(g, u, v) for u, v in g.nonadjacent_pairs()
    )


@dataclass(frozen=True)
class GraphConditionSet:
    """The five sufficient conditions under which tmc(G) = m - n + 2 + l(G).

    ``degree_bound_holds`` is the exact rational comparison
    max_degree < n - (2m - 3(n-1)) / (n-3); boundary cases are excluded.
    """

    complement_4_connected: bool
    triangle_free: bool
    degree_bound_holds: bool
    diameter_ge_3: bool
    has_cut_vertex: bool
    diameter: int
    max_degree: int
    complement_vertex_connectivity: int

    def any_holds(self) -> bool:
        return (
            self.complement_4_connected
            or self.triangle_free
            or self.degree_bound_holds
            or self.diameter_ge_3
            or self.has_cut_vertex
        )

    def flags(self) -> dict[str, bool]:
        return {
            "complement_4_connected": self.complement_4_connected,
            "triangle_free": self.triangle_free,
            "degree_bound_holds": self.degree_bound_holds,
            "diameter_ge_3": self.diameter_ge_3,
            "has_cut_vertex": self.has_cut_vertex,
        }


def tmc_identity_conditions(g: Graph) -> GraphConditionSet:
    """Evaluate the five sufficient conditions for tmc = m - n + 2 + l(G)
    (requires connected input and n > 3)."""
    if g.n <= 3:
        raise ValueError("theorem hypothesis requires n > 3")
    if not is_connected(g):
        raise ValueError("disconnected")
    d = diameter(g)
    delta = max_degree(g)
    kappa_bar = vertex_connectivity(complement(g))
    bound = Fraction(g.n) - Fraction(2 * g.m - 3 * (g.n - 1), g.n - 3)
    return GraphConditionSet(
        complement_4_connected=kappa_bar >= 4,
        triangle_free=is_triangle_free(g),
        degree_bound_holds=Fraction(delta) < bound,
        diameter_ge_3=d >= 3,
        has_cut_vertex=has_cut_vertex(g),
        diameter=d,
        max_degree=delta,
        complement_vertex_connectivity=kappa_bar,
    )


# ---------------------------------------------------------------------------
# Generators
# ---------------------------------------------------------------------------

def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path needs n >= 1")
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1} with hub 0."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return from_edge_list(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs n >= 1")
    return from_edge_list(n, list(combinations(range(n), 2)))


def wheel_graph(n: int) -> Graph:
    """Wheel of order n: hub 0 joined to the (n-1)-cycle 1..n-1."""
    if n < 4:
        raise ValueError("wheel needs n >= 4")
    rim = [(i, i + 1) for i in range(1, n - 1)] + [(n - 1, 1)]
    spokes = [(0, i) for i in range(1, n)]
    return from_edge_list(n, spokes + rim)


def complete_multipartite_graph(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph; class sizes are sorted descending internally."""
    if len(sizes) < 2:
        raise ValueError("complete multipartite needs r >= 2 classes")
    if any(s < 1 for s in sizes):
        raise ValueError("class sizes must be positive")
    sizes = sorted(sizes, reverse=True)
    n = sum(sizes)
    cls = []
    start = 0
    for s in sizes:
        cls.append(list(range(start, start + s)))
        start += s
    pairs = []
    for i in range(len(cls)):
        for j in range(i + 1, len(cls)):
            pairs.extend((u, v) for u in cls[i] for v in cls[j])
    return from_edge_list(n, pairs)


def random_gnp(n: int, p: float, seed: int) -> Graph:
    """Erdos-Renyi G(n,p): each pair drawn independently, lexicographic order.

    Deterministic for a given (n, p, seed).
    """
    if n < 1:
        raise ValueError("random graph needs n >= 1")
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0,1]")
    rng = random.Random(seed)
    pairs = [e for e in combinations(range(n), 2) if rng.random() < p]
    return from_edge_list(n, pairs)


def generate(kind: str, *params) -> Graph:
    """Dispatch by family name: path, cycle, star, complete, wheel,
    complete_multipartite, random_gnp."""
    kinds = {
        "path": path_graph,
        "cycle": cycle_graph,
        "star": star_graph,
        "complete": complete_graph,
        "wheel": wheel_graph,
    }
    if kind in kinds:
        return kinds[kind](*params)
    if kind == "complete_multipartite":
        return complete_multipartite_graph(params[0] if len(params) == 1 else list(params))
    if kind == "random_gnp":
        return random_gnp(*params)
    raise ValueError(f"unknown graph family: {kind!r}")


def connected_labeled_graphs(n: int) -> Iterator[Graph]:
    """All labeled connected graphs on n vertices, by adjacency-mask order.

    Intended for exhaustive sweeps with n <= 6 (2^15 masks); larger corpora
    should be ingested from external graph6 lists.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    allpairs = list(combinations(range(n), 2))
    npairs = len(allpairs)
    full = (1 << n) - 1
    for mask in range(1 << npairs):
        adj = [0] * n
        for i in range(npairs):
            if (mask >> i) & 1:
                u, v = allpairs[i]
                adj[u] |= 1 << v
                adj[v] |= 1 << u
        # connectivity by bitset spread
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            mm = frontier
            while mm:
                b = mm & -mm
                nxt |= adj[b.bit_length() - 1]
                mm ^= b
            nxt &= ~seen
            seen |= nxt
            frontier = nxt
        if seen != full:
            continue
        edges = tuple(allpairs[i] for i in range(npairs) if (mask >> i) & 1)
        yield Graph(n=n, edges=edges, adj=tuple(adj))
