"""Independent test oracles.

Everything here recomputes results by a route different from the library
implementation it checks: spanning trees by edge-subset enumeration instead
of dominating-set search, path existence by explicit DFS instead of
component closure, connectivity thresholds by vertex-cut enumeration instead
of max-flow.
"""

from __future__ import annotations

from itertools import combinations

from monoconn.graphs import Graph, from_edge_list


def spanning_trees(g: Graph):
    """Yield every spanning tree as an edge tuple (edge-subset enumeration)."""
    n, m = g.n, g.m
    if n == 1:
        yield ()
        return
    for subset in combinations(range(m), n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i in subset:
            u, v = g.edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        if ok:
            yield tuple(g.edges[i] for i in subset)


def leaf_count(n: int, tree_edges) -> int:
    deg = [0] * n
    for u, v in tree_edges:
        deg[u] += 1
        deg[v] += 1
    return sum(1 for d in deg if d == 1)


def max_leaves_oracle(g: Graph) -> int:
    """l(G) by exhaustive spanning-tree enumeration."""
    return max(leaf_count(g.n, t) for t in spanning_trees(g))


def min_internal_oracle(g: Graph) -> int:
    """q(G) by the same enumeration."""
    return min(g.n - leaf_count(g.n, t) for t in spanning_trees(g))


# ---------------------------------------------------------------------------
# Path-existence checks straight from the definitions (DFS over simple paths)
# ---------------------------------------------------------------------------

def _simple_paths(g: Graph, u: int, v: int):
    stack = [(u, [u])]
    while stack:
        x, path = stack.pop()
        if x == v:
            yield path
            continue
        for y in g.neighbors(x):
            if y not in path:
                stack.append((y, path + [y]))


def tm_path_exists(g: Graph, vcol, ecol, u: int, v: int) -> bool:
    """Total monochromatic u-v path by brute-force path search."""
    for path in _simple_paths(g, u, v):
        if len(path) == 2:
            return True
        edge_colors = {
            ecol[(a, b) if a < b else (b, a)]
            for a, b in zip(path, path[1:])
        }
        inner_colors = {vcol[x] for x in path[1:-1]}
        if len(edge_colors | inner_colors) == 1:
            return True
    return False


def mono_edge_path_exists(g: Graph, ecol, u: int, v: int) -> bool:
    for path in _simple_paths(g, u, v):
        colors = {
            ecol[(a, b) if a < b else (b, a)]
            for a, b in zip(path, path[1:])
        }
        if len(colors) == 1:
            return True
    return False


def mono_vertex_path_exists(g: Graph, vcol, u: int, v: int) -> bool:
    for path in _simple_paths(g, u, v):
        if len(path) <= 3:
            return True
        if len({vcol[x] for x in path[1:-1]}) == 1:
            return True
    return False


def all_partitions(items: int):
    """Every restricted growth string over ``items`` positions."""
    a = [0] * items

    def rec(i: int, mx: int):
        if i == items:
            yield tuple(a)
            return
        for v in range(mx + 2):
            a[i] = v
            yield from rec(i + 1, max(mx, v))

    yield from rec(0, -1)


def mvc_brute(g: Graph) -> int:
    """mvc by full partition enumeration plus DFS path checks."""
    pairs = g.nonadjacent_pairs()
    best = 0
    for vcol in all_partitions(g.n):
        blocks = len(set(vcol))
        if blocks <= best:
            continue
        if all(mono_vertex_path_exists(g, vcol, u, v) for u, v in pairs):
            best = blocks
    return best


def k_connected_bf(g: Graph, k: int) -> bool:
    """kappa(G) >= k by enumerating all vertex cuts of size < k."""
    from monoconn.graphs import is_connected

    if g.n <= k:
        return False
    if not is_connected(g):
        return k == 0
    for size in range(1, k):
        for cut in combinations(range(g.n), size):
            keep = [v for v in range(g.n) if v not in cut]
            relabel = {v: i for i, v in enumerate(keep)}
            edges = [
                (relabel[u], relabel[v])
                for u, v in g.edges
                if u in relabel and v in relabel
            ]
            sub = from_edge_list(len(keep), edges)
            if not is_connected(sub):
                return False
    return True


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)
