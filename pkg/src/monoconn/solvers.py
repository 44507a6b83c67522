"""Exact tmc / mc / mvc solvers with optimality certificates.

Correctness contract for the tmc engine
---------------------------------------
Call a family of subtrees of G a *covering tree system* when the trees are
pairwise edge-disjoint, their internal-vertex sets are pairwise disjoint,
every tree has at least two edges, and every non-adjacent vertex pair of G
lies together in some tree.  Its waste is the sum over trees of
(edges - 1 + internal vertices).

(i)  Every covering tree system induces a total coloring with
     m + n - waste colors that total-monochromatically connects G: give each
     tree one color on its edges and internal vertices, everything else a
     fresh color.  Non-adjacent pairs ride the unique within-tree path, whose
     edges and internal vertices all carry the tree color; adjacent pairs use
     their own edge.
(ii) Conversely, in an extremal total-monochromatic coloring every color
     class is a tree whose internal vertices carry the class color, and an
     extremal coloring always exists in which two nontrivial color trees
     share at most one vertex ("simple").  The nontrivial trees of such a
     coloring form a covering tree system of waste m + n - tmc(G).

Hence tmc(G) = m + n - W*, where W* is the minimum waste over covering tree
systems, and by (ii) the minimum is already attained among *simple* systems
(pairwise sharing at most one vertex), which is the space the branch-and-
bound searches.  The same argument without vertex colors gives
mc(G) = m - min over edge-disjoint covering tree families of sum(edges - 1).

The independent oracle tmc_naive maximizes the color count directly over set
partitions of the m + n items and exists to validate this reformulation on
small inputs.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .coloring import (
    EdgeColoring,
    TotalColoring,
    VertexColoring,
    verify_mc,
    verify_mvc,
    verify_tmc,
)
from .graphs import Graph, _bits, diameter, is_connected
from .maxleaf import max_leaf_exact

Edge = tuple[int, int]

DEFAULT_MAX_EXACT_N = 9
MAX_NAIVE_ITEMS = 12
MAX_NAIVE_EDGES = 10
MAX_MVC_ENUM_N = 10


class SolverRangeError(RuntimeError):
    """Raised when an exact solver is asked for a graph beyond its guard."""


def max_exact_n() -> int:
    """Exact-solver size guard; override with MONO_MAX_EXACT_N."""
    env = os.environ.get("MONO_MAX_EXACT_N")
    if env:
        return int(env)
    return DEFAULT_MAX_EXACT_N


@dataclass(frozen=True)
class SystemTree:
    edges: tuple[Edge, ...]
    internal_vertices: tuple[int, ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def internal_count(self) -> int:
        return len(self.internal_vertices)

    @property
    def vertices(self) -> tuple[int, ...]:
        vs = set()
        for u, v in self.edges:
            vs.add(u)
            vs.add(v)
        return tuple(sorted(vs))

    def waste(self) -> int:
        return self.edge_count - 1 + self.internal_count


@dataclass(frozen=True)
class TreeSystem:
    """Edge-disjoint subtrees covering every non-adjacent pair; the solver's
    canonical witness structure.  Total-coloring systems additionally keep
    internal-vertex sets pairwise disjoint (a vertex can carry only one
    color); edge-coloring systems have no such constraint."""

    trees: tuple[SystemTree, ...]

    @property
    def total_waste(self) -> int:
        return sum(t.waste() for t in self.trees)

    @property
    def total_internal(self) -> int:
        return sum(t.internal_count for t in self.trees)

    def validate(self, g: Graph, require_internal_disjoint: bool = True) -> None:
        """Raise ValueError on any violated system invariant."""
        seen_edges: set[Edge] = set()
        seen_internal: set[int] = set()
        for t in self.trees:
            if t.edge_count < 2:
                raise ValueError("system tree with fewer than 2 edges")
            deg: dict[int, int] = {}
            verts: set[int] = set()
            for e in t.edges:
                if e not in g.edges and (e[1], e[0]) not in g.edges:
                    raise ValueError(f"tree edge {e} not in graph")
                if e in seen_edges:
                    raise ValueError(f"edge {e} reused across trees")
                seen_edges.add(e)
                deg[e[0]] = deg.get(e[0], 0) + 1
                deg[e[1]] = deg.get(e[1], 0) + 1
                verts.update(e)
            if len(t.edges) != len(verts) - 1:
                raise ValueError("system tree is not acyclic")
            # connectivity of the tree
            comp = {next(iter(verts))}
            grew = True
            while grew:
                grew = False
                for u, v in t.edges:
                    if (u in comp) != (v in comp):
                        comp.update((u, v))
                        grew = True
            if comp != verts:
                raise ValueError("system tree is not connected")
            internal = {v for v, d in deg.items() if d >= 2}
            if internal != set(t.internal_vertices):
                raise ValueError("internal set does not match tree degrees")
            if require_internal_disjoint:
                if internal & seen_internal:
                    raise ValueError("vertex internal in two trees")
                seen_internal.update(internal)
        covered: set[Edge] = set()
        for t in self.trees:
            vs = t.vertices
            for i in range(len(vs)):
                for j in range(i + 1, len(vs)):
                    covered.add((vs[i], vs[j]))
        for p in g.nonadjacent_pairs():
            if p not in covered:
                raise ValueError(f"non-adjacent pair {p} not covered")


@dataclass
class SolverReport:
    """Invariant value plus its certificate and search statistics."""

    value: int
    witness: TotalColoring | EdgeColoring | VertexColoring
    nodes_explored: int
    method: str  # "tree_system" | "naive_partition" | "shortcut"
    bounds_used: dict[str, int] = field(default_factory=dict)
    witness_system: TreeSystem | None = None


# ---------------------------------------------------------------------------
# Useful-subtree enumeration
# ---------------------------------------------------------------------------

def _useful_subtrees(
    g: Graph, pair_bits: Sequence[int], cap: int, count_internal: bool
) -> list[tuple[int, int, int, int, int]]:
    """All subtrees with >= 2 edges, waste <= cap, containing a non-adjacent
    pair, as (waste, emask, imask, vmask, cover) tuples.

    Waste is edges-1+internals when ``count_internal`` else edges-1.  Trees
    are enumerated once each: roots are minimum tree vertices, and at every
    expansion step taking the i-th frontier edge permanently bans the earlier
    ones (each target tree forces the minimum-index frontier choice, so it is
    generated along exactly one branch).
    """
    n = g.n
    edges = g.edges
    incident: list[list[int]] = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    out: list[tuple[int, int, int, int, int]] = []
    cover_cache: dict[int, int] = {}

    def cover_of(vmask: int) -> int:
        c = cover_cache.get(vmask)
        if c is None:
            c = 0
            for j, pb in enumerate(pair_bits):
                if vmask & pb == pb:
                    c |= 1 << j
            cover_cache[vmask] = c
        return c

    deg = [0] * n

    def grow(r: int, vmask: int, emask: int, nedge: int, ninternal: int, banned: int) -> None:
        if nedge >= 2:
            waste = nedge - 1 + (ninternal if count_internal else 0)
            cov = cover_of(vmask)
            if cov and waste <= cap:
                imask = 0
                if count_internal:
                    for v in _bits(vmask):
                        if deg[v] >= 2:
                            imask |= 1 << v
                out.append((waste, emask, imask, vmask, cov))
        # frontier: non-banned edges leaving vmask toward vertices >= r
        frontier: list[tuple[int, int, int]] = []
        mm = vmask
        while mm:
            b = mm & -mm
            u = b.bit_length() - 1
            mm ^= b
            for i in incident[u]:
                if (banned >> i) & 1 or (emask >> i) & 1:
                    continue
                a, c = edges[i]
                x = c if a == u else a
                if x >= r and not (vmask >> x) & 1:
                    frontier.append((i, u, x))
        frontier.sort()
        newly_banned = banned
        for i, u, x in frontier:
            # waste after adding: edges+1-1 (+ internals), monotone in growth
            ni = ninternal + (1 if deg[u] == 1 else 0)
            w_next = nedge + (ni if count_internal else 0)
            if w_next <= cap:
                deg[u] += 1
                deg[x] += 1
                grow(r, vmask | (1 << x), emask | (1 << i), nedge + 1, ni, newly_banned)
                deg[u] -= 1
                deg[x] -= 1
            newly_banned |= 1 << i

    for r in range(n):
        grow(r, 1 << r, 0, 0, 0, 0)
    out.sort()
    return out


def _count_lb_table(npairs: int, offset: int) -> list[int]:
    """need[u] = least total waste whose trees can cover u pairs
    (one tree of waste w spans at most w+offset vertices)."""
    need = [0] * (npairs + 1)
    for u in range(1, npairs + 1):
        b = 1
        while (b + offset) * (b + offset - 1) // 2 < u:
            b += 1
        need[u] = b
    return need


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _solve_cover(
    cands: list[tuple[int, int, int, int, int]],
    npairs: int,
    ub_waste: int,
    use_internal_disjoint: bool,
    use_simple: bool,
    count_offset: int,
) -> tuple[int, list[int] | None, int]:
    """Branch-and-bound minimum-waste cover.

    Returns (best_waste, chosen candidate indices or None when nothing beat
    the incumbent upper bound, nodes explored).
    """
    allp = (1 << npairs) - 1
    by_pair: list[list[int]] = [[] for _ in range(npairs)]
    for ci, (_, _, _, _, cov) in enumerate(cands):
        cc = cov
        while cc:
            b = cc & -cc
            by_pair[b.bit_length() - 1].append(ci)
            cc ^= b
    min_w = [
        (cands[lst[0]][0] if lst else None) for lst in by_pair
    ]
    if any(w is None for w in min_w):
        # some pair cannot be covered within the cap: incumbent is optimal
        return ub_waste, None, 0
    need = _count_lb_table(npairs, count_offset)
    best = ub_waste
    best_pick: list[int] | None = None
    nodes = 0

    def bb(covered: int, used_e: int, used_i: int, waste: int, vsets: list[int], pick: list[int]) -> None:
        nonlocal best, best_pick, nodes
        nodes += 1
        unc = allp & ~covered
        if not unc:
            if waste < best:
                best = waste
                best_pick = pick.copy()
            return
        lb = need[_popcount(unc)]
        cc = unc
        while cc:
            b = cc & -cc
            w = min_w[b.bit_length() - 1]
            if w > lb:
                lb = w
            cc ^= b
        if waste + lb >= best:
            return
        j = (unc & -unc).bit_length() - 1
        for ci in by_pair[j]:
            w, em, im, vm, cov = cands[ci]
            if waste + w >= best:
                break
            if em & used_e:
                continue
            if use_internal_disjoint and (im & used_i):
                continue
            if use_simple and any(_popcount(vm & pv) >= 2 for pv in vsets):
                continue
            vsets.append(vm)
            pick.append(ci)
            bb(covered | cov, used_e | em, used_i | im, waste + w, vsets, pick)
            pick.pop()
            vsets.pop()

    bb(0, 0, 0, 0, [], [])
    return best, best_pick, nodes


def _bfs_spanning_tree(g: Graph) -> list[Edge]:
    seen = 1
    frontier = [0]
    tree: list[Edge] = []
    while frontier:
        nxt = []
        for u in frontier:
            for v in _bits(g.adj[u] & ~seen):
                seen |= 1 << v
                tree.append((u, v) if u < v else (v, u))
                nxt.append(v)
        frontier = nxt
    return tree


def _system_tree_from_edges(edges: Sequence[Edge]) -> SystemTree:
    deg: dict[int, int] = {}
    for u, v in edges:
        deg[u] = deg.get(u, 0) + 1
        deg[v] = deg.get(v, 0) + 1
    internal = tuple(sorted(v for v, d in deg.items() if d >= 2))
    return SystemTree(edges=tuple(sorted(edges)), internal_vertices=internal)


def _coloring_from_system(g: Graph, system: TreeSystem) -> TotalColoring:
    """Tree i -> color i on its edges and internal vertices; fresh colors for
    all remaining vertices (ascending) then remaining edges (lex)."""
    vcol = [-1] * g.n
    ecol: dict[Edge, int] = {}
    for i, t in enumerate(system.trees):
        for e in t.edges:
            ecol[e] = i
        for v in t.internal_vertices:
            vcol[v] = i
    nxt = len(system.trees)
    for v in range(g.n):
        if vcol[v] < 0:
            vcol[v] = nxt
            nxt += 1
    for e in g.edges:
        if e not in ecol:
            ecol[e] = nxt
            nxt += 1
    return TotalColoring(vertex_color=tuple(vcol), edge_color=ecol)


def _edge_coloring_from_trees(g: Graph, trees: Sequence[SystemTree]) -> EdgeColoring:
    ecol: dict[Edge, int] = {}
    for i, t in enumerate(trees):
        for e in t.edges:
            ecol[e] = i
    nxt = len(trees)
    for e in g.edges:
        if e not in ecol:
            ecol[e] = nxt
            nxt += 1
    return EdgeColoring(edge_color=ecol)


def _guard_exact(g: Graph, solver: str) -> None:
    limit = max_exact_n()
    if g.n > limit:
        raise SolverRangeError(
            f"exact solver out of range: {solver} accepts n <= {limit} "
            f"(override with MONO_MAX_EXACT_N), got n = {g.n}"
        )


def tmc_exact(g: Graph) -> SolverReport:
    """Total monochromatic connection number with witness coloring.

    Minimum-waste search over simple covering tree systems, seeded with the
    single maximum-leaf spanning tree (waste n - 2 + q(G), the generic lower
    bound m - n + 2 + l(G) on the value).
    """
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.is_complete():
        return SolverReport(
            value=g.m + g.n,
            witness=_coloring_from_system(g, TreeSystem(trees=())),
            nodes_explored=0,
            method="shortcut",
            bounds_used={"value_lower": g.m + g.n, "value_upper": g.m + g.n},
            witness_system=TreeSystem(trees=()),
        )
    _guard_exact(g, "tmc_exact")
    ml = max_leaf_exact(g)
    q = ml.internal_count
    ub0 = g.n - 2 + q  # waste of the spanning-tree incumbent
    pairs = g.nonadjacent_pairs()
    pair_bits = [(1 << u) | (1 << v) for u, v in pairs]
    cands = _useful_subtrees(g, pair_bits, cap=ub0 - 1, count_internal=True)
    best, pick, nodes = _solve_cover(
        cands, len(pairs), ub0,
        use_internal_disjoint=True, use_simple=True, count_offset=1,
    )
    if pick is None:
        system = TreeSystem(trees=(_system_tree_from_edges(ml.tree),))
    else:
        trees = []
        for ci in pick:
            _, emask, _, _, _ = cands[ci]
            trees.append(_system_tree_from_edges([g.edges[i] for i in _bits(emask)]))
        system = TreeSystem(trees=tuple(sorted(trees, key=lambda t: t.edges)))
    value = g.m + g.n - best
    report = SolverReport(
        value=value,
        witness=_coloring_from_system(g, system),
        nodes_explored=nodes,
        method="tree_system",
        bounds_used={"value_lower": g.m - g.n + 2 + ml.leaf_count, "value_upper": g.m + g.n},
        witness_system=system,
    )
    return report


def mc_exact(g: Graph) -> SolverReport:
    """Monochromatic connection number (edge colorings) with witness.

    Same covering search without vertex bookkeeping: trees only need to be
    edge-disjoint and waste counts edges - 1 per tree.
    """
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.is_complete():
        ec = EdgeColoring(edge_color={e: i for i, e in enumerate(g.edges)})
        return SolverReport(
            value=g.m,
            witness=ec,
            nodes_explored=0,
            method="shortcut",
            bounds_used={"value_lower": g.m, "value_upper": g.m},
        )
    _guard_exact(g, "mc_exact")
    span = _bfs_spanning_tree(g)
    ub0 = g.n - 2
    pairs = g.nonadjacent_pairs()
    pair_bits = [(1 << u) | (1 << v) for u, v in pairs]
    cands = _useful_subtrees(g, pair_bits, cap=ub0 - 1, count_internal=False)
    best, pick, nodes = _solve_cover(
        cands, len(pairs), ub0,
        use_internal_disjoint=False, use_simple=False, count_offset=2,
    )
    if pick is None:
        trees = [_system_tree_from_edges(span)]
    else:
        trees = []
        for ci in pick:
            _, emask, _, _, _ = cands[ci]
            trees.append(_system_tree_from_edges([g.edges[i] for i in _bits(emask)]))
        trees.sort(key=lambda t: t.edges)
    value = g.m - best
    return SolverReport(
        value=value,
        witness=_edge_coloring_from_trees(g, trees),
        nodes_explored=nodes,
        method="tree_system",
        bounds_used={"value_lower": g.m - g.n + 2, "value_upper": g.m},
        witness_system=TreeSystem(trees=tuple(trees)),
    )


# ---------------------------------------------------------------------------
# Naive partition oracles (restricted-growth-string enumeration)
# ---------------------------------------------------------------------------

def _rgs_with_block_count(k: int, blocks: int) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length k using exactly ``blocks`` values."""
    if blocks < 1 or blocks > k:
        return
    a = [0] * k

    def rec(i: int, mx: int) -> Iterator[tuple[int, ...]]:
        if i == k:
            if mx + 1 == blocks:
                yield tuple(a)
            return
        if mx + 1 + (k - i) < blocks:  # cannot open enough new blocks
            return
        hi = min(mx + 1, blocks - 1)
        for v in range(hi + 1):
            a[i] = v
            yield from rec(i + 1, mx if v <= mx else v)

    yield from rec(0, -1)


def _fast_tmc_ok(n: int, adj: Sequence[int], edges: Sequence[Edge],
                 pair_bits: Sequence[int], vcol: Sequence[int], ecol: Sequence[int]) -> bool:
    """Lean total-monochromatic check used by the partition oracle."""
    unc = (1 << len(pair_bits)) - 1
    if not unc:
        return True
    for c in set(ecol):
        tmask = 0
        for v in range(n):
            if vcol[v] == c:
                tmask |= 1 << v
        # grow color components: start from each colored-c edge
        comps: list[int] = []
        for (u, v), cc in zip(edges, ecol):
            if cc != c:
                continue
            em = (1 << u) | (1 << v)
            merged = em
            keep = []
            for comp in comps:
                if comp & merged & tmask:
                    merged |= comp
                else:
                    keep.append(comp)
            keep.append(merged)
            comps = keep
        # two passes are enough only if merge order cooperates; iterate to fix
        changed = True
        while changed:
            changed = False
            out: list[int] = []
            for comp in comps:
                placed = False
                for i, other in enumerate(out):
                    if comp & other & tmask:
                        out[i] |= comp
                        placed = True
                        changed = True
                        break
                if not placed:
                    out.append(comp)
            comps = out
        for comp in comps:
            for j, pb in enumerate(pair_bits):
                if (unc >> j) & 1 and comp & pb == pb:
                    unc &= ~(1 << j)
        if not unc:
            return True
    return False


def tmc_naive(g: Graph) -> SolverReport:
    """Definition-level tmc: maximize block count over partitions of the
    m + n items, checking each candidate for total monochromatic
    connectivity.  Guarded to m + n <= 12."""
    if not is_connected(g):
        raise ValueError("disconnected")
    items = g.m + g.n
    if items > MAX_NAIVE_ITEMS:
        raise SolverRangeError(
            f"tmc_naive accepts m + n <= {MAX_NAIVE_ITEMS}, got {items}"
        )
    pairs = g.nonadjacent_pairs()
    pair_bits = [(1 << u) | (1 << v) for u, v in pairs]
    nodes = 0
    for blocks in range(items, 0, -1):
        for rgs in _rgs_with_block_count(items, blocks):
            nodes += 1
            vcol = rgs[: g.n]
            ecol = rgs[g.n:]
            if _fast_tmc_ok(g.n, g.adj, g.edges, pair_bits, vcol, ecol):
                witness = TotalColoring(
                    vertex_color=tuple(vcol),
                    edge_color=dict(zip(g.edges, ecol)),
                )
                return SolverReport(
                    value=blocks,
                    witness=witness,
                    nodes_explored=nodes,
                    method="naive_partition",
                    bounds_used={"value_upper": items},
                )
    raise AssertionError("single-block coloring must verify")  # pragma: no cover


def _fast_mc_ok(edges: Sequence[Edge], pair_bits: Sequence[int], ecol: Sequence[int]) -> bool:
    unc = (1 << len(pair_bits)) - 1
    if not unc:
        return True
    for c in set(ecol):
        comps: list[int] = []
        for (u, v), cc in zip(edges, ecol):
            if cc != c:
                continue
            merged = (1 << u) | (1 << v)
            keep = []
            for comp in comps:
                if comp & merged:
                    merged |= comp
                else:
                    keep.append(comp)
            keep.append(merged)
            comps = keep
        for comp in comps:
            for j, pb in enumerate(pair_bits):
                if (unc >> j) & 1 and comp & pb == pb:
                    unc &= ~(1 << j)
        if not unc:
            return True
    return False


def mc_naive(g: Graph) -> SolverReport:
    """Definition-level mc over edge-set partitions; guarded to m <= 10."""
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.m > MAX_NAIVE_EDGES:
        raise SolverRangeError(f"mc_naive accepts m <= {MAX_NAIVE_EDGES}, got {g.m}")
    if g.m == 0:
        return SolverReport(
            value=0,
            witness=EdgeColoring(edge_color={}),
            nodes_explored=0,
            method="naive_partition",
        )
    pairs = g.nonadjacent_pairs()
    pair_bits = [(1 << u) | (1 << v) for u, v in pairs]
    nodes = 0
    for blocks in range(g.m, 0, -1):
        for rgs in _rgs_with_block_count(g.m, blocks):
            nodes += 1
            if _fast_mc_ok(g.edges, pair_bits, rgs):
                return SolverReport(
                    value=blocks,
                    witness=EdgeColoring(edge_color=dict(zip(g.edges, rgs))),
                    nodes_explored=nodes,
                    method="naive_partition",
                    bounds_used={"value_upper": g.m},
                )
    raise AssertionError("single-color edge coloring must verify")  # pragma: no cover


def _fast_mvc_ok(n: int, adj: Sequence[int], pair_bits: Sequence[int], vcol: Sequence[int]) -> bool:
    unc = (1 << len(pair_bits)) - 1
    if not unc:
        return True
    for c in set(vcol):
        cmask = 0
        for v in range(n):
            if vcol[v] == c:
                cmask |= 1 << v
        todo = cmask
        while todo:
            start = todo & -todo
            comp = start
            frontier = comp
            while frontier:
                nxt = 0
                mm = frontier
                while mm:
                    b = mm & -mm
                    nxt |= adj[b.bit_length() - 1]
                    mm ^= b
                nxt &= cmask & ~comp
                comp |= nxt
                frontier = nxt
            todo &= ~comp
            closed = comp
            mm = comp
            while mm:
                b = mm & -mm
                closed |= adj[b.bit_length() - 1]
                mm ^= b
            for j, pb in enumerate(pair_bits):
                if (unc >> j) & 1 and closed & pb == pb:
                    unc &= ~(1 << j)
            if not unc:
                return True
    return False


def mvc_exact(g: Graph) -> SolverReport:
    """Monochromatic vertex connection number.

    Diameter <= 2 gives mvc = n outright.  Otherwise vertex partitions are
    enumerated as restricted growth strings by decreasing block count,
    starting from the upper bound n - d + 2.
    """
    if not is_connected(g):
        raise ValueError("disconnected")
    d = diameter(g)
    if d <= 2:
        return SolverReport(
            value=g.n,
            witness=VertexColoring(vertex_color=tuple(range(g.n))),
            nodes_explored=0,
            method="shortcut",
            bounds_used={"value_upper": g.n},
        )
    if g.n > MAX_MVC_ENUM_N:
        raise SolverRangeError(
            f"mvc_exact enumerative path accepts n <= {MAX_MVC_ENUM_N}, got {g.n}"
        )
    pairs = g.nonadjacent_pairs()
    pair_bits = [(1 << u) | (1 << v) for u, v in pairs]
    nodes = 0
    for blocks in range(min(g.n - d + 2, g.n), 0, -1):
        for rgs in _rgs_with_block_count(g.n, blocks):
            nodes += 1
            if _fast_mvc_ok(g.n, g.adj, pair_bits, rgs):
                return SolverReport(
                    value=blocks,
                    witness=VertexColoring(vertex_color=rgs),
                    nodes_explored=nodes,
                    method="naive_partition",
                    bounds_used={"value_upper": g.n - d + 2},
                )
    raise AssertionError("single-color vertex coloring must verify")  # pragma: no cover


def bounds(g: Graph, mc: int | None = None, mvc: int | None = None) -> dict[str, int | None]:
    """Named bounds: tmc_lower m-n+2+l, tmc_upper (m+n for complete, else
    mc + l when mc is supplied), mvc bounds l+1 and n-d+2, and the sum bound
    mc + mvc when both are supplied."""
    if not is_connected(g):
        raise ValueError("disconnected")
    if g.n == 1:
        return {
            "tmc_lower": 1, "tmc_upper": 1,
            "mvc_lower": 1, "mvc_upper": 1,
            "sum_bound": None,
        }
    ml = max_leaf_exact(g)
    l = ml.leaf_count
    d = diameter(g)
    tmc_upper: int | None
    if g.is_complete():
        tmc_upper = g.m + g.n
    elif mc is not None:
        tmc_upper = mc + l
    else:
        tmc_upper = None
    return {
        "tmc_lower": g.m - g.n + 2 + l,
        "tmc_upper": tmc_upper,
        "mvc_lower": l + 1,
        "mvc_upper": g.n - d + 2,
        "sum_bound": (mc + mvc) if (mc is not None and mvc is not None) else None,
    }


def witness_color_count(report: SolverReport) -> int:
    return report.witness.color_count


def reverify(g: Graph, report: SolverReport) -> bool:
    """Re-run the matching verifier on a report's witness and check that the
    witness uses exactly ``value`` colors."""
    w = report.witness
    if isinstance(w, TotalColoring):
        ok, _ = verify_tmc(g, w)
    elif isinstance(w, EdgeColoring):
        ok, _ = verify_mc(g, w)
    else:
        ok, _ = verify_mvc(g, w)
    return ok and w.color_count == report.value
