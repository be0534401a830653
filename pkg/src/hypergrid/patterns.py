"""Forbidden patterns and the subhypergraph containment search.

"Contains a copy" always means subhypergraph containment: an injective map
of pattern vertices into host vertices under which every pattern edge lands
exactly on a host edge.  Patterns may carry part/order constraints (used by
the positive strong simplex); those are only matchable against hosts whose
vertex labels are (part, value) pairs, e.g. hosts built by
:func:`hypergrid.core.parts_host`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .core import Edge, Hypergraph, make_hypergraph

NO_COPY = "no-copy"
FOUND = "found"
BUDGET_EXHAUSTED = "budget-exhausted"


@dataclass(frozen=True)
class Pattern:
    """A small hypergraph up to isomorphism, with optional side constraints.

    ``parts`` assigns a 1-based part index to each pattern vertex; a host
    vertex is eligible only if the first entry of its label equals that part.
    ``order`` lists (lo, hi) vertex pairs whose host images must satisfy
    value(hi) > value(lo), values being the second label entry.
    """

    uniformity: int
    num_vertices: int
    edges: tuple[Edge, ...]
    name: str = ""
    parts: tuple[int, ...] | None = None
    order: tuple[tuple[int, int], ...] = ()

    @property
    def constrained(self) -> bool:
        return self.parts is not None or bool(self.order)

    def to_hypergraph(self) -> Hypergraph:
        return Hypergraph(self.uniformity, self.num_vertices, self.edges)


@dataclass(frozen=True)
class Witness:
    """A verified embedding: pattern vertex -> host vertex, plus host edges.

    ``matched_edges`` is aligned with the pattern's edge list: entry i is the
    host edge that pattern edge i maps onto.
    """

    vertex_map: dict[int, int] = field(hash=False)
    matched_edges: tuple[Edge, ...] = ()


@dataclass(frozen=True)
class SearchOutcome:
    status: str  # NO_COPY | FOUND | BUDGET_EXHAUSTED
    witness: Witness | None
    nodes: int


def _pattern(uniformity, edges, name, parts=None, order=()) -> Pattern:
    canon = tuple(sorted(tuple(sorted(e)) for e in edges))
    nv = max((v for e in canon for v in e), default=-1) + 1
    return Pattern(uniformity, nv, canon, name, parts, tuple(order))


def complete_pattern(t: int, k: int) -> Pattern:
    """Complete k-uniform pattern on t vertices (all C(t,k) edges)."""
    if t < k:
        raise ValueError(f"complete pattern needs t >= k, got t={t}, k={k}")
    return _pattern(k, combinations(range(t), k), f"complete:{t}:{k}")


def k4_minus() -> Pattern:
    """The complete 3-uniform pattern on 4 vertices with one edge removed."""
    return _pattern(3, [(0, 1, 2), (0, 1, 3), (0, 2, 3)], "k4minus")


def tk_pattern(k: int) -> Pattern:
    """k+1 edges: k of them through a common (k-1)-set, one through the k tips.

    Vertices 0..k-2 are the shared set, k-1..2k-2 the tips; the tip edge is
    forced to be exactly the tip set, so the pattern has 2k-1 vertices.
    """
    if k < 2:
        raise ValueError(f"tk pattern needs k >= 2, got {k}")
    shared = tuple(range(k - 1))
    tips = tuple(range(k - 1, 2 * k - 1))
    edges = [shared + (tip,) for tip in tips]
    edges.append(tips)
    return _pattern(k, edges, f"tk:{k}")


def tight_path(s: int) -> Pattern:
    """3-uniform tight path with s edges on s+2 vertices."""
    if s < 1:
        raise ValueError(f"tight path needs s >= 1, got {s}")
    return _pattern(3, [(i, i + 1, i + 2) for i in range(s)], f"path:{s}")


def positive_simplex_pattern(k: int) -> Pattern:
    """Strong k-simplex with part membership and swapped-in > swapped-out.

    Vertex 2i is v_{i+1} and vertex 2i+1 is v'_{i+1}; both sit in part i+1
    and the order constraints require v'_{i+1} > v_{i+1}.  Dropping the
    constraints leaves the plain strong k-simplex.
    """
    if k < 2:
        raise ValueError(f"positive simplex needs k >= 2, got {k}")
    base = tuple(2 * i for i in range(k))
    edges = [base]
    for i in range(k):
        edges.append(tuple(sorted(base[:i] + base[i + 1 :] + (2 * i + 1,))))
    parts = tuple(i // 2 + 1 for i in range(2 * k))
    order = tuple((2 * i, 2 * i + 1) for i in range(k))
    return _pattern(k, edges, f"splus:{k}", parts=parts, order=order)


def strong_simplex_pattern(k: int) -> Pattern:
    """The unconstrained strong k-simplex (positive pattern minus constraints)."""
    p = positive_simplex_pattern(k)
    return Pattern(p.uniformity, p.num_vertices, p.edges, f"simplex:{k}")


def f5_pattern() -> Pattern:
    """Catalog entry: edges abc, abd, cde (no claims are attached to it)."""
    return _pattern(3, [(0, 1, 2), (0, 1, 3), (2, 3, 4)], "f5")


def c3_pattern() -> Pattern:
    """Catalog entry: edges abc, cde, efa (no claims are attached to it)."""
    return _pattern(3, [(0, 1, 2), (2, 3, 4), (4, 5, 0)], "c3")


# ---------------------------------------------------------------------------
# sunflowers and the covered-edge family


@dataclass(frozen=True)
class SunflowerResult:
    is_sunflower: bool
    core: frozenset = frozenset()
    petals: tuple[frozenset, ...] = ()
    violating_pair: tuple[int, int] | None = None


def is_sunflower(sets) -> SunflowerResult:
    """Decide whether the given sets share a common core with disjoint petals.

    Returns the core and petals, or the indices of the first offending pair
    (a pair whose intersection differs from the global core).
    """
    family = [frozenset(s) for s in sets]
    if len(family) < 2:
        raise ValueError("a sunflower needs at least 2 sets")
    core = frozenset.intersection(*family)
    for i, j in combinations(range(len(family)), 2):
        if family[i] & family[j] != core:
            return SunflowerResult(False, violating_pair=(i, j))
    return SunflowerResult(True, core=core, petals=tuple(s - core for s in family))


def matches_f_family(four_triples) -> bool:
    """True iff one of the four 3-sets is contained in the union of the others."""
    family = [frozenset(t) for t in four_triples]
    if len(family) != 4 or any(len(s) != 3 for s in family):
        raise ValueError("expected exactly four 3-sets")
    for i in range(4):
        union = frozenset().union(*(family[j] for j in range(4) if j != i))
        if family[i] <= union:
            return True
    return False


def find_sunflower(h: Hypergraph, size: int = 4, budget: int | None = None) -> SearchOutcome:
    """Search the edge list for ``size`` edges forming a sunflower.

    The witness maps nothing; its matched_edges are the sunflower edges.
    Nodes count the candidate edge subsets examined.
    """
    nodes = 0
    for subset in combinations(h.edges, size):
        nodes += 1
        if budget is not None and nodes > budget:
            return SearchOutcome(BUDGET_EXHAUSTED, None, nodes - 1)
        if is_sunflower(subset).is_sunflower:
            return SearchOutcome(FOUND, Witness({}, subset), nodes)
    return SearchOutcome(NO_COPY, None, nodes)


# ---------------------------------------------------------------------------
# containment search


class _BudgetExceeded(Exception):
    pass


def _match_order(pattern: Pattern) -> list[int]:
    """Pattern edge order: most-connected first, then maximal overlap."""
    deg: dict[int, int] = {}
    for e in pattern.edges:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    remaining = list(range(len(pattern.edges)))
    remaining.sort(key=lambda i: (-sum(deg[v] for v in pattern.edges[i]), i))
    order = [remaining.pop(0)]
    covered = set(pattern.edges[order[0]])
    while remaining:
        remaining.sort(
            key=lambda i: (
                -len(covered.intersection(pattern.edges[i])),
                -sum(deg[v] for v in pattern.edges[i]),
                i,
            )
        )
        nxt = remaining.pop(0)
        order.append(nxt)
        covered.update(pattern.edges[nxt])
    return order


def contains_pattern(
    host: Hypergraph, pattern: Pattern, budget: int | None = None
) -> SearchOutcome:
    """Search ``host`` for a copy of ``pattern``.

    Exhaustive when ``budget`` is None: a NO_COPY answer is then a proof.
    With a budget, the search stops after that many node expansions and
    reports BUDGET_EXHAUSTED instead.
    """
    if host.uniformity != pattern.uniformity:
        raise ValueError(
            f"uniformity mismatch: host {host.uniformity}, pattern {pattern.uniformity}"
        )
    if pattern.constrained and host.labels is None:
        raise ValueError("constrained patterns need a host with (part, value) labels")

    edge_sets = [frozenset(e) for e in host.edges]
    incidence: dict[int, set[int]] = {}
    for idx, e in enumerate(host.edges):
        for v in e:
            incidence.setdefault(v, set()).add(idx)
    host_deg = {v: len(s) for v, s in incidence.items()}

    pdeg: dict[int, int] = {v: 0 for v in range(pattern.num_vertices)}
    for e in pattern.edges:
        for v in e:
            pdeg[v] += 1

    order = _match_order(pattern)
    order_pairs = list(pattern.order)
    parts = pattern.parts
    labels = host.labels

    vmap: dict[int, int] = {}
    used: set[int] = set()
    nodes = 0

    def vertex_ok(pv: int, hv: int) -> bool:
        if host_deg.get(hv, 0) < pdeg[pv]:
            return False
        if parts is not None and labels[hv][0] != parts[pv]:
            return False
        for lo, hi in order_pairs:
            if pv == lo and hi in vmap and not labels[vmap[hi]][1] > labels[hv][1]:
                return False
            if pv == hi and lo in vmap and not labels[hv][1] > labels[vmap[lo]][1]:
                return False
        return True

    def place_isolated() -> Witness | None:
        # pattern vertices in no edge: map to smallest unused eligible hosts
        leftover = [v for v in range(pattern.num_vertices) if v not in vmap]
        extra: dict[int, int] = {}
        for pv in leftover:
            placed = False
            for hv in range(host.num_vertices):
                if hv in used or hv in extra.values():
                    continue
                if vertex_ok(pv, hv):
                    extra[pv] = hv
                    placed = True
                    break
            if not placed:
                return None
        full = dict(vmap)
        full.update(extra)
        matched = tuple(
            tuple(sorted(full[v] for v in pattern.edges[i]))
            for i in range(len(pattern.edges))
        )
        return Witness(full, matched)

    def extend(step: int) -> Witness | None:
        nonlocal nodes
        if step == len(order):
            return place_isolated()
        pe = pattern.edges[order[step]]
        mapped = [v for v in pe if v in vmap]
        unmapped = [v for v in pe if v not in vmap]
        if mapped:
            candidates = set.intersection(*(incidence[vmap[v]] for v in mapped))
        else:
            candidates = set(range(len(edge_sets)))
        for idx in sorted(candidates):
            rest = edge_sets[idx] - {vmap[v] for v in mapped}
            if len(rest) != len(unmapped):
                continue
            if rest & used != {vmap[v] for v in mapped} & rest:
                # some remaining host vertex already belongs to another
                # pattern vertex: injectivity fails for every assignment
                if rest & used:
                    continue
            for assignment in permutations(sorted(rest)):
                nodes += 1
                if budget is not None and nodes > budget:
                    raise _BudgetExceeded
                ok = True
                placed = []
                for pv, hv in zip(unmapped, assignment):
                    if not vertex_ok(pv, hv):
                        ok = False
                        break
                    vmap[pv] = hv
                    used.add(hv)
                    placed.append(pv)
                if ok:
                    result = extend(step + 1)
                    if result is not None:
                        return result
                for pv in placed:
                    used.discard(vmap[pv])
                    del vmap[pv]
        return None

    try:
        witness = extend(0)
    except _BudgetExceeded:
        return SearchOutcome(BUDGET_EXHAUSTED, None, nodes)
    if witness is None:
        return SearchOutcome(NO_COPY, None, nodes)
    return SearchOutcome(FOUND, witness, nodes)


def witness_is_valid(host: Hypergraph, pattern: Pattern, witness: Witness) -> bool:
    """Re-validate a witness from first principles (used on every counterexample)."""
    vm = witness.vertex_map
    if len(set(vm.values())) != len(vm) or len(vm) != pattern.num_vertices:
        return False
    if any(not 0 <= hv < host.num_vertices for hv in vm.values()):
        return False
    host_edges = set(host.edges)
    if len(witness.matched_edges) != len(pattern.edges):
        return False
    for pe, he in zip(pattern.edges, witness.matched_edges):
        if tuple(sorted(vm[v] for v in pe)) != tuple(he):
            return False
        if tuple(he) not in host_edges:
            return False
    if pattern.parts is not None:
        if host.labels is None:
            return False
        for pv, part in enumerate(pattern.parts):
            if host.labels[vm[pv]][0] != part:
                return False
    for lo, hi in pattern.order:
        if host.labels is None or not host.labels[vm[hi]][1] > host.labels[vm[lo]][1]:
            return False
    return True


def is_isomorphic(h: Hypergraph, pattern: Pattern) -> bool:
    """Exact isomorphism of a small hypergraph with a pattern.

    Cheap necessary checks first, then containment; containment with equal
    edge and vertex counts pins down a bijection.
    """
    if h.uniformity != pattern.uniformity or len(h.edges) != len(pattern.edges):
        return False
    h_support = {v for e in h.edges for v in e}
    p_support = {v for e in pattern.edges for v in e}
    if len(h_support) != len(p_support):
        return False
    hdeg = sorted(sum(1 for e in h.edges if v in e) for v in h_support)
    pdeg = sorted(sum(1 for e in pattern.edges if v in e) for v in p_support)
    if hdeg != pdeg:
        return False
    if pattern.num_vertices != len(p_support):
        # isolated pattern vertices need matching spare host vertices
        if h.num_vertices - len(h_support) < pattern.num_vertices - len(p_support):
            return False
    return contains_pattern(h, Pattern(pattern.uniformity, pattern.num_vertices, pattern.edges)).status == FOUND


def sets_isomorphic_to(sets, pattern: Pattern) -> bool:
    """Whether a collection of equal-size sets, as a hypergraph, matches ``pattern``."""
    family = [frozenset(s) for s in sets]
    support = sorted(set().union(*family)) if family else []
    index = {x: i for i, x in enumerate(support)}
    edges = [tuple(sorted(index[x] for x in s)) for s in family]
    k = len(family[0]) if family else pattern.uniformity
    return is_isomorphic(make_hypergraph(k, len(support), edges), pattern)
