"""Uniform hypergraphs with dense integer vertex ids and canonical edge lists.

Every structure in this package is either a ``Hypergraph`` or is derived from
one.  Edges are stored as strictly increasing tuples of vertex ids, and the
edge list itself is kept lexicographically sorted, so two hypergraphs are
equal exactly when they are equal edge-for-edge.  Vertices built from
coordinate tuples carry their tuples in ``labels``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

Edge = tuple[int, ...]
Label = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """An r-uniform hypergraph on vertices ``0 .. num_vertices-1``.

    Instances are immutable; all operations on them are pure functions, so
    values can be shared freely across workers.  The constructor does not
    validate (see :func:`validate`); use :func:`make_hypergraph` to build a
    canonical instance from arbitrary edge input.
    """

    uniformity: int
    num_vertices: int
    edges: tuple[Edge, ...]
    labels: tuple[Label, ...] | None = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        deg = [0] * self.num_vertices
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg


def make_hypergraph(
    uniformity: int,
    num_vertices: int,
    edges,
    labels: tuple[Label, ...] | None = None,
) -> Hypergraph:
    """Build a Hypergraph with edges canonicalized (sorted, deduplicated)."""
    canon = sorted({tuple(sorted(e)) for e in edges})
    return Hypergraph(uniformity, num_vertices, tuple(canon), labels)


def validate(h: Hypergraph) -> list[str]:
    """Return all invariant violations of ``h`` (empty list means ok).

    Violations are data, not failures: callers inspect the list.
    """
    problems: list[str] = []
    if h.uniformity < 1:
        problems.append(f"uniformity must be positive, got {h.uniformity}")
    if h.num_vertices < 0:
        problems.append(f"num_vertices must be non-negative, got {h.num_vertices}")
    for e in h.edges:
        if len(e) != h.uniformity:
            problems.append(f"wrong edge size: {e} has {len(e)} vertices, expected {h.uniformity}")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            problems.append(f"edge not strictly sorted: {e}")
        for v in e:
            if not 0 <= v < h.num_vertices:
                problems.append(f"vertex {v} of edge {e} out of range [0, {h.num_vertices})")
    for i in range(len(h.edges) - 1):
        if h.edges[i] == h.edges[i + 1]:
            problems.append(f"duplicate edge: {h.edges[i]}")
        elif h.edges[i] > h.edges[i + 1]:
            problems.append(f"edge list not sorted at position {i}: {h.edges[i]} > {h.edges[i + 1]}")
    if sorted(set(h.edges)) != list(h.edges):
        # covers duplicates / disorder not adjacent to each other
        seen = set()
        for e in h.edges:
            if e in seen and f"duplicate edge: {e}" not in problems:
                problems.append(f"duplicate edge: {e}")
            seen.add(e)
    if h.labels is not None and len(h.labels) != h.num_vertices:
        problems.append(
            f"labels length {len(h.labels)} does not match num_vertices {h.num_vertices}"
        )
    return problems


@dataclass(frozen=True)
class DegreeStats:
    """Exact degree statistics; the average is a Fraction, never a float."""

    min_degree: int
    max_degree: int
    average_degree: Fraction
    num_edges: int


def degree_stats(h: Hypergraph) -> DegreeStats:
    """Exact min/max/average degree.  Raises on an empty vertex set."""
    if h.num_vertices == 0:
        raise ValueError("degree_stats undefined for a hypergraph with no vertices")
    deg = h.degrees()
    return DegreeStats(
        min_degree=min(deg),
        max_degree=max(deg),
        average_degree=Fraction(h.uniformity * h.num_edges, h.num_vertices),
        num_edges=h.num_edges,
    )


def link_graph(h: Hypergraph, v: int) -> Hypergraph:
    """The link of ``v``: all (uniformity-1)-sets S with S + {v} an edge.

    The result lives on the same vertex set (and labels) as ``h``.
    """
    if not 0 <= v < h.num_vertices:
        raise ValueError(f"vertex {v} out of range [0, {h.num_vertices})")
    link_edges = [tuple(u for u in e if u != v) for e in h.edges if v in e]
    return make_hypergraph(h.uniformity - 1, h.num_vertices, link_edges, h.labels)


def induced_subhypergraph(h: Hypergraph, vertices) -> Hypergraph:
    """Subhypergraph spanned by ``vertices``, relabeled densely in sorted order."""
    vs = sorted(set(vertices))
    for v in vs:
        if not 0 <= v < h.num_vertices:
            raise ValueError(f"vertex {v} out of range [0, {h.num_vertices})")
    relabel = {v: i for i, v in enumerate(vs)}
    keep = set(vs)
    edges = [
        tuple(sorted(relabel[u] for u in e)) for e in h.edges if keep.issuperset(e)
    ]
    labels = tuple(h.labels[v] for v in vs) if h.labels is not None else None
    return make_hypergraph(h.uniformity, len(vs), edges, labels)


def connected_components(g: Hypergraph) -> list[list[int]]:
    """Components of a 2-uniform hypergraph, isolated vertices omitted.

    Components are sorted internally and listed by smallest member.
    """
    if g.uniformity != 2:
        raise ValueError(f"connected_components requires uniformity 2, got {g.uniformity}")
    adj: dict[int, set[int]] = {}
    for a, b in g.edges:
        adj.setdefault(a, set()).add(b)
        adj.setdefault(b, set()).add(a)
    seen: set[int] = set()
    components: list[list[int]] = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        comp = []
        seen.add(start)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in adj[u]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        components.append(sorted(comp))
    return components


@dataclass(frozen=True)
class GridIndexer:
    """Row-major bijection between [n]^k coordinate tuples and [0, n^k).

    Coordinates are 1-based and coordinate 1 is the most significant digit,
    so the id order of vertices equals lexicographic order of their tuples.
    """

    k: int
    n: int

    def __post_init__(self):
        if self.k < 1 or self.n < 1:
            raise ValueError(f"GridIndexer needs k >= 1 and n >= 1, got k={self.k}, n={self.n}")

    @property
    def num_vertices(self) -> int:
        return self.n**self.k

    def encode(self, coords: tuple[int, ...]) -> int:
        if len(coords) != self.k:
            raise ValueError(f"expected {self.k} coordinates, got {coords}")
        vid = 0
        for c in coords:
            if not 1 <= c <= self.n:
                raise ValueError(f"coordinate {c} out of range [1, {self.n}]")
            vid = vid * self.n + (c - 1)
        return vid

    def decode(self, vid: int) -> tuple[int, ...]:
        if not 0 <= vid < self.num_vertices:
            raise ValueError(f"vertex id {vid} out of range [0, {self.num_vertices})")
        coords = []
        for _ in range(self.k):
            coords.append(vid % self.n + 1)
            vid //= self.n
        return tuple(reversed(coords))

    def all_tuples(self):
        """All coordinate tuples in id (= lexicographic) order."""
        return product(range(1, self.n + 1), repeat=self.k)

    def labels(self) -> tuple[Label, ...]:
        return tuple(self.all_tuples())


def parts_host(k: int, n: int, transversal_edges) -> Hypergraph:
    """k-partite k-uniform host over parts X_1..X_k, each a copy of [n].

    Vertex ids are laid out part-by-part; vertex (part i, value x) has id
    (i-1)*n + (x-1) and label (i, x).  ``transversal_edges`` is an iterable
    of coordinate tuples (x_1, ..., x_k), one value per part.
    """
    if k < 1 or n < 1:
        raise ValueError(f"parts_host needs k >= 1 and n >= 1, got k={k}, n={n}")
    edges = []
    for t in transversal_edges:
        if len(t) != k:
            raise ValueError(f"transversal edge {t} does not have {k} coordinates")
        if any(not 1 <= x <= n for x in t):
            raise ValueError(f"transversal edge {t} has values outside [1, {n}]")
        edges.append(tuple((i * n + (x - 1)) for i, x in enumerate(t)))
    labels = tuple((i + 1, x) for i in range(k) for x in range(1, n + 1))
    return make_hypergraph(k, k * n, edges, labels)


def to_json_dict(h: Hypergraph) -> dict:
    """Interchange form: uniformity, num_vertices, edges, optional labels."""
    d = {
        "uniformity": h.uniformity,
        "num_vertices": h.num_vertices,
        "edges": [list(e) for e in h.edges],
    }
    if h.labels is not None:
        d["labels"] = [list(lab) for lab in h.labels]
    return d


def from_json_dict(d: dict) -> Hypergraph:
    try:
        uniformity = int(d["uniformity"])
        num_vertices = int(d["num_vertices"])
        edges = tuple(tuple(int(v) for v in e) for e in d["edges"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed hypergraph JSON: {exc}") from exc
    labels = None
    if "labels" in d and d["labels"] is not None:
        labels = tuple(tuple(int(c) for c in lab) for lab in d["labels"])
    return Hypergraph(uniformity, num_vertices, edges, labels)


def save_json(h: Hypergraph, path: str) -> None:
    with open(path, "w") as f:
        json.dump(to_json_dict(h), f, indent=1, sort_keys=True)
        f.write("\n")


def load_json(path: str) -> Hypergraph:
    with open(path) as f:
        return from_json_dict(json.load(f))
