"""Edge-labelled directed multigraphs over an ordered vertex set.

The vertex numbering of a graph here is always the order under test: rank k
means "the vertex in position k of the claimed order". Validation checks the
three ordering axioms against that numbering, decomposition chains the edge
set into paths, and identifier assignment numbers the vertices so that
consecutive interior vertices of a chain carry consecutive identifiers.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import WgfParseError

Label = int
Edge = tuple[int, int, int]  # (source rank, destination rank, label)

_DECIMAL = re.compile(r"[0-9]+\Z")


@dataclass(frozen=True)
class Violation:
    """One concrete witness of a broken ordering axiom."""

    axiom: str  # "A0", "A1" or "A2"
    witness: tuple[int, ...]  # vertex ranks for A0, edge indices for A1/A2
    message: str

    def __str__(self) -> str:
        return f"{self.axiom}: {self.message}"


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an axiom check; is_wheeler holds iff violations is empty."""

    is_wheeler: bool
    violations: tuple[Violation, ...]

    @classmethod
    def from_violations(cls, violations) -> "ValidationReport":
        vs = tuple(violations)
        return cls(is_wheeler=not vs, violations=vs)


@dataclass
class WheelerGraph:
    """Directed multigraph with integer edge labels and a fixed vertex order.

    n: number of vertices, named by rank 0..n-1.
    edges: (src, dst, label) triples; parallel edges are allowed.
    sigma: alphabet size; labels live in [0, sigma). Derived as
        1 + max(label) when not given (0 for an edgeless graph).

    Instances are treated as immutable after construction and are safe for
    concurrent readers.
    """

    n: int
    edges: list[Edge]
    sigma: int | None = None
    in_degrees: list[int] = field(init=False, repr=False, compare=False)
    out_degrees: list[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("vertex count must be non-negative")
        if self.sigma is None:
            self.sigma = 1 + max((lab for _, _, lab in self.edges), default=-1)
        ins = [0] * self.n
        outs = [0] * self.n
        for u, v, lab in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}, {lab}) has a rank outside [0, {self.n})")
            if not (0 <= lab < self.sigma):
                raise ValueError(f"edge ({u}, {v}, {lab}) has a label outside [0, {self.sigma})")
            outs[u] += 1
            ins[v] += 1
        self.in_degrees = ins
        self.out_degrees = outs

    @property
    def m(self) -> int:
        return len(self.edges)


def _decimal(token: str, lineno: int) -> int:
    if not _DECIMAL.match(token):
        raise WgfParseError(f"line {lineno}: {token!r} is not a non-negative decimal integer")
    return int(token)


def _record(tokens: list[str], lineno: int, tag: str, count: int) -> list[int]:
    if len(tokens) != count + 1 or tokens[0] != tag or "" in tokens:
        raise WgfParseError(
            f"line {lineno}: expected {tag!r} record with {count} integer field(s)"
        )
    return [_decimal(t, lineno) for t in tokens[1:]]


def parse_graph(text: str) -> WheelerGraph:
    """Parse WGF text into a graph.

    Format: a header line ``n <N>``, a header line ``m <M>``, then exactly M
    edge lines ``e <src> <dst> <label>``. Fields are ASCII decimal separated
    by single spaces; lines starting with ``#`` and blank lines are ignored.
    The alphabet size is 1 + the largest label (0 when M = 0).

    Raises WgfParseError with the offending line number on malformed input
    or on a rank outside [0, N).
    """
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        rows.append((lineno, stripped.split(" ")))

    if not rows:
        raise WgfParseError("line 1: missing 'n' header")
    (n,) = _record(rows[0][1], rows[0][0], "n", 1)
    if len(rows) < 2:
        raise WgfParseError(f"line {rows[0][0]}: missing 'm' header after 'n'")
    (m,) = _record(rows[1][1], rows[1][0], "m", 1)

    edge_rows = rows[2:]
    if len(edge_rows) > m:
        extra_line = edge_rows[m][0]
        raise WgfParseError(f"line {extra_line}: more than the declared m={m} edge lines")
    if len(edge_rows) < m:
        raise WgfParseError(f"unexpected end of input: declared m={m} but found {len(edge_rows)} edge lines")

    edges: list[Edge] = []
    for lineno, tokens in edge_rows:
        u, v, lab = _record(tokens, lineno, "e", 3)
        if u >= n:
            raise WgfParseError(f"line {lineno}: source rank {u} out of range (n={n})")
        if v >= n:
            raise WgfParseError(f"line {lineno}: destination rank {v} out of range (n={n})")
        edges.append((u, v, lab))
    return WheelerGraph(n=n, edges=edges)


def to_wgf(g: WheelerGraph) -> str:
    """Render a graph in the WGF text format (inverse of parse_graph)."""
    lines = [f"n {g.n}", f"m {g.m}"]
    lines.extend(f"e {u} {v} {lab}" for u, v, lab in g.edges)
    return "\n".join(lines) + "\n"


def validate_wheeler(g: WheelerGraph) -> ValidationReport:
    """Check the three ordering axioms under the input numbering.

    A0: every vertex with in-degree 0 ranks before every vertex with
        positive in-degree.
    A1: for edges (u, v) labelled a and (u', v') labelled a',
        a < a' implies v < v'.
    A2: equal labels with u < u' imply v <= v'.

    Runs in O(m log m); violations carry one concrete witness per axiom
    occurrence found, not an exhaustive enumeration.
    """
    violations: list[Violation] = []

    sourceless = [v for v in range(g.n) if g.in_degrees[v] == 0]
    fed = [v for v in range(g.n) if g.in_degrees[v] > 0]
    if sourceless and fed and max(sourceless) > min(fed):
        late, early = max(sourceless), min(fed)
        violations.append(
            Violation(
                "A0",
                (late, early),
                f"vertex {late} has in-degree 0 but ranks after vertex {early} "
                f"which has positive in-degree",
            )
        )

    by_label: dict[int, list[int]] = {}
    for idx, (_, _, lab) in enumerate(g.edges):
        by_label.setdefault(lab, []).append(idx)

    # A1: destinations of lower labels must lie strictly below destinations
    # of higher labels, so one running maximum over ascending labels suffices.
    best_dst = -1
    best_edge = -1
    for lab in sorted(by_label):
        group = by_label[lab]
        lo_edge = min(group, key=lambda i: (g.edges[i][1], i))
        lo_dst = g.edges[lo_edge][1]
        if best_edge >= 0 and best_dst >= lo_dst:
            violations.append(
                Violation(
                    "A1",
                    (best_edge, lo_edge),
                    f"edge {best_edge} {g.edges[best_edge]} has a smaller label than "
                    f"edge {lo_edge} {g.edges[lo_edge]} but does not lead to a smaller vertex",
                )
            )
        hi_edge = max(group, key=lambda i: (g.edges[i][1], i))
        if g.edges[hi_edge][1] > best_dst:
            best_dst, best_edge = g.edges[hi_edge][1], hi_edge

    # A2: within one label, scanning sources in increasing order, every
    # destination must be >= the largest destination of strictly smaller
    # sources.
    for lab in sorted(by_label):
        group = sorted(by_label[lab], key=lambda i: (g.edges[i][0], g.edges[i][1], i))
        prev_src = None
        prev_max_dst, prev_max_edge = -1, -1
        seg_max_dst, seg_max_edge = -1, -1
        for idx in group:
            u, v, _ = g.edges[idx]
            if u != prev_src:
                if seg_max_dst > prev_max_dst:
                    prev_max_dst, prev_max_edge = seg_max_dst, seg_max_edge
                prev_src = u
                seg_max_dst, seg_max_edge = -1, -1
            if prev_max_edge >= 0 and v < prev_max_dst:
                violations.append(
                    Violation(
                        "A2",
                        (prev_max_edge, idx),
                        f"edges {prev_max_edge} {g.edges[prev_max_edge]} and {idx} "
                        f"{g.edges[idx]} share label {lab} with increasing sources "
                        f"but decreasing destinations",
                    )
                )
                break
            if v > seg_max_dst:
                seg_max_dst, seg_max_edge = v, idx

    return ValidationReport.from_violations(violations)


@dataclass
class PathDecomposition:
    """Partition of the edge set into chained paths.

    paths holds vertex-rank sequences (length >= 1); edge_paths holds, in
    parallel, the edge indices along each path. A vertex sequence of length
    one is an isolated vertex. A path that starts and ends at the same
    vertex is a broken cycle; that vertex counts as an endpoint.
    """

    paths: list[list[int]]
    edge_paths: list[list[int]]
    endpoints: frozenset[int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        ends = set()
        for seq in self.paths:
            ends.add(seq[0])
            ends.add(seq[-1])
        self.endpoints = frozenset(ends)

    @property
    def num_paths(self) -> int:
        return len(self.paths)


def decompose_paths(g: WheelerGraph) -> PathDecomposition:
    """Split the edge set into maximal chains.

    Edges e = (u, v) and f = (v, w) belong to the same chain exactly when v
    has in-degree 1 and out-degree 1. A chain that closes into a cycle is
    broken at its minimum-rank vertex; a vertex with no edges becomes a
    single-vertex path. Paths are emitted ordered by (start rank, position
    of the first edge in label-sorted order), so the output is fully
    deterministic.
    """
    n, m = g.n, g.m
    order = sorted(range(m), key=lambda i: (g.edges[i][0], g.edges[i][1], i))
    pos_of_edge = [0] * m
    for p, e in enumerate(order):
        pos_of_edge[e] = p

    only_out = [-1] * n
    for i, (u, _, _) in enumerate(g.edges):
        if g.out_degrees[u] == 1:
            only_out[u] = i
    chainable = [g.in_degrees[v] == 1 and g.out_degrees[v] == 1 for v in range(n)]

    def next_edge(i: int) -> int:
        v = g.edges[i][1]
        return only_out[v] if chainable[v] else -1

    visited = [False] * m
    raw: list[tuple[list[int], list[int]]] = []

    # Chains with a definite head: the source vertex cannot be chained into.
    for p in range(m):
        e = order[p]
        if visited[e] or chainable[g.edges[e][0]]:
            continue
        vseq = [g.edges[e][0]]
        eseq: list[int] = []
        cur = e
        while cur != -1:
            assert not visited[cur]
            visited[cur] = True
            eseq.append(cur)
            vseq.append(g.edges[cur][1])
            cur = next_edge(cur)
        raw.append((vseq, eseq))

    # Everything left lies on pure cycles; break each at its min-rank vertex.
    for p in range(m):
        e = order[p]
        if visited[e]:
            continue
        cyc = [e]
        cur = next_edge(e)
        while cur != e:
            assert cur != -1 and not visited[cur]
            cyc.append(cur)
            cur = next_edge(cur)
        for i in cyc:
            visited[i] = True
        srcs = [g.edges[i][0] for i in cyc]
        k = srcs.index(min(srcs))
        cyc = cyc[k:] + cyc[:k]
        vseq = [g.edges[cyc[0]][0]] + [g.edges[i][1] for i in cyc]
        raw.append((vseq, cyc))

    for v in range(n):
        if g.in_degrees[v] == 0 and g.out_degrees[v] == 0:
            raw.append(([v], []))

    raw.sort(key=lambda t: (t[0][0], pos_of_edge[t[1][0]] if t[1] else -1))
    return PathDecomposition([vs for vs, _ in raw], [es for _, es in raw])


@dataclass
class IdAssignment:
    """Bijection between vertex ranks and numeric identifiers."""

    id_of_rank: list[int]
    rank_of_id: list[int]


def assign_identifiers(g: WheelerGraph, d: PathDecomposition) -> IdAssignment:
    """Number the vertices so interior chain neighbours differ by one.

    Paths are taken in decomposition order; the interior vertices of each
    path receive the next consecutive identifiers in path order. Remaining
    vertices (path endpoints and isolated vertices) then receive the rest in
    increasing rank order. For every edge (u, v) with both ends interior,
    id(v) = id(u) + 1.
    """
    ids: list[int | None] = [None] * g.n
    next_id = 0
    for seq in d.paths:
        for v in seq[1:-1]:
            assert ids[v] is None
            ids[v] = next_id
            next_id += 1
    for v in range(g.n):
        if ids[v] is None:
            ids[v] = next_id
            next_id += 1
    id_of_rank = [i for i in ids if i is not None]
    rank_of_id = [0] * g.n
    for rank, ident in enumerate(id_of_rank):
        rank_of_id[ident] = rank
    return IdAssignment(id_of_rank, rank_of_id)
