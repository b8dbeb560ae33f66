"""Construction of the run-length index components from a validated graph.

The index stores, per edge-label position: run boundaries with rank/select
directories, degree and label partial sums, a table of endpoint identifiers
at marked positions (so the identifier of the last matched vertex can be
maintained during a query), and a sorted anchor set from which the
order-predecessor of any identifier can be recovered by successor lookup
plus offset arithmetic.
"""

from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from itertools import accumulate

from .errors import IndexInvariantError, NotWheelerError
from .graph import (
    IdAssignment,
    PathDecomposition,
    WheelerGraph,
    assign_identifiers,
    decompose_paths,
    validate_wheeler,
)

_FORMAT = "wgrindex"
_VERSION = 1


@dataclass
class GraphBwt:
    """Edge labels sorted by (source rank, destination rank, input order).

    labels[p] is the label at position p; edge_at[p] the (src, dst) pair of
    the edge holding that position; order[p] its index in the input edge
    list. runs lists the maximal constant stretches as (label, length).
    """

    labels: list[int]
    runs: list[tuple[int, int]]
    edge_at: list[tuple[int, int]]
    order: list[int]

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def num_runs(self) -> int:
        return len(self.runs)


def build_bwt(g: WheelerGraph) -> GraphBwt:
    """Sort the edge labels into transform order; rejects invalid orders."""
    report = validate_wheeler(g)
    if not report.is_wheeler:
        detail = "; ".join(str(v) for v in report.violations)
        raise NotWheelerError(f"input numbering is not a Wheeler order: {detail}")
    order = sorted(range(g.m), key=lambda i: (g.edges[i][0], g.edges[i][1], i))
    labels = [g.edges[i][2] for i in order]
    runs: list[tuple[int, int]] = []
    for lab in labels:
        if runs and runs[-1][0] == lab:
            runs[-1] = (lab, runs[-1][1] + 1)
        else:
            runs.append((lab, 1))
    edge_at = [(g.edges[i][0], g.edges[i][1]) for i in order]
    return GraphBwt(labels=labels, runs=runs, edge_at=edge_at, order=order)


@dataclass
class RLSequence:
    """Rank/select over a run-length encoded label sequence.

    Stores one entry per run globally plus one entry per run in a per-label
    directory, so storage is proportional to the number of runs (plus one
    directory slot per distinct label). rank and select are binary searches.
    """

    length: int
    run_starts: list[int]
    run_labels: list[int]
    _starts: dict[int, list[int]] = field(init=False, repr=False, compare=False)
    _lens: dict[int, list[int]] = field(init=False, repr=False, compare=False)
    _cums: dict[int, list[int]] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        starts: dict[int, list[int]] = {}
        lens: dict[int, list[int]] = {}
        cums: dict[int, list[int]] = {}
        totals: dict[int, int] = {}
        for t, (s, lab) in enumerate(zip(self.run_starts, self.run_labels)):
            end = self.run_starts[t + 1] if t + 1 < len(self.run_starts) else self.length
            starts.setdefault(lab, []).append(s)
            cums.setdefault(lab, []).append(totals.get(lab, 0))
            lens.setdefault(lab, []).append(end - s)
            totals[lab] = totals.get(lab, 0) + (end - s)
        self._starts = starts
        self._lens = lens
        self._cums = cums

    @classmethod
    def from_labels(cls, labels) -> "RLSequence":
        run_starts: list[int] = []
        run_labels: list[int] = []
        prev = None
        for p, lab in enumerate(labels):
            if prev is None or lab != prev:
                run_starts.append(p)
                run_labels.append(lab)
            prev = lab
        return cls(length=len(labels), run_starts=run_starts, run_labels=run_labels)

    @property
    def num_runs(self) -> int:
        return len(self.run_starts)

    def count(self, c: int) -> int:
        cums = self._cums.get(c)
        if not cums:
            return 0
        return cums[-1] + self._lens[c][-1]

    def rank(self, c: int, p: int) -> int:
        """Occurrences of c among positions [0, p)."""
        sl = self._starts.get(c)
        if not sl:
            return 0
        t = bisect_left(sl, p)  # runs of c starting strictly before p
        if t == 0:
            return 0
        s = sl[t - 1]
        return self._cums[c][t - 1] + min(p - s, self._lens[c][t - 1])

    def select(self, c: int, k: int) -> int:
        """Position of the (k+1)-th occurrence of c (k is 0-based)."""
        total = self.count(c)
        if not 0 <= k < total:
            raise IndexError(f"select({c}, {k}): label has {total} occurrence(s)")
        cums = self._cums[c]
        t = bisect_right(cums, k) - 1
        return self._starts[c][t] + (k - cums[t])

    def run_end(self, p: int) -> bool:
        """True iff p is the last position of its run."""
        if not 0 <= p < self.length:
            raise IndexError(f"position {p} out of range")
        t = bisect_right(self.run_starts, p) - 1
        end = self.run_starts[t + 1] if t + 1 < len(self.run_starts) else self.length
        return p == end - 1

    def label_at(self, p: int) -> int:
        if not 0 <= p < self.length:
            raise IndexError(f"position {p} out of range")
        return self.run_labels[bisect_right(self.run_starts, p) - 1]


def build_rank_select(b: GraphBwt) -> RLSequence:
    """Rank/select directories over the transform's runs."""
    if b.runs:
        run_starts = [0] + list(accumulate(length for _, length in b.runs))[:-1]
    else:
        run_starts = []
    run_labels = [lab for lab, _ in b.runs]
    return RLSequence(length=b.m, run_starts=run_starts, run_labels=run_labels)


@dataclass
class DegreeSums:
    """Cumulative out-degrees, in-degrees and label frequencies.

    out_prefix[k] / in_prefix[k] count edge endpoints at ranks below k;
    f_label[c] counts labels strictly below c in the transform.
    """

    out_prefix: list[int]
    in_prefix: list[int]
    f_label: list[int]

    def rank_of_in_slot(self, slot: int) -> int:
        """Vertex rank whose incoming-edge slot range contains slot."""
        return bisect_right(self.in_prefix, slot) - 1


def build_partial_sums(g: WheelerGraph) -> DegreeSums:
    out_prefix = [0] + list(accumulate(g.out_degrees))
    in_prefix = [0] + list(accumulate(g.in_degrees))
    counts = [0] * (g.sigma or 0)
    for _, _, lab in g.edges:
        counts[lab] += 1
    f_label = [0] + list(accumulate(counts))
    return DegreeSums(out_prefix=out_prefix, in_prefix=in_prefix, f_label=f_label)


@dataclass
class ToeholdTable:
    """Endpoint identifiers stored at marked transform positions.

    pairs maps a marked position to the (source id, destination id) of its
    edge. Positions are marked exactly where a query step may need a stored
    answer; everywhere else the tracked identifier advances with the +1
    rule, so the table plus that rule cover every step.
    """

    pairs: dict[int, tuple[int, int]]

    def is_marked(self, p: int) -> bool:
        return p in self.pairs

    @property
    def marked_count(self) -> int:
        return len(self.pairs)

    def marked_positions(self) -> list[int]:
        return sorted(self.pairs)


def build_toehold(
    g: WheelerGraph, d: PathDecomposition, ids: IdAssignment, b: GraphBwt
) -> ToeholdTable:
    """Mark positions and record their edges' endpoint identifiers.

    Position p holding edge (u, v) is marked when any of these hold:
      M1: p is the last position of a run;
      M2: u or v is an endpoint of a decomposition path;
      M3: the vertex ranked directly after u has out-degree 0.
    """
    run_ends = set(accumulate(length for _, length in b.runs))  # 1-past ends
    endpoints = d.endpoints
    out_deg = g.out_degrees
    id_of = ids.id_of_rank
    pairs: dict[int, tuple[int, int]] = {}
    for p, (u, v) in enumerate(b.edge_at):
        if (
            (p + 1) in run_ends
            or u in endpoints
            or v in endpoints
            or (u + 1 < g.n and out_deg[u + 1] == 0)
        ):
            pairs[p] = (id_of[u], id_of[v])
    return ToeholdTable(pairs=pairs)


@dataclass
class PhiStructure:
    """Sorted identifier anchors with each one's order-predecessor.

    anchor_ids holds, ascending, the identifiers whose order-predecessor is
    stored explicitly; pred_ids[t] is the identifier of the vertex directly
    before anchor_ids[t] in the vertex order (None for the order-first
    vertex). Between anchors, identifiers and their predecessors advance in
    lockstep along chains, which is what makes successor lookup plus offset
    arithmetic recover every other predecessor.
    """

    anchor_ids: list[int]
    pred_ids: list[int | None]

    @property
    def size(self) -> int:
        return len(self.anchor_ids)

    def successor(self, i: int) -> tuple[int, int | None]:
        """Smallest anchor >= i with its stored predecessor identifier."""
        t = bisect_left(self.anchor_ids, i)
        if t == len(self.anchor_ids):
            raise IndexInvariantError(f"identifier {i} has no anchor successor")
        return self.anchor_ids[t], self.pred_ids[t]


def build_phi(
    g: WheelerGraph, d: PathDecomposition, ids: IdAssignment, b: GraphBwt
) -> PhiStructure:
    """Collect the anchor identifiers and their order-predecessors.

    Rank k (vertex u, order-predecessor u') is anchored when the +1
    lockstep between u's chain and u''s chain cannot be relied on:
      * u or u' does not have out-degree exactly 1;
      * the single out-edge of u (to v) or of u' (to v') leads to a vertex
        with in-degree other than 1;
      * the two single out-edges carry different labels;
      * any of u, u', v, v' is an endpoint of a decomposition path
        (endpoints break the consecutive-identifier rule);
      * k = 0 (the order-first vertex, stored with a None sentinel).
    """
    n = g.n
    out_prefix = [0] + list(accumulate(g.out_degrees))
    endpoints = d.endpoints
    id_of = ids.id_of_rank

    def single_out(u: int) -> tuple[int, int]:
        # target and label of u's unique out-edge; caller checks out-degree
        p = out_prefix[u]
        return b.edge_at[p][1], b.labels[p]

    entries: list[tuple[int, int | None]] = []
    for k in range(n):
        if k == 0:
            member = True
        elif g.out_degrees[k] != 1 or g.out_degrees[k - 1] != 1:
            member = True
        else:
            v, lab = single_out(k)
            v2, lab2 = single_out(k - 1)
            member = (
                g.in_degrees[v] != 1
                or g.in_degrees[v2] != 1
                or lab != lab2
                or k in endpoints
                or (k - 1) in endpoints
                or v in endpoints
                or v2 in endpoints
            )
        if member:
            entries.append((id_of[k], id_of[k - 1] if k > 0 else None))
    entries.sort(key=lambda t: t[0])
    return PhiStructure(
        anchor_ids=[i for i, _ in entries], pred_ids=[p for _, p in entries]
    )


@dataclass
class WheelerRIndex:
    """Everything needed to answer count and locate queries.

    Immutable once built; safe for unlimited concurrent readers. Note the
    transform itself is not retained, only its run structure.
    """

    n: int
    m: int
    sigma: int
    num_runs: int
    num_paths: int
    last_rank_id: int | None  # identifier of the vertex at rank n-1
    rl: RLSequence
    sums: DegreeSums
    toehold: ToeholdTable
    phi: PhiStructure


def build_index(g: WheelerGraph) -> WheelerRIndex:
    """Validate, decompose, assign identifiers and build all components."""
    b = build_bwt(g)  # raises NotWheelerError on a bad order
    d = decompose_paths(g)
    ids = assign_identifiers(g, d)
    return WheelerRIndex(
        n=g.n,
        m=g.m,
        sigma=g.sigma,
        num_runs=b.num_runs,
        num_paths=d.num_paths,
        last_rank_id=ids.id_of_rank[g.n - 1] if g.n else None,
        rl=build_rank_select(b),
        sums=build_partial_sums(g),
        toehold=build_toehold(g, d, ids, b),
        phi=build_phi(g, d, ids, b),
    )


@dataclass(frozen=True)
class SpaceReport:
    """Measured sizes of the built components, in stored integers ("words").

    marked_bound and anchor_bound are the budgets the construction is
    expected to stay within: num_runs + 4 * num_paths marked positions and
    num_runs + 8 * num_paths + 1 anchors.
    """

    n: int
    m: int
    sigma: int
    num_runs: int
    num_paths: int
    marked_count: int
    anchor_count: int
    marked_bound: int
    anchor_bound: int
    words: dict[str, int]

    @property
    def total_words(self) -> int:
        return sum(self.words.values())

    def lines(self) -> list[str]:
        out = [
            f"n={self.n}",
            f"m={self.m}",
            f"sigma={self.sigma}",
            f"r={self.num_runs}",
            f"upsilon={self.num_paths}",
            f"marked={self.marked_count}",
            f"marked_bound={self.marked_bound}",
            f"anchors={self.anchor_count}",
            f"anchors_bound={self.anchor_bound}",
        ]
        out.extend(f"words_{name}={count}" for name, count in self.words.items())
        out.append(f"words_total={self.total_words}")
        return out


def space_report(ix: WheelerRIndex) -> SpaceReport:
    """Tally stored integers per component and the expected size budgets."""
    rl = ix.rl
    rl_words = 2 * len(rl.run_starts) + sum(
        len(rl._starts[c]) + len(rl._lens[c]) + len(rl._cums[c]) for c in rl._starts
    )
    words = {
        "rank_select": rl_words,
        "degree_sums": len(ix.sums.out_prefix) + len(ix.sums.in_prefix) + len(ix.sums.f_label),
        "toehold": 3 * ix.toehold.marked_count,
        "phi": 2 * ix.phi.size,
    }
    return SpaceReport(
        n=ix.n,
        m=ix.m,
        sigma=ix.sigma,
        num_runs=ix.num_runs,
        num_paths=ix.num_paths,
        marked_count=ix.toehold.marked_count,
        anchor_count=ix.phi.size,
        marked_bound=ix.num_runs + 4 * ix.num_paths,
        anchor_bound=ix.num_runs + 8 * ix.num_paths + 1,
        words=words,
    )


def serialize_index(ix: WheelerRIndex) -> bytes:
    """Canonical byte encoding; identical indexes give identical bytes."""
    positions = ix.toehold.marked_positions()
    doc = {
        "format": _FORMAT,
        "version": _VERSION,
        "n": ix.n,
        "m": ix.m,
        "sigma": ix.sigma,
        "num_runs": ix.num_runs,
        "num_paths": ix.num_paths,
        "last_rank_id": ix.last_rank_id,
        "run_starts": ix.rl.run_starts,
        "run_labels": ix.rl.run_labels,
        "out_prefix": ix.sums.out_prefix,
        "in_prefix": ix.sums.in_prefix,
        "f_label": ix.sums.f_label,
        "marked_positions": positions,
        "marked_pairs": [list(ix.toehold.pairs[p]) for p in positions],
        "anchor_ids": ix.phi.anchor_ids,
        "pred_ids": ix.phi.pred_ids,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")).encode("ascii")


def deserialize_index(data: bytes) -> WheelerRIndex:
    """Inverse of serialize_index; raises ValueError on foreign input."""
    try:
        doc = json.loads(data)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ValueError(f"not an index file: {exc}") from exc
    if not isinstance(doc, dict) or doc.get("format") != _FORMAT:
        raise ValueError("not an index file: missing format marker")
    if doc.get("version") != _VERSION:
        raise ValueError(f"unsupported index version {doc.get('version')!r}")
    try:
        pairs = {
            int(p): (int(a), int(b))
            for p, (a, b) in zip(doc["marked_positions"], doc["marked_pairs"])
        }
        return WheelerRIndex(
            n=int(doc["n"]),
            m=int(doc["m"]),
            sigma=int(doc["sigma"]),
            num_runs=int(doc["num_runs"]),
            num_paths=int(doc["num_paths"]),
            last_rank_id=None if doc["last_rank_id"] is None else int(doc["last_rank_id"]),
            rl=RLSequence(
                length=int(doc["m"]),
                run_starts=[int(x) for x in doc["run_starts"]],
                run_labels=[int(x) for x in doc["run_labels"]],
            ),
            sums=DegreeSums(
                out_prefix=[int(x) for x in doc["out_prefix"]],
                in_prefix=[int(x) for x in doc["in_prefix"]],
                f_label=[int(x) for x in doc["f_label"]],
            ),
            toehold=ToeholdTable(pairs=pairs),
            phi=PhiStructure(
                anchor_ids=[int(x) for x in doc["anchor_ids"]],
                pred_ids=[None if x is None else int(x) for x in doc["pred_ids"]],
            ),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"not an index file: malformed field ({exc})") from exc


def save_index(ix: WheelerRIndex, path) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize_index(ix))


def load_index(path) -> WheelerRIndex:
    with open(path, "rb") as fh:
        return deserialize_index(fh.read())
