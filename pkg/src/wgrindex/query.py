"""Count and locate queries over a built index.

A pattern is a sequence of integer labels. match(P) is the set of vertices
at which some directed path spelling P (edge labels read first to last)
ends; under a valid vertex order that set is a contiguous rank interval.
Each query step maps the interval for a prefix to the interval for the
prefix extended by one label, and in parallel tracks the identifier of the
interval's last vertex so the whole result can be reported by repeatedly
stepping to order-predecessors.

All functions are pure reads over an immutable index and may be called
concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .build import WheelerRIndex
from .errors import FirstInOrderError, IndexInvariantError


@dataclass(frozen=True)
class RankInterval:
    """Non-empty inclusive range of vertex ranks.

    Emptiness is always expressed as None by the query functions, never as
    an inverted pair.
    """

    s: int
    e: int

    def __post_init__(self) -> None:
        if not 0 <= self.s <= self.e:
            raise ValueError(f"invalid interval [{self.s}, {self.e}]")

    def __len__(self) -> int:
        return self.e - self.s + 1


@dataclass(frozen=True)
class MatchState:
    """A match interval plus the identifier of the vertex at its top rank."""

    interval: RankInterval
    last_id: int


def full_interval(ix: WheelerRIndex) -> RankInterval | None:
    """Interval of the empty pattern: every vertex (None when n = 0)."""
    return RankInterval(0, ix.n - 1) if ix.n else None


def full_state(ix: WheelerRIndex) -> MatchState | None:
    """Match state of the empty pattern."""
    if ix.n == 0:
        return None
    assert ix.last_rank_id is not None
    return MatchState(RankInterval(0, ix.n - 1), ix.last_rank_id)


def out_range(ix: WheelerRIndex, iv: RankInterval) -> tuple[int, int] | None:
    """Transform positions of the edges leaving the interval's vertices."""
    lo = ix.sums.out_prefix[iv.s]
    hi = ix.sums.out_prefix[iv.e + 1] - 1
    return (lo, hi) if lo <= hi else None


def step_interval(ix: WheelerRIndex, iv: RankInterval, c: int) -> RankInterval | None:
    """Interval of pattern P + [c] given the interval of P.

    The first and last occurrences of c among the interval's out-edge
    labels lead to the first and last vertices of the refined interval;
    their ranks are recovered from the label and in-degree partial sums.
    """
    if not 0 <= c < ix.sigma:
        return None
    rng = out_range(ix, iv)
    if rng is None:
        return None
    lo, hi = rng
    k1 = ix.rl.rank(c, lo)
    k2 = ix.rl.rank(c, hi + 1) - 1
    if k2 < k1:
        return None
    base = ix.sums.f_label[c]
    return RankInterval(
        ix.sums.rank_of_in_slot(base + k1), ix.sums.rank_of_in_slot(base + k2)
    )


def count(ix: WheelerRIndex, pattern: Sequence[int]) -> int:
    """Number of vertices where a path spelling the pattern ends."""
    iv = full_interval(ix)
    if iv is None:
        return 0
    for c in pattern:
        iv = step_interval(ix, iv, c)
        if iv is None:
            return 0
    return len(iv)


def step_toehold(ix: WheelerRIndex, st: MatchState, c: int) -> MatchState | None:
    """Refine the interval by c and keep the last vertex's identifier.

    Case A: the current last vertex u has an out-edge labelled c. The last
    such edge in u's out-range leads to the new last vertex; if its position
    is marked the stored identifier is used, otherwise both endpoints are
    chain-interior and the identifier is last_id + 1.

    Case B: u has no c-edge, so the last c in the whole interval's out-range
    leads to the new last vertex. The construction guarantees that position
    is marked; an unmarked hit means the index is corrupt.
    """
    new_iv = step_interval(ix, st.interval, c)
    if new_iv is None:
        return None
    e = st.interval.e
    lo_e = ix.sums.out_prefix[e]
    hi_e = ix.sums.out_prefix[e + 1] - 1
    if lo_e <= hi_e:
        k1 = ix.rl.rank(c, lo_e)
        k2 = ix.rl.rank(c, hi_e + 1)
        if k2 > k1:  # case A
            p = ix.rl.select(c, k2 - 1)
            pair = ix.toehold.pairs.get(p)
            new_id = pair[1] if pair is not None else st.last_id + 1
            return MatchState(new_iv, new_id)
    # case B
    lo, hi = out_range(ix, st.interval)  # non-empty: the step succeeded
    k2 = ix.rl.rank(c, hi + 1)
    p = ix.rl.select(c, k2 - 1)
    pair = ix.toehold.pairs.get(p)
    if pair is None:
        raise IndexInvariantError(
            f"unmarked position {p} reached by an out-of-range step (label {c})"
        )
    return MatchState(new_iv, pair[1])


def find_interval(ix: WheelerRIndex, pattern: Sequence[int]) -> MatchState | None:
    """Match state of a non-empty pattern, or None when nothing matches.

    The state is seeded from the pattern's first label c: the globally last
    occurrence of c ends a run, hence is marked and carries the identifier
    of the interval's last vertex. Subsequent labels fold through
    step_toehold.
    """
    if len(pattern) == 0:
        raise ValueError("pattern must be non-empty; the empty pattern matches every vertex")
    c = pattern[0]
    start = full_interval(ix)
    if start is None:
        return None
    iv = step_interval(ix, start, c)
    if iv is None:
        return None
    p = ix.rl.select(c, ix.rl.count(c) - 1)
    pair = ix.toehold.pairs.get(p)
    if pair is None:
        raise IndexInvariantError(f"last occurrence of label {c} at position {p} is unmarked")
    st = MatchState(iv, pair[1])
    for c in pattern[1:]:
        st = step_toehold(ix, st, c)
        if st is None:
            return None
    return st


def phi(ix: WheelerRIndex, i: int) -> int:
    """Identifier of the vertex directly before vertex i in the order.

    Anchored identifiers return their stored predecessor; everything else
    steps to its anchor successor j and returns pred(j) - (j - i), which is
    valid because the identifiers between i and j advance in lockstep with
    their predecessors. Raises FirstInOrderError for the order-first vertex.
    """
    if not 0 <= i < ix.n:
        raise ValueError(f"identifier {i} out of range [0, {ix.n})")
    j, pred = ix.phi.successor(i)
    if j == i:
        if pred is None:
            raise FirstInOrderError(f"identifier {i} names the first vertex in the order")
        return pred
    if pred is None:
        raise IndexInvariantError("sentinel anchor reached by offset stepping")
    return pred - (j - i)


def locate(ix: WheelerRIndex, pattern: Sequence[int]) -> list[int]:
    """Identifiers of all vertices where a path spelling the pattern ends.

    Returns exactly count(ix, pattern) distinct identifiers, starting with
    the last vertex of the match interval and walking order-predecessors.
    The empty pattern reports every vertex.
    """
    if len(pattern) == 0:
        if ix.n == 0:
            return []
        assert ix.last_rank_id is not None
        out = [ix.last_rank_id]
        for _ in range(ix.n - 1):
            out.append(phi(ix, out[-1]))
        return out
    st = find_interval(ix, pattern)
    if st is None:
        return []
    out = [st.last_id]
    for _ in range(len(st.interval) - 1):
        out.append(phi(ix, out[-1]))
    return out
