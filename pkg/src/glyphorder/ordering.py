"""Learning orders: the priority-constrained topological sort and friends.

The optimizer takes the centrality ranking (best benefit/cost first) and
repairs it into a hierarchal order with as little disturbance as
possible: sweeping from the low-centrality end, any component found to
the right of a glyph that contains it is pulled to the glyph's left, as
far left as its own centrality allows. High-centrality compounds
therefore stay early, dragging just their components in front of them.

Also here: a pure-frequency baseline (not hierarchal in general), a
first-in-first-out Kahn baseline (hierarchal but centrality-blind), an
exhaustive brute-force optimizer for small networks (the greedy sweep is
not always optimal), and the hierarchal-validity checker.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .costmodel import CentralityTable
from .network import DecompositionNetwork, UnknownId


class TooLarge(Exception):
    """Brute-force enumeration refused: selection exceeds the node limit."""


class Provenance(Enum):
    """How a learning order was produced."""

    OPTIMIZED = "optimized"
    PURE_FREQUENCY = "pure-frequency"
    EXTERNAL = "external"
    BRUTE_FORCE_OPTIMAL = "brute-force-optimal"


@dataclass(frozen=True)
class OrderItem:
    """One scheduled glyph with its learning cost and frequency share."""

    glyph: str
    cost: float
    freq: float


@dataclass(frozen=True)
class LearningOrder:
    """A permutation of the selected nodes, with provenance."""

    items: tuple[OrderItem, ...]
    provenance: Provenance

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[OrderItem]:
        return iter(self.items)

    def ids(self) -> list[str]:
        return [item.glyph for item in self.items]


@dataclass(frozen=True)
class Violation:
    """A component scheduled after (or missing for) a glyph that needs it."""

    compound: str
    component: str
    missing: bool = False


def expand_selection(net: DecompositionNetwork, select: Iterable[str]) -> set[str]:
    """Selection plus every closure member; raises UnknownId."""
    pool: set[str] = set()
    for glyph in select:
        if glyph not in net:
            raise UnknownId(glyph)
        pool.add(glyph)
        pool.update(net.closure(glyph))
    return pool


def _make_items(table: CentralityTable, ids: Sequence[str]) -> tuple[OrderItem, ...]:
    items = []
    for glyph in ids:
        if glyph not in table:
            raise UnknownId(glyph)
        entry = table[glyph]
        items.append(OrderItem(glyph=glyph, cost=entry.c, freq=entry.f))
    return tuple(items)


def external_order(table: CentralityTable, ids: Sequence[str],
                   provenance: Provenance = Provenance.EXTERNAL) -> LearningOrder:
    """Wrap a fixed glyph sequence (e.g. a published curriculum) as an order."""
    return LearningOrder(items=_make_items(table, ids), provenance=provenance)


def priority_topo_sort(net: DecompositionNetwork, table: CentralityTable,
                       select: Iterable[str]) -> LearningOrder:
    """Sort the selection into a hierarchal order with minimal disturbance.

    The initial list is the selection plus all closure members, ranked by
    descending centrality. The list is then swept from its low-centrality
    end. For the glyph under the cursor, closure members are checked in
    closure order; each member found to the glyph's right is removed and
    re-inserted to its left, directly right of the rightmost item whose
    eta is at least the member's own (at the very front when no such item
    exists). Equal-eta placement therefore lands right of its equals.

    Every insertion pushes the current glyph one slot right; the sweep
    resumes just left of the glyph's final slot, so anything that landed
    left of it, including the members just moved, is examined in turn.
    Items that are never repositioned keep their relative ranking, and an
    already-hierarchal list passes through unchanged.
    """
    pool = expand_selection(net, select)
    order = table.ranked(pool)
    pos = {glyph: k for k, glyph in enumerate(order)}

    i = len(order) - 1
    while i >= 0:
        glyph = order[i]
        for member in net.closure(glyph):
            here = pos[glyph]
            j = pos[member]
            if j <= here:
                continue
            eta_m = table.eta(member)
            q = 0
            for k in range(here - 1, -1, -1):
                if table.eta(order[k]) >= eta_m:
                    q = k + 1
                    break
            order.pop(j)
            order.insert(q, member)
            for k in range(q, j + 1):
                pos[order[k]] = k
        i = pos[glyph] - 1

    return LearningOrder(items=_make_items(table, order),
                         provenance=Provenance.OPTIMIZED)


def pure_frequency_order(table: CentralityTable, select: Iterable[str]) -> LearningOrder:
    """Most frequent first, ties lexicographic; hierarchy ignored.

    Zero-frequency items (components that never occur as corpus tokens)
    fall to the end automatically. The caller chooses whether `select`
    includes closure members; `expand_selection` builds that pool.
    """
    ids = sorted(select, key=lambda g: (-table[g].f, g))
    return LearningOrder(items=_make_items(table, ids),
                         provenance=Provenance.PURE_FREQUENCY)


def kahn_order(net: DecompositionNetwork, table: CentralityTable,
               select: Iterable[str]) -> LearningOrder:
    """Arbitrary hierarchal baseline: first-in-first-out Kahn's algorithm.

    Components count as prerequisites. The queue is seeded with the
    dependency-free nodes in lexicographic id order and new nodes are
    appended as their last prerequisite is scheduled, so the result is
    deterministic but pays no attention to centrality.
    """
    pool = expand_selection(net, select)
    missing = {glyph: 0 for glyph in pool}
    for glyph in pool:
        missing[glyph] = sum(1 for c in set(net.node(glyph).components) if c in pool)
    queue = sorted(g for g, n in missing.items() if n == 0)
    out = []
    head = 0
    while head < len(queue):
        glyph = queue[head]
        head += 1
        out.append(glyph)
        for parent in sorted(net.containers(glyph)):
            if parent in missing:
                missing[parent] -= 1
                if missing[parent] == 0:
                    queue.append(parent)
    return LearningOrder(items=_make_items(table, out),
                         provenance=Provenance.EXTERNAL)


def validate_topological(net: DecompositionNetwork,
                         order: LearningOrder | Sequence[str]) -> list[Violation]:
    """All (glyph, direct component) pairs scheduled out of order.

    A pair is reported when the component appears after the glyph or not
    at all. An empty result means the order is hierarchal: by induction,
    direct components in place puts full closures in place.
    """
    ids = order.ids() if isinstance(order, LearningOrder) else list(order)
    pos: dict[str, int] = {}
    for k, glyph in enumerate(ids):
        net.node(glyph)
        pos[glyph] = k
    out = []
    for k, glyph in enumerate(ids):
        seen: set[str] = set()
        for comp in net.node(glyph).components:
            if comp in seen:
                continue
            seen.add(comp)
            at = pos.get(comp)
            if at is None:
                out.append(Violation(compound=glyph, component=comp, missing=True))
            elif at > k:
                out.append(Violation(compound=glyph, component=comp))
    return out


def brute_force_best_order(net: DecompositionNetwork, table: CentralityTable,
                           select: Iterable[str], c0: float,
                           limit: int = 10) -> LearningOrder:
    """Exhaustively find the best hierarchal order of a small selection.

    Enumerates every topological order of the selection (plus closure
    members) in lexicographic order and keeps the one with the highest
    mean efficiency at horizon `c0`, breaking ties by higher final
    efficiency and then by the enumeration order itself. Scoring goes
    through the same curve computation as every other order, so the
    comparison with the sweep is apples to apples. Exponential time;
    refuses more than `limit` nodes.

    One pruning keeps this usable: once a prefix's cumulative cost
    exceeds `c0`, items past the first over-budget one are excluded from
    the curve, so every completion scores the same and the subtree
    collapses to its lexicographically first completion.
    """
    # Local import; metrics depends on this module for LearningOrder.
    from .metrics import curve

    pool = expand_selection(net, select)
    if len(pool) > limit:
        raise TooLarge("%d nodes exceed the brute-force limit of %d" % (len(pool), limit))
    if c0 <= 0:
        raise ValueError("c0 must be positive")

    ids = sorted(pool)
    comps_in_pool = {g: set(net.node(g).components) & pool for g in ids}
    blocked = {g: len(comps_in_pool[g]) for g in ids}
    parents = {g: sorted(set(net.containers(g)) & pool) for g in ids}

    best: dict = {"score": None, "order": None}
    prefix: list[str] = []
    placed: set[str] = set()

    def lex_first_completion() -> list[str]:
        # Lexicographically first valid completion: repeatedly take the
        # smallest available node. Only reached once the score is fixed.
        extra_blocked = dict(blocked)
        avail = sorted(g for g in ids if g not in placed and extra_blocked[g] == 0)
        tail = []
        while avail:
            glyph = avail.pop(0)
            tail.append(glyph)
            for parent in parents[glyph]:
                extra_blocked[parent] -= 1
                if extra_blocked[parent] == 0:
                    avail.append(parent)
                    avail.sort()
        return prefix + tail

    def consider(candidate: list[str]) -> None:
        lo = external_order(table, candidate, Provenance.BRUTE_FORCE_OPTIMAL)
        cv = curve(net, lo, c0)
        score = (cv.mean_efficiency, cv.final_efficiency)
        if best["score"] is None or score > best["score"]:
            best["score"] = score
            best["order"] = list(candidate)

    def recurse(cum_cost: float) -> None:
        if len(prefix) == len(ids):
            consider(prefix)
            return
        if cum_cost > c0:
            consider(lex_first_completion())
            return
        for glyph in ids:
            if glyph in placed or blocked[glyph] > 0:
                continue
            placed.add(glyph)
            prefix.append(glyph)
            for parent in parents[glyph]:
                blocked[parent] -= 1
            recurse(cum_cost + table[glyph].c)
            for parent in parents[glyph]:
                blocked[parent] += 1
            prefix.pop()
            placed.discard(glyph)

    recurse(0.0)
    if best["order"] is None:
        return LearningOrder(items=(), provenance=Provenance.BRUTE_FORCE_OPTIMAL)
    return LearningOrder(items=_make_items(table, best["order"]),
                         provenance=Provenance.BRUTE_FORCE_OPTIMAL)


def serialize_order_csv(net: DecompositionNetwork, order: LearningOrder) -> str:
    """Order CSV: rank,glyph,kind,cost,freq,eta,cum_cost,cum_freq.

    Frequencies carry 9 decimal places; the format is stable so repeated
    runs are byte-identical.
    """
    lines = ["rank,glyph,kind,cost,freq,eta,cum_cost,cum_freq"]
    cum_cost = 0.0
    cum_freq = 0.0
    for rank, item in enumerate(order, start=1):
        cum_cost += item.cost
        cum_freq += item.freq
        if item.cost > 0:
            eta = item.freq / item.cost
        else:
            eta = float("inf") if item.freq > 0 else 0.0
        lines.append("%d,%s,%s,%.6f,%.9f,%.9g,%.6f,%.9f" % (
            rank, item.glyph, net.node(item.glyph).kind.code,
            item.cost, item.freq, eta, cum_cost, cum_freq))
    return "\n".join(lines) + "\n"
