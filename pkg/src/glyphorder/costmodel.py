"""Learning costs and centralities.

A primitive costs 1 + gamma * strokes (missing stroke counts are stored
as 0, so the cost degrades to exactly 1). A compound costs the number of
combinations needed to assemble it: one less than its component count,
with multiplicity. Variants cost a flat amount. Words cost one less than
their character count. Items already known cost 0; partially known items
have their cost multiplied by a suppression factor in [0, 1].

Centrality is the benefit/cost ratio eta = f / c. Zero-cost items need a
convention: eta is 0 when f is also 0, infinite when f > 0. The ranking
places every zero-cost item first (consuming free items early can only
help), ordered by frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable

from .ingest import FrequencyTable
from .network import DecompositionNetwork, GlyphKind, GlyphNode

DEFAULT_GAMMA = 0.1


@dataclass(frozen=True)
class CostParams:
    """Knobs of the cost model.

    Attributes:
        gamma: per-stroke surcharge on primitive costs.
        variant_cost: flat cost of variant forms.
        known: ids whose cost is forced to 0 (already learned).
        suppression: id -> factor in [0, 1] for partially known items.
    """

    gamma: float = DEFAULT_GAMMA
    variant_cost: float = 1.0
    known: frozenset[str] = frozenset()
    suppression: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.gamma < 0:
            raise ValueError("gamma must be non-negative")
        if self.variant_cost <= 0:
            raise ValueError("variant_cost must be positive")
        for glyph, factor in self.suppression.items():
            if not 0.0 <= factor <= 1.0:
                raise ValueError("suppression factor for %s outside [0, 1]" % glyph)


def cost(node: GlyphNode, params: CostParams) -> float:
    """Learning cost of one node under `params`."""
    if node.id in params.known:
        return 0.0
    if node.kind.is_primitive:
        # Decimal parameters should yield decimal costs: gamma 0.1 with 7
        # strokes is exactly 1.7, not 1 + 0.7000000000000001.
        base = round(1.0 + params.gamma * node.strokes, 12)
    elif node.kind is GlyphKind.VARIANT:
        base = params.variant_cost
    else:
        # Compound and word: one combination per extra component, with
        # multiplicity, so a repeated component is paid for again.
        base = float(len(node.components) - 1)
    return base * params.suppression.get(node.id, 1.0)


@dataclass(frozen=True)
class Centrality:
    """Frequency share, cost, and their ratio for one node."""

    f: float
    c: float
    eta: float


@dataclass(frozen=True)
class CentralityTable:
    """Per-node centralities plus the deterministic ranking order."""

    entries: dict[str, Centrality]

    def __contains__(self, glyph: str) -> bool:
        return glyph in self.entries

    def __getitem__(self, glyph: str) -> Centrality:
        return self.entries[glyph]

    def eta(self, glyph: str) -> float:
        return self.entries[glyph].eta

    def sort_key(self, glyph: str):
        """Ranking key, ascending = highest centrality first.

        Zero-cost items come first (by frequency, then id); the rest by
        eta descending, frequency descending, id ascending. The id
        tiebreak makes the ranking a total order, hence reproducible.
        """
        entry = self.entries[glyph]
        if entry.c == 0.0:
            return (0, -entry.f, 0.0, glyph)
        return (1, -entry.eta, -entry.f, glyph)

    def ranked(self, ids: Iterable[str] | None = None) -> list[str]:
        """Ids sorted by descending centrality (all entries by default)."""
        pool = self.entries.keys() if ids is None else ids
        return sorted(pool, key=self.sort_key)


def centralities(net: DecompositionNetwork, freq: FrequencyTable,
                 params: CostParams) -> CentralityTable:
    """Compute f, c, and eta for every node of the network."""
    entries = {}
    for node in net.nodes():
        f = freq.get(node.id)
        c = cost(node, params)
        if c == 0.0:
            eta = math.inf if f > 0.0 else 0.0
        else:
            eta = f / c
        entries[node.id] = Centrality(f=f, c=c, eta=eta)
    return CentralityTable(entries=entries)
