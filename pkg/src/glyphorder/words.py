"""Word-network expansion and target-subset curves.

Sequencing whole words instead of characters changes two things. The
network gains a sink node per retained multi-character word, whose
components are its characters in order and whose cost is the number of
character combinations needed (characters - 1). And frequency switches
to the word corpus entirely: a character is only worth its standalone
occurrences as a one-character word; characters that never stand alone
drop to zero and are learned only because some word needs them.
"""

from __future__ import annotations

from dataclasses import dataclass

from .costmodel import CostParams, centralities
from .ingest import FrequencyTable, TargetList
from .metrics import CostMode, LearningCurve, curve
from .network import DecompositionNetwork, GlyphKind, GlyphNode, build_network
from .ordering import LearningOrder, expand_selection, priority_topo_sort

DEFAULT_TOP_K = 10000


@dataclass(frozen=True)
class WordNetworkConfig:
    """Word expansion settings: frequency-rank cutoff and optional target."""

    top_k: int = DEFAULT_TOP_K
    target: TargetList | None = None

    def __post_init__(self):
        if self.top_k < 1:
            raise ValueError("top_k must be at least 1")


def expand_with_words(net: DecompositionNetwork, word_freq: FrequencyTable,
                      cfg: WordNetworkConfig) -> tuple[DecompositionNetwork, FrequencyTable, list[tuple[str, str]]]:
    """Add word nodes for the `top_k` most frequent words.

    Multi-character words among the top_k become nodes with their
    characters as components; a word whose character is missing from the
    base network is dropped and listed in the report as (word, reason).
    Single-character tokens add no nodes. The returned frequency table is
    the word table itself, untouched: normalization stays over the whole
    corpus, and any standalone frequency applies whatever its rank.
    """
    ranked = sorted(word_freq.raw, key=lambda w: (-word_freq.raw[w], w))
    report: list[tuple[str, str]] = []
    nodes = list(net.nodes())
    for token in ranked[:cfg.top_k]:
        chars = tuple(token)
        if len(chars) < 2:
            continue
        if token in net:
            report.append((token, "id already present in the network"))
            continue
        missing = [ch for ch in chars if ch not in net]
        if missing:
            report.append((token, "unknown character %s" % missing[0]))
            continue
        nodes.append(GlyphNode(id=token, kind=GlyphKind.WORD, components=chars))
    return build_network(nodes), word_freq, report


def target_subset_curve(net: DecompositionNetwork, freq: FrequencyTable,
                        params: CostParams, target: TargetList, c0: float,
                        ) -> tuple[LearningCurve, LearningOrder, list[str]]:
    """Curve for learning just a target list within the wider language.

    The selection is the target's resolvable items plus closures;
    frequencies stay normalized against the full corpus, so a narrow
    target plateaus well below 1. Returns (curve, order, missing items).
    """
    missing = [item for item in target.items if item not in net]
    present = [item for item in target.items if item in net]
    table = centralities(net, freq, params)
    order = priority_topo_sort(net, table, expand_selection(net, present))
    cv = curve(net, order, c0, CostMode.HIERARCHAL)
    return cv, order, missing
