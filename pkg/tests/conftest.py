"""Shared fixtures and independent oracles.

The oracles here are deliberately naive re-derivations of the contracts,
written before the library and kept frozen: a quadratic-time
transcription of the repair sweep that re-scans the list instead of
maintaining positions, a permutation-filter enumerator of topological
orders, and random network/centrality generators with fixed seeds.
"""

from __future__ import annotations

import random
from itertools import permutations
from pathlib import Path

import pytest

from glyphorder.costmodel import Centrality, CentralityTable, CostParams, centralities
from glyphorder.ingest import FrequencyTable, parse_decompositions, parse_frequencies
from glyphorder.network import DecompositionNetwork, GlyphKind, GlyphNode, build_network

DATA_DIR = Path(__file__).resolve().parent.parent / "src" / "glyphorder" / "data"

acceptance_results: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if acceptance_results:
        terminalreporter.section("acceptance criteria")
        for line in acceptance_results:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def mini_net() -> DecompositionNetwork:
    text = (DATA_DIR / "decompositions.tsv").read_text(encoding="utf-8")
    return build_network(parse_decompositions(text))


@pytest.fixture(scope="session")
def mini_freq() -> FrequencyTable:
    text = (DATA_DIR / "char_freq.tsv").read_text(encoding="utf-8")
    return parse_frequencies(text)


@pytest.fixture(scope="session")
def mini_word_freq() -> FrequencyTable:
    text = (DATA_DIR / "word_freq.tsv").read_text(encoding="utf-8")
    return parse_frequencies(text)


@pytest.fixture(scope="session")
def mini_table(mini_net, mini_freq) -> CentralityTable:
    return centralities(mini_net, mini_freq, CostParams())


def random_network(rng: random.Random, max_nodes: int = 30,
                   sparse: bool = False) -> DecompositionNetwork:
    """Random acyclic network over synthetic x-<i> ids.

    Nodes are generated in a topological order, each drawing components
    from its predecessors. `sparse` biases toward chains and trees (few
    distinct topological orders), which keeps exhaustive enumeration
    cheap for the brute-force comparisons.
    """
    n = rng.randint(2, max_nodes)
    ids = ["x-%d" % i for i in range(n)]
    nodes = []
    for i, glyph in enumerate(ids):
        pool = ids[:i]
        max_arity = min(len(pool), 3)
        if not pool:
            arity = 0
        elif sparse:
            arity = rng.choice([0, 1, 2, 2])
            arity = min(arity, max_arity)
        else:
            arity = rng.choice([0, 0, 1, 2, 2, 3])
            arity = min(arity, max_arity)
        if arity == 0:
            kind = rng.choice([GlyphKind.PRIMITIVE_CHARACTER, GlyphKind.PRIMITIVE_COMPONENT])
            nodes.append(GlyphNode(glyph, kind, (), rng.randint(0, 15)))
        elif arity == 1:
            nodes.append(GlyphNode(glyph, GlyphKind.VARIANT,
                                   (rng.choice(pool),), rng.randint(1, 15)))
        else:
            comps = rng.sample(pool, arity)
            if rng.random() < 0.15:
                comps.append(rng.choice(comps))
            nodes.append(GlyphNode(glyph, GlyphKind.COMPOUND,
                                   tuple(comps), rng.randint(2, 20)))
    return build_network(nodes)


def random_centralities(rng: random.Random, net: DecompositionNetwork,
                        distinct_eta: bool = True) -> CentralityTable:
    """Synthetic centralities: positive costs, frequencies summing to 1,
    eta consistent with f/c. Distinct etas by default so ranking ties
    never mask ordering differences."""
    ids = list(net.ids())
    if distinct_eta:
        etas = rng.sample(range(1, 10 * len(ids) + 1), len(ids))
    else:
        etas = [rng.randint(1, 5) for _ in ids]
    costs = [rng.choice([0.5, 1.0, 1.3, 2.0, 3.5]) for _ in ids]
    raw_f = [eta * c for eta, c in zip(etas, costs)]
    total = sum(raw_f)
    entries = {}
    for glyph, c, rf in zip(ids, costs, raw_f):
        f = rf / total
        entries[glyph] = Centrality(f=f, c=c, eta=f / c)
    return CentralityTable(entries=entries)


def table_from_counts(net: DecompositionNetwork, counts: dict[str, int],
                      params: CostParams | None = None) -> CentralityTable:
    freq = FrequencyTable.from_counts(counts)
    return centralities(net, freq, params or CostParams())


def oracle_sweep_from(net: DecompositionNetwork, table: CentralityTable,
                      initial: list[str]) -> tuple[list[str], set[str]]:
    """Naive transcription of the repair sweep, starting from `initial`.

    Re-scans the list for every position instead of maintaining an
    index, and records which glyphs were ever repositioned. The rules:
    process the list from its low-centrality end; pull each closure
    member found to the right of the current glyph to the leftmost spot
    where everything strictly to its left has eta >= its own; resume
    just left of the current glyph's final position.
    """
    order = list(initial)
    moved: set[str] = set()
    i = len(order) - 1
    while i >= 0:
        glyph = order[i]
        for member in net.closure(glyph):
            if order.index(member) <= order.index(glyph):
                continue
            moved.add(member)
            order.remove(member)
            q = 0
            for k in range(order.index(glyph) - 1, -1, -1):
                if table.eta(order[k]) >= table.eta(member):
                    q = k + 1
                    break
            order.insert(q, member)
        i = order.index(glyph) - 1
    return order, moved


def oracle_sweep(net: DecompositionNetwork, table: CentralityTable,
                 select) -> tuple[list[str], set[str]]:
    """Ranked selection plus closures, then the naive repair sweep."""
    pool: set[str] = set()
    for glyph in select:
        pool.add(glyph)
        pool.update(net.closure(glyph))
    return oracle_sweep_from(net, table, table.ranked(pool))


def enumerate_topological(net: DecompositionNetwork, pool: set[str]):
    """All hierarchal orders of `pool` by brute permutation filtering.

    Exponential in the worst way; callers keep pools tiny. Yields orders
    in lexicographic sequence order.
    """
    ids = sorted(pool)
    comps = {g: set(net.node(g).components) & pool for g in ids}
    for perm in permutations(ids):
        seen: set[str] = set()
        ok = True
        for glyph in perm:
            if not comps[glyph] <= seen:
                ok = False
                break
            seen.add(glyph)
        if ok:
            yield list(perm)
