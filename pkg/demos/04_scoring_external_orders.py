"""
Scoring a curriculum you did not generate
=========================================

"""

from importlib import resources

from glyphorder import (CostMode, CostParams, build_network, centralities,
                        cluster_stats, curve, external_order, parse_decompositions,
                        parse_frequencies, parse_order, priority_topo_sort,
                        validate_topological)


def bundled(name):
    return resources.files("glyphorder").joinpath("data/" + name).read_text(encoding="utf-8")


net = build_network(parse_decompositions(bundled("decompositions.tsv")))
freq = parse_frequencies(bundled("char_freq.tsv"))
table = centralities(net, freq, CostParams())

# rote_order.txt plays the role of a published textbook sequence: one
# glyph per line, chosen for usefulness rather than structure.
rote_ids = parse_order(bundled("rote_order.txt"))
rote = external_order(table, rote_ids)
print("external order:", " ".join(rote_ids))

# It is not hierarchal; the violations say which component comes too
# late (or is absent outright).
for v in validate_topological(net, rote)[:5]:
    print("violation: %s needs %s%s" % (v.compound, v.component,
                                        " (missing)" if v.missing else ""))

# Hierarchal accounting would be dishonest here, so the curve charges
# each item for its still-unlearned closure at first use.
lookup = {g: table[g].c for g in net.ids()}
cv = curve(net, rote, c0=20.0, mode=CostMode.CHARGE_UNLEARNED, cost_lookup=lookup)
print("charged curve: learned=%d final=%.3f mean=%.3f"
      % (cv.n_learned, cv.final_efficiency, cv.mean_efficiency))

# Clustering diagnostics: how far does a learner look back for the
# nearest direct component (d1), and how far to the nearest glyph
# sharing one (d2)? Averages run over prefixes of the order and skip
# positions where the quantity is undefined; on full corpora only rows
# past a few hundred items are worth reading. Comparing orders over the
# same pool, the optimized one keeps components close at hand.
from glyphorder import pure_frequency_order

own = priority_topo_sort(net, table, set(net.ids()))
by_freq = pure_frequency_order(table, set(net.ids()))
show = lambda v: "n/a" if v is None else "%.2f" % v
for label, order in (("optimized", own), ("pure frequency", by_freq)):
    last = cluster_stats(net, order).rows[-1]
    print("%s: avg d1=%s avg d2=%s over %d items"
          % (label, show(last.avg_d1), show(last.avg_d2), last.n))
