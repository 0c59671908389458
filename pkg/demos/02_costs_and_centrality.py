"""
Learning costs, frequencies, and centrality
===========================================

"""

from importlib import resources

from glyphorder import (CostParams, build_network, centralities, cost,
                        parse_decompositions, parse_frequencies)


def bundled(name):
    return resources.files("glyphorder").joinpath("data/" + name).read_text(encoding="utf-8")


net = build_network(parse_decompositions(bundled("decompositions.tsv")))

# The cost model prices effort *given the components are known*. A
# primitive costs 1 plus gamma per stroke; a compound or word costs one
# combination step per extra component; a variant is a flat 1.
params = CostParams(gamma=0.1)
for glyph in ("口", "的", "茶", "品", "氵"):
    print("cost(%s) = %.2f" % (glyph, cost(net.node(glyph), params)))

# Marking glyphs as already known zeroes their cost; a suppression
# factor scales it instead (0.6 here: six tenths of the usual effort).
relearn = CostParams(gamma=0.1, known=frozenset({"口"}), suppression={"日": 0.6})
print("cost(口 | known) = %.2f" % cost(net.node("口"), relearn))
print("cost(日 | suppressed) = %.2f" % cost(net.node("日"), relearn))

# Frequencies come from a token\tcount table and are normalized over the
# whole file, including tokens that never resolve in the network.
freq = parse_frequencies(bundled("char_freq.tsv"))
print("frequency mass on 的: %.3f" % freq.get("的"))

# Centrality is frequency per unit cost: what a unit of effort buys.
# The ranking is by descending eta, frequency breaking ties.
table = centralities(net, freq, params)
print("top of the centrality ranking:")
for glyph in table.ranked()[:8]:
    entry = table[glyph]
    print("  %s  f=%.4f  c=%.2f  eta=%.4f" % (glyph, entry.f, entry.c, entry.eta))
