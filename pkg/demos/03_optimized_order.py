"""
Optimizing a learning order and reading its curve
=================================================

"""

from importlib import resources

from glyphorder import (CostMode, CostParams, build_network, centralities, curve,
                        parse_decompositions, parse_frequencies, priority_topo_sort,
                        pure_frequency_order, validate_topological)


def bundled(name):
    return resources.files("glyphorder").joinpath("data/" + name).read_text(encoding="utf-8")


net = build_network(parse_decompositions(bundled("decompositions.tsv")))
freq = parse_frequencies(bundled("char_freq.tsv"))
table = centralities(net, freq, CostParams())

# Rank everything by centrality, then repair the ranking into a
# hierarchal order with as little disturbance as possible: components
# are pulled just left of the glyphs that need them.
order = priority_topo_sort(net, table, set(net.ids()))
print("optimized order:", " ".join(order.ids()))
print("violations:", len(validate_topological(net, order)))

# The order induces a step curve F(C): cumulative frequency against
# cumulative cost, each item credited once fully paid. Final efficiency
# is F at the horizon; mean efficiency averages F over the whole budget.
for c0 in (6.0, 12.0, 24.0):
    cv = curve(net, order, c0)
    print("C0=%4.1f  learned=%2d  final=%.3f  mean=%.3f"
          % (c0, cv.n_learned, cv.final_efficiency, cv.mean_efficiency))

# The obvious baseline learns by raw frequency and ignores structure.
# That order is not hierarchal, so each item is charged for its whole
# unlearned closure up front, and the components are paid again when
# their own turn comes: the curve falls behind.
rote = pure_frequency_order(table, set(net.ids()))
lookup = {g: table[g].c for g in net.ids()}
for c0 in (6.0, 12.0, 24.0):
    cv = curve(net, rote, c0, mode=CostMode.CHARGE_UNLEARNED, cost_lookup=lookup)
    print("pure frequency, C0=%4.1f  learned=%2d  final=%.3f  mean=%.3f"
          % (c0, cv.n_learned, cv.final_efficiency, cv.mean_efficiency))
