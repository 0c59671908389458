"""
Parsing and exploring a decomposition network
=============================================

"""

# The bundled mini corpus ships inside the package; every demo reads it
# the same way.
from importlib import resources

from glyphorder import build_network, parse_decompositions


def bundled(name):
    return resources.files("glyphorder").joinpath("data/" + name).read_text(encoding="utf-8")


# A decomposition file is four tab-separated columns: glyph, kind code,
# space-separated components, stroke count. Kinds are p (primitive
# character), pc (primitive component), c (compound), v (variant).
net = build_network(parse_decompositions(bundled("decompositions.tsv")))
print("parsed %d glyphs" % len(net))

# Each node remembers its direct components with multiplicity. 品 is
# three mouths, and all three count.
node = net.node("品")
print("品 components:", node.components, "strokes:", node.strokes)

# The closure is everything a glyph transitively needs, in depth-first
# preorder over the stored component order, deduplicated: 照 needs its
# phonetic 昭 (itself 日 plus 召, which is 刀 over 口) and the fire
# variant 灬, which descends from 火.
print("照 closure:", " ".join(net.closure("照")))

# Variants normally expand through to their base glyph; pass
# expand_variants=False to stop at the variant itself.
print("照 closure, variants opaque:", " ".join(net.closure("照", expand_variants=False)))

# Containment runs the other way: which glyphs use 口 directly, and
# which reach it through any depth?
print("direct containers of 口:", " ".join(sorted(net.containers("口"))))
users = sorted(g for g in net.ids() if "口" in net.closure(g))
print("all users of 口:", " ".join(users))

# Two glyphs are "sharers" when they have a direct component in common;
# with use_closure=True the comparison runs over full closures instead.
print("glyphs sharing a direct component with 知:",
      " ".join(sorted(net.sharers("知"))))
print("glyphs sharing any closure member with 知:",
      " ".join(sorted(net.sharers("知", use_closure=True))))
