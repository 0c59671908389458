"""Decomposition network: the DAG of glyphs and their components.

A glyph is a character, a component without standalone usage, a variant
form, or a multi-character word. Edges point from a container to its
direct components; the network validates that every reference resolves,
that node shapes match their kinds, and that the graph is acyclic.
Closure queries (everything reachable through component edges) drive the
ordering and metrics modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator


class NetworkError(Exception):
    """Base class for network construction and lookup failures."""


class DuplicateId(NetworkError):
    """Two nodes share the same glyph id."""


class DanglingReference(NetworkError):
    """A components list names a glyph with no node."""


class InvalidNode(NetworkError):
    """A node's component list does not match its kind."""


class UnknownId(NetworkError):
    """A query named a glyph absent from the network."""


class CycleDetected(NetworkError):
    """The component graph contains a cycle.

    Attributes:
        cycle: witness path as a list of ids, first == last.
    """

    def __init__(self, cycle: list[str]):
        super().__init__("cycle: " + " -> ".join(cycle))
        self.cycle = cycle


class GlyphKind(Enum):
    """Role of a node in the decomposition network."""

    PRIMITIVE_CHARACTER = "p"
    PRIMITIVE_COMPONENT = "pc"
    COMPOUND = "c"
    VARIANT = "v"
    WORD = "w"

    @property
    def code(self) -> str:
        return self.value

    @classmethod
    def from_code(cls, code: str) -> "GlyphKind":
        try:
            return cls(code)
        except ValueError:
            raise ValueError("unknown glyph kind code: %r" % (code,)) from None

    @property
    def is_primitive(self) -> bool:
        return self in (GlyphKind.PRIMITIVE_CHARACTER, GlyphKind.PRIMITIVE_COMPONENT)


@dataclass(frozen=True)
class GlyphNode:
    """One glyph: identity, kind, direct components, stroke count.

    Components are ordered and may repeat (品 stores 口 three times);
    multiplicity matters for costs, not for reachability. `strokes` is 0
    when unavailable, which the cost model maps to a cost of exactly 1.
    """

    id: str
    kind: GlyphKind
    components: tuple[str, ...] = ()
    strokes: int = 0


def _check_shape(node: GlyphNode) -> None:
    n = len(node.components)
    if not node.id:
        raise InvalidNode("empty glyph id")
    if node.strokes < 0:
        raise InvalidNode("%s: negative stroke count" % node.id)
    if node.kind.is_primitive and n != 0:
        raise InvalidNode("%s: primitive with components" % node.id)
    if node.kind is GlyphKind.VARIANT and n != 1:
        raise InvalidNode("%s: variant must have exactly one component, got %d" % (node.id, n))
    if node.kind is GlyphKind.COMPOUND and n < 2:
        raise InvalidNode("%s: compound needs at least two components, got %d" % (node.id, n))
    if node.kind is GlyphKind.WORD and n < 2:
        raise InvalidNode("%s: word needs at least two characters, got %d" % (node.id, n))


class DecompositionNetwork:
    """Validated, immutable decomposition DAG. Build via `build_network`."""

    def __init__(self, nodes: dict[str, GlyphNode], containers: dict[str, tuple[str, ...]]):
        self._nodes = nodes
        self._containers = containers
        self._closure_cache: dict[tuple[str, bool], tuple[str, ...]] = {}

    def __contains__(self, glyph: str) -> bool:
        return glyph in self._nodes

    def __len__(self) -> int:
        return len(self._nodes)

    def ids(self) -> Iterator[str]:
        """All glyph ids in input order."""
        return iter(self._nodes)

    def nodes(self) -> Iterator[GlyphNode]:
        """All nodes in input order."""
        return iter(self._nodes.values())

    def node(self, glyph: str) -> GlyphNode:
        try:
            return self._nodes[glyph]
        except KeyError:
            raise UnknownId(glyph) from None

    def containers(self, glyph: str) -> tuple[str, ...]:
        """Nodes that list `glyph` as a direct component, in input order."""
        self.node(glyph)
        return self._containers.get(glyph, ())

    def closure(self, glyph: str, expand_variants: bool = True) -> tuple[str, ...]:
        """Everything reachable from `glyph` through component edges.

        Deterministic depth-first preorder over the stored component
        order, each id kept at its first visit, `glyph` itself excluded.
        With `expand_variants` false, component lists of variant nodes are
        not descended into (a variant's base form stays out of closures).
        """
        key = (glyph, expand_variants)
        cached = self._closure_cache.get(key)
        if cached is not None:
            return cached
        root = self.node(glyph)
        out: list[str] = []
        seen = {glyph}
        if root.kind is GlyphKind.VARIANT and not expand_variants:
            stack = []
        else:
            stack = [iter(root.components)]
        while stack:
            child = next(stack[-1], None)
            if child is None:
                stack.pop()
                continue
            if child in seen:
                continue
            seen.add(child)
            out.append(child)
            sub = self._closure_cache.get((child, expand_variants))
            if sub is not None:
                # A finished closure is a complete preorder of the child's
                # subtree, so splicing its unseen members preserves the
                # order a direct descent would produce.
                for member in sub:
                    if member not in seen:
                        seen.add(member)
                        out.append(member)
                continue
            node = self._nodes[child]
            if node.kind is GlyphKind.VARIANT and not expand_variants:
                continue
            stack.append(iter(node.components))
        result = tuple(out)
        self._closure_cache[key] = result
        return result

    def sharers(self, glyph: str, use_closure: bool = False) -> frozenset[str]:
        """Other nodes having a component in common with `glyph`.

        Default compares direct components only; `use_closure` compares
        full closures instead (any shared closure member counts), which is
        far less discriminating because common primitives are shared by
        almost everything.
        """
        node = self.node(glyph)
        found: set[str] = set()
        if not use_closure:
            for comp in node.components:
                found.update(self._containers.get(comp, ()))
        else:
            for member in self.closure(glyph):
                stack = [member]
                while stack:
                    cur = stack.pop()
                    for parent in self._containers.get(cur, ()):
                        if parent not in found:
                            found.add(parent)
                            stack.append(parent)
        found.discard(glyph)
        return frozenset(found)


def build_network(nodes: Iterable[GlyphNode]) -> DecompositionNetwork:
    """Validate nodes and assemble the network.

    Raises:
        DuplicateId: two nodes share an id.
        InvalidNode: component list inconsistent with the node's kind,
            or a word used as a component.
        DanglingReference: a component id resolves to no node.
        CycleDetected: component graph not acyclic; carries a witness.
    """
    by_id: dict[str, GlyphNode] = {}
    for node in nodes:
        _check_shape(node)
        if node.id in by_id:
            raise DuplicateId(node.id)
        by_id[node.id] = node

    containers: dict[str, list[str]] = {}
    for node in by_id.values():
        listed: set[str] = set()
        for comp in node.components:
            if comp not in by_id:
                raise DanglingReference("%s: unresolved component %s" % (node.id, comp))
            if by_id[comp].kind is GlyphKind.WORD:
                raise InvalidNode("%s: word %s used as component" % (node.id, comp))
            if comp not in listed:
                listed.add(comp)
                containers.setdefault(comp, []).append(node.id)

    _check_acyclic(by_id)
    frozen = {glyph: tuple(cs) for glyph, cs in containers.items()}
    return DecompositionNetwork(by_id, frozen)


def _check_acyclic(by_id: dict[str, GlyphNode]) -> None:
    """Depth-first cycle check; raises CycleDetected with a witness path."""
    WHITE, GRAY, BLACK = 0, 1, 2
    color = dict.fromkeys(by_id, WHITE)
    for start in by_id:
        if color[start] != WHITE:
            continue
        path = [start]
        stack = [iter(by_id[start].components)]
        color[start] = GRAY
        while stack:
            child = next(stack[-1], None)
            if child is None:
                color[path.pop()] = BLACK
                stack.pop()
                continue
            state = color[child]
            if state == BLACK:
                continue
            if state == GRAY:
                cycle = path[path.index(child):] + [child]
                raise CycleDetected(cycle)
            color[child] = GRAY
            path.append(child)
            stack.append(iter(by_id[child].components))
