"""Planar rooted binary trees with labeled vertices and labeled internal
edges: the basis of the free dendriform algebra.

Trees are immutable; size, hash and the canonical sort key are computed once
at construction.  An edge label is present exactly when the subtree on that
side is nonempty.  The canonical total order is vertex count, then shape,
then vertex labels, then edge labels (all in preorder).

Text form: ``e`` is the empty tree; ``x[]`` a single vertex; otherwise
``label[edge: tree, edge: tree]`` with either side omissible, e.g.
``x[, a: y[]]`` for a root x whose only child is y, attached right via a.
"""

from random import Random

from .errors import TreeParseError

_EMPTY_KEY = (0, "", (), ())


class DecoratedTree:
    __slots__ = ("label", "left", "left_edge", "right", "right_edge", "size", "_key", "_hash")

    def __init__(self, label, left=None, left_edge=None, right=None, right_edge=None):
        left = EMPTY if left is None else left
        right = EMPTY if right is None else right
        if label is None:  # the empty tree; constructed once below
            if EMPTY is not None:
                raise ValueError("use trees.EMPTY for the empty tree")
            object.__setattr__(self, "label", None)
            object.__setattr__(self, "left", self)
            object.__setattr__(self, "left_edge", None)
            object.__setattr__(self, "right", self)
            object.__setattr__(self, "right_edge", None)
            object.__setattr__(self, "size", 0)
            object.__setattr__(self, "_key", _EMPTY_KEY)
            object.__setattr__(self, "_hash", hash(_EMPTY_KEY))
            return
        if (left is EMPTY) != (left_edge is None) or (right is EMPTY) != (right_edge is None):
            raise ValueError("edge labels must be present exactly on edges to nonempty subtrees")
        object.__setattr__(self, "label", str(label))
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "left_edge", None if left_edge is None else str(left_edge))
        object.__setattr__(self, "right", right)
        object.__setattr__(self, "right_edge", None if right_edge is None else str(right_edge))
        object.__setattr__(self, "size", 1 + left.size + right.size)
        lk, rk = left._key, right._key
        shape = f"({lk[1]}|{rk[1]})"
        vlabels = (self.label,) + lk[2] + rk[2]
        elabels = ()
        if left is not EMPTY:
            elabels += (self.left_edge,) + lk[3]
        if right is not EMPTY:
            elabels += (self.right_edge,) + rk[3]
        key = (self.size, shape, vlabels, elabels)
        object.__setattr__(self, "_key", key)
        object.__setattr__(self, "_hash", hash(key))

    def __setattr__(self, name, value):
        raise AttributeError("DecoratedTree is immutable")

    def is_empty(self):
        return self.size == 0

    def sort_key(self):
        return self._key

    def __eq__(self, other):
        return isinstance(other, DecoratedTree) and self._key == other._key

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self._key < other._key

    def __le__(self, other):
        return self._key <= other._key

    def __repr__(self):
        return f"DecoratedTree({tree_print(self)!r})"


EMPTY = None
EMPTY = DecoratedTree(None)


def node(label, left=None, left_edge=None, right=None, right_edge=None):
    return DecoratedTree(label, left, left_edge, right, right_edge)


def leaf(label):
    return DecoratedTree(label)


def tree_print(t):
    if t.size == 0:
        return "e"
    if t.left is EMPTY and t.right is EMPTY:
        return f"{t.label}[]"
    lpart = "" if t.left is EMPTY else f"{t.left_edge}: {tree_print(t.left)}"
    rpart = "" if t.right is EMPTY else f"{t.right_edge}: {tree_print(t.right)}"
    return f"{t.label}[{lpart}, {rpart}]"


class _Parser:
    def __init__(self, text, vertex_labels=None, edge_labels=None):
        self.text = text
        self.pos = 0
        self.vertex_labels = None if vertex_labels is None else set(vertex_labels)
        self.edge_labels = None if edge_labels is None else set(edge_labels)

    def error(self, message):
        raise TreeParseError(message, self.pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def name(self):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            self.error("expected a label")
        return self.text[start:self.pos]

    def tree(self):
        label = self.name()
        if label == "e" and self.peek() != "[":
            return EMPTY
        if self.vertex_labels is not None and label not in self.vertex_labels:
            self.error(f"undeclared vertex label {label!r}")
        self.expect("[")
        left, left_edge = self.subtree()
        if self.peek() == ",":
            self.pos += 1
            right, right_edge = self.subtree()
        else:
            right, right_edge = EMPTY, None
        self.expect("]")
        return DecoratedTree(label, left, left_edge, right, right_edge)

    def subtree(self):
        if self.peek() in (",", "]"):
            return EMPTY, None
        edge = self.name()
        if self.edge_labels is not None and edge not in self.edge_labels:
            self.error(f"undeclared edge label {edge!r}")
        self.expect(":")
        child = self.tree()
        if child is EMPTY:
            self.error("an edge label requires a nonempty subtree")
        return child, edge


def tree_parse(text, vertex_labels=None, edge_labels=None):
    """Parse the text form; optional label sets make undeclared labels an
    error.  The whole input must be consumed."""
    parser = _Parser(text, vertex_labels, edge_labels)
    result = parser.tree()
    parser.skip_ws()
    if parser.pos != len(text):
        parser.error("trailing input after tree")
    return result


def random_tree_from(rng, vertex_labels, edge_labels, max_vertices):
    """One random nonempty tree: size uniform in 1..max_vertices, shape by
    uniform recursive splitting, labels uniform.  Integer randomness only."""
    vertex_labels = list(vertex_labels)
    edge_labels = list(edge_labels)

    def build(n):
        label = vertex_labels[rng.randrange(len(vertex_labels))]
        if n == 1:
            return leaf(label)
        k = rng.randrange(n)  # vertices in the left subtree
        left = build(k) if k else EMPTY
        right = build(n - 1 - k) if n - 1 - k else EMPTY
        return DecoratedTree(
            label,
            left,
            edge_labels[rng.randrange(len(edge_labels))] if k else None,
            right,
            edge_labels[rng.randrange(len(edge_labels))] if n - 1 - k else None,
        )

    return build(1 + rng.randrange(max_vertices))


def random_tree(x_count, s_count, max_vertices, seed):
    """Seeded sampler over generic labels x0..x{n-1} / s0..s{m-1}."""
    if max_vertices < 1:
        raise ValueError("max_vertices must be >= 1")
    rng = Random(seed)
    return random_tree_from(
        rng,
        [f"x{i}" for i in range(x_count)],
        [f"s{i}" for i in range(s_count)],
        max_vertices,
    )
