"""Rooted trees and forests encoding twist tori.

A primitive twist torus is recorded as a rooted tree: the plain circle is a
single vertex, a k-fold twist is a bush with k+1 leaves, and an iterated
twist glues a bush onto a leaf of the tree built so far.  Products of
primitive tori are forests.  Planar order is kept while a twist word is
applied (the gluing rule counts leaves from the left) but isomorphism is of
abstract rooted trees, so children order is forgotten by canonical forms.

Text grammar (whitespace insignificant)::

    forest := factor ("*" factor)*
    factor := tree | word
    tree   := "L" | "point" | "(" tree+ ")"
    word   := "twist(" k1 (";" kj "@" lj)* ")"
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import CapExceeded, InvalidLeafIndex, ParseError

DEFAULT_ENUMERATION_CAP = 16


@dataclass(frozen=True)
class RootedTree:
    """A finite rooted tree; an empty children tuple is a leaf.

    The single-vertex tree stands for the plain circle factor.
    """

    children: tuple["RootedTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    @property
    def leaf_count(self) -> int:
        if not self.children:
            return 1
        return sum(c.leaf_count for c in self.children)

    @property
    def vertex_count(self) -> int:
        return 1 + sum(c.vertex_count for c in self.children)

    def __str__(self) -> str:
        return print_tree(self)


LEAF = RootedTree()


def bush(leaves: int) -> RootedTree:
    """Root with `leaves` leaf children (the tree of a single k-fold twist, leaves = k+1)."""
    if leaves < 1:
        raise ValueError("a bush needs at least one leaf")
    return RootedTree((LEAF,) * leaves)


@dataclass(frozen=True)
class TwistWord:
    """An iterated-twist recipe: steps (k_j, l_j), where step j glues a bush
    with k_j + 1 leaves onto leaf l_j (1-based, counted from the left).

    The first step must have l_1 = 1; step j may address leaves
    1 .. k_1 + ... + k_{j-1} + 1.  The empty word is the plain circle.
    """

    steps: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        leaves = 1
        for j, (k, l) in enumerate(self.steps, start=1):
            if k < 1:
                raise ValueError(f"twist multiplicity k_{j} = {k} must be >= 1")
            if j == 1 and l != 1:
                raise InvalidLeafIndex(f"l_1 = {l}; the first twist must act on leaf 1")
            if not 1 <= l <= leaves:
                raise InvalidLeafIndex(
                    f"l_{j} = {l} out of range 1..{leaves} for step {j}"
                )
            leaves += k

    @property
    def dimension(self) -> int:
        return 1 + sum(k for k, _ in self.steps)


@dataclass(frozen=True)
class ProductSpec:
    """A product of primitive twist tori, each given by a twist word."""

    factors: tuple[TwistWord, ...]

    def __post_init__(self):
        if not self.factors:
            raise ValueError("a product needs at least one factor")

    def to_forest(self) -> "RootedForest":
        return RootedForest(tuple(word_to_tree(w) for w in self.factors))


class RootedForest:
    """An unordered multiset of rooted trees; dimension = total leaf count.

    Trees are stored sorted by their planar serialization, so structural
    equality is multiset equality of planar trees.
    """

    __slots__ = ("trees",)

    def __init__(self, trees):
        trees = tuple(trees)
        if not trees:
            raise ValueError("a forest needs at least one tree")
        object.__setattr__(self, "trees", tuple(sorted(trees, key=print_tree)))

    @property
    def dimension(self) -> int:
        return sum(t.leaf_count for t in self.trees)

    def __eq__(self, other):
        return isinstance(other, RootedForest) and self.trees == other.trees

    def __hash__(self):
        return hash(self.trees)

    def __repr__(self):
        return f"RootedForest({print_forest(self)!r})"

    def __str__(self):
        return print_forest(self)


def word_to_tree(word: TwistWord) -> RootedTree:
    """Apply the gluing rule: start from the first bush, then replace the
    l_j-th leaf (left to right) by a bush with k_j + 1 leaves."""
    if not word.steps:
        return LEAF
    (k1, _), *rest = word.steps
    tree = bush(k1 + 1)
    for k, l in rest:
        tree = _replace_leaf(tree, l - 1, bush(k + 1))
    return tree


def _replace_leaf(tree: RootedTree, index: int, replacement: RootedTree) -> RootedTree:
    if tree.is_leaf:
        if index != 0:
            raise InvalidLeafIndex(f"leaf index {index} out of range")
        return replacement
    kids = list(tree.children)
    for i, child in enumerate(kids):
        size = child.leaf_count
        if index < size:
            kids[i] = _replace_leaf(child, index, replacement)
            return RootedTree(tuple(kids))
        index -= size
    raise InvalidLeafIndex("leaf index beyond tree")


# ---------------------------------------------------------------------------
# canonical form and isomorphism


def canonical_form(tree: RootedTree) -> str:
    """Planarity-free canonical string: children serialized recursively and sorted.

    Two trees have equal canonical form iff they are isomorphic as abstract
    rooted trees.
    """
    if tree.is_leaf:
        return "()"
    return "(" + ",".join(sorted(canonical_form(c) for c in tree.children)) + ")"


def forest_canonical_form(forest: RootedForest) -> tuple[str, ...]:
    return tuple(sorted(canonical_form(t) for t in forest.trees))


def is_isomorphic(f1, f2) -> bool:
    """Forest isomorphism: a bijection of trees matching canonical forms."""
    if isinstance(f1, RootedTree):
        f1 = RootedForest((f1,))
    if isinstance(f2, RootedTree):
        f2 = RootedForest((f2,))
    return forest_canonical_form(f1) == forest_canonical_form(f2)


def is_ample(tree: RootedTree) -> bool:
    """True for the single point, and for trees with root valency >= 2 whose
    other internal vertices have valency >= 3 (the parent edge counts)."""
    if tree.is_leaf:
        return True
    if len(tree.children) < 2:
        return False
    return all(_is_ample_subtree(c) for c in tree.children)


def _is_ample_subtree(tree: RootedTree) -> bool:
    if tree.is_leaf:
        return True
    if len(tree.children) < 2:
        return False
    return all(_is_ample_subtree(c) for c in tree.children)


# ---------------------------------------------------------------------------
# enumeration


def enumerate_ample_trees(n: int, cap: int = DEFAULT_ENUMERATION_CAP) -> list[RootedTree]:
    """All ample rooted trees with exactly n leaves, one per isomorphism
    class, sorted by canonical form."""
    if n < 1:
        raise ValueError("leaf count must be >= 1")
    if n > cap:
        raise CapExceeded(f"{n} leaves exceeds the enumeration cap {cap}")
    return list(_ample_trees(n))


@functools.lru_cache(maxsize=None)
def _ample_trees(n: int) -> tuple[RootedTree, ...]:
    if n == 1:
        return (LEAF,)
    # Candidate subtrees under the root: a leaf, or any smaller ample tree
    # with >= 2 leaves (its root then has valency >= 3 inside the new tree).
    candidates: list[tuple[int, RootedTree]] = [(1, LEAF)]
    for m in range(2, n):
        candidates.extend((m, t) for t in _ample_trees(m))

    found: list[RootedTree] = []

    def extend(start: int, remaining: int, chosen: list[RootedTree]):
        if remaining == 0:
            if len(chosen) >= 2:
                found.append(RootedTree(tuple(chosen)))
            return
        for idx in range(start, len(candidates)):
            size, sub = candidates[idx]
            if size > remaining:
                break
            chosen.append(sub)
            extend(idx, remaining - size, chosen)
            chosen.pop()

    extend(0, n, [])
    return tuple(sorted(found, key=canonical_form))


@functools.lru_cache(maxsize=None)
def count_ample_trees(n: int) -> int:
    """Number of ample rooted trees with n leaves, counted without building
    them (multiset counting over partitions; cross-checks the enumerator)."""
    if n < 1:
        raise ValueError("leaf count must be >= 1")
    if n == 1:
        return 1
    total = 0
    for partition in _partitions_with_min_parts(n, 2):
        ways = 1
        for part, mult in partition:
            types = 1 if part == 1 else count_ample_trees(part)
            ways *= math.comb(types + mult - 1, mult)
        total += ways
    return total


def _partitions_with_min_parts(n: int, min_parts: int):
    """Partitions of n (as (part, multiplicity) tuples, parts descending)
    having at least `min_parts` parts."""
    results = []

    def rec(remaining: int, max_part: int, acc: list[int]):
        if remaining == 0:
            if len(acc) >= min_parts:
                grouped = []
                for p in acc:
                    if grouped and grouped[-1][0] == p:
                        grouped[-1] = (p, grouped[-1][1] + 1)
                    else:
                        grouped.append((p, 1))
                results.append(tuple(grouped))
            return
        for part in range(min(max_part, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(n, n - 1 if n > 1 else 1, [])
    return results


# ---------------------------------------------------------------------------
# printing


def print_tree(tree: RootedTree) -> str:
    if tree.is_leaf:
        return "L"
    return "(" + " ".join(print_tree(c) for c in tree.children) + ")"


def print_forest(forest: RootedForest) -> str:
    return " * ".join(print_tree(t) for t in forest.trees)


def print_word(word: TwistWord) -> str:
    if not word.steps:
        return "L"
    (k1, _), *rest = word.steps
    parts = [str(k1)] + [f"{k}@{l}" for k, l in rest]
    return "twist(" + ";".join(parts) + ")"


# ---------------------------------------------------------------------------
# parsing

_TOKEN_NAMES = ("L", "point", "(", ")", "*", ";", "@", "twist", "integer")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def error(self, expected):
        found = self.peek() or "end of input"
        raise ParseError(f"unexpected {found!r}", self.pos, expected)

    def eat(self, literal: str):
        self._skip_ws()
        if not self.text.startswith(literal, self.pos):
            self.error({literal})
        self.pos += len(literal)

    def try_eat(self, literal: str) -> bool:
        self._skip_ws()
        if self.text.startswith(literal, self.pos):
            # keyword tokens must not run into a longer identifier
            end = self.pos + len(literal)
            if literal.isalpha() and end < len(self.text) and self.text[end].isalpha():
                return False
            self.pos += len(literal)
            return True
        return False

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error({"integer"})
        return int(self.text[start:self.pos])

    def factor(self) -> RootedTree:
        self._skip_ws()
        if self.try_eat("twist"):
            return word_to_tree(self.word_body())
        return self.tree()

    def word_body(self) -> TwistWord:
        self.eat("(")
        steps = [(self.integer(), 1)]
        while self.try_eat(";"):
            k = self.integer()
            self.eat("@")
            l = self.integer()
            steps.append((k, l))
        self.eat(")")
        return TwistWord(tuple(steps))

    def tree(self) -> RootedTree:
        self._skip_ws()
        if self.try_eat("L") or self.try_eat("point"):
            return LEAF
        if self.try_eat("("):
            children = [self.tree()]
            while True:
                self._skip_ws()
                if self.try_eat(")"):
                    return RootedTree(tuple(children))
                if self.peek() in ("", "*"):
                    self.error({")", "L", "point", "("})
                children.append(self.tree())
        self.error({"L", "point", "("})

    def forest(self) -> RootedForest:
        trees = [self.factor()]
        while self.try_eat("*"):
            trees.append(self.factor())
        self._skip_ws()
        if self.pos != len(self.text):
            self.error({"*", "end of input"})
        return RootedForest(tuple(trees))


def parse_forest(text: str) -> RootedForest:
    """Parse a forest expression; factors may be tree literals or twist words."""
    return _Parser(text).forest()


def parse_word(text: str) -> TwistWord:
    """Parse a single `twist(...)` word (or `L`/`point` for the circle)."""
    p = _Parser(text)
    p._skip_ws()
    if p.try_eat("twist"):
        word = p.word_body()
    elif p.try_eat("L") or p.try_eat("point"):
        word = TwistWord(())
    else:
        p.error({"twist", "L", "point"})
    p._skip_ws()
    if p.pos != len(text):
        p.error({"end of input"})
    return word
