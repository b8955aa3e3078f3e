"""Rooted plane trees and their bijection with polygon dissections.

Trees serialize as balanced parentheses in preorder: a leaf is ``()``, a root
with two leaves is ``(()())``.

The bijection roots every dissection at the boundary edge ``(m-1, 0)``.  The
face on a chord ``(i, j)`` has vertices ``i = u_0 < ... < u_k = j``; its node
gets one child per side ``(u_t, u_{t+1})``, in that (counterclockwise) order.
A side that is a boundary edge becomes a leaf and a diagonal becomes a subtree.
Reading leaves left to right therefore walks boundary edges ``(0,1), (1,2), ...``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from fusscat.catalan import DowndegreeSequence
from fusscat.geometry import Diagonal, Dissection


@dataclass(frozen=True)
class PlaneTree:
    children: tuple[PlaneTree, ...] = ()

    @property
    def downdegree(self) -> int:
        return len(self.children)

    def nodes(self) -> Iterator[PlaneTree]:
        """Preorder traversal."""
        stack = [self]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    @property
    def size(self) -> int:
        return sum(1 for _ in self.nodes())

    def serialize(self) -> str:
        return "(" + "".join(c.serialize() for c in self.children) + ")"

    __str__ = serialize

    @classmethod
    def parse(cls, text: str) -> PlaneTree:
        text = text.strip()
        stack: list[list[PlaneTree]] = []
        result = None
        for pos, ch in enumerate(text):
            if result is not None:
                raise ValueError(f"trailing characters after tree at position {pos}: {text!r}")
            if ch == "(":
                stack.append([])
            elif ch == ")":
                if not stack:
                    raise ValueError(f"unbalanced ')' at position {pos}: {text!r}")
                node = cls(tuple(stack.pop()))
                if stack:
                    stack[-1].append(node)
                else:
                    result = node
            else:
                raise ValueError(f"unexpected character {ch!r} in tree {text!r}")
        if result is None:
            raise ValueError(f"incomplete tree {text!r}")
        return result

    @classmethod
    def from_preorder_degrees(cls, degrees: Sequence[int]) -> PlaneTree:
        """Rebuild a tree from the child counts of its nodes in preorder."""
        pos = 0

        def build() -> PlaneTree:
            nonlocal pos
            if pos >= len(degrees):
                raise ValueError(f"degree word {tuple(degrees)} ends early")
            d = degrees[pos]
            pos += 1
            return cls(tuple(build() for _ in range(d)))

        tree = build()
        if pos != len(degrees):
            raise ValueError(f"degree word {tuple(degrees)} has extra entries")
        return tree

    def preorder_degrees(self) -> tuple[int, ...]:
        return tuple(n.downdegree for n in self.nodes())


def downdegree_sequence(t: PlaneTree) -> DowndegreeSequence:
    hist = Counter(t.preorder_degrees())
    return DowndegreeSequence(tuple(hist.get(i, 0) for i in range(max(hist) + 1)))


def _as_sequence(r: DowndegreeSequence | Sequence[int]) -> DowndegreeSequence:
    return r if isinstance(r, DowndegreeSequence) else DowndegreeSequence(tuple(r))


def enumerate_trees(r: DowndegreeSequence | Sequence[int]) -> list[PlaneTree]:
    """Every plane tree with downdegree sequence ``r``, sorted by serialization.

    Walks the distinct preorder degree words of the multiset ``r``, keeping
    ``sum(deg - 1)`` nonnegative until the final vertex brings it to -1.
    """
    r = _as_sequence(r)
    remaining = list(r.counts)
    total = r.vertices
    word: list[int] = []
    out: list[PlaneTree] = []

    def walk(open_slots: int) -> None:
        # open_slots: children still owed to already placed vertices
        if len(word) == total:
            out.append(PlaneTree.from_preorder_degrees(word))
            return
        for deg in range(len(remaining) - 1, -1, -1):
            if not remaining[deg]:
                continue
            slots = open_slots - 1 + deg
            if len(word) + 1 == total:
                if slots != 0:
                    continue
            elif slots < 1:
                continue
            remaining[deg] -= 1
            word.append(deg)
            walk(slots)
            word.pop()
            remaining[deg] += 1

    walk(1)
    out.sort(key=PlaneTree.serialize)
    return out


@lru_cache(maxsize=None)
def _forests(vertices: int) -> tuple[tuple[PlaneTree, ...], ...]:
    if vertices == 0:
        return ((),)
    out = []
    for first in range(1, vertices + 1):
        for head in all_plane_trees(first):
            for tail in _forests(vertices - first):
                out.append((head,) + tail)
    return tuple(out)


@lru_cache(maxsize=None)
def all_plane_trees(vertices: int) -> tuple[PlaneTree, ...]:
    """Every plane tree on the given number of vertices, via ordered forests."""
    if vertices < 1:
        raise ValueError("a tree needs at least one vertex")
    return tuple(PlaneTree(f) for f in _forests(vertices - 1))


def enumerate_trees_naive(r: DowndegreeSequence | Sequence[int]) -> list[PlaneTree]:
    r = _as_sequence(r)
    found = [t for t in all_plane_trees(r.vertices) if downdegree_sequence(t) == r]
    return sorted(found, key=PlaneTree.serialize)


def dissection_to_tree(d: Dissection) -> PlaneTree:
    m = d.m
    if m == 2:
        return PlaneTree()
    neighbours: dict[int, list[int]] = {v: [v + 1] for v in range(m - 1)}
    for i, j in d.diagonals:
        neighbours[i].append(j)
    for v in neighbours:
        neighbours[v].sort(reverse=True)

    def chord(i: int, j: int) -> PlaneTree:
        children = []
        u = i
        while u != j:
            v = next(w for w in neighbours[u] if w <= j and (u, w) != (i, j))
            children.append(PlaneTree() if v == u + 1 else chord(u, v))
            u = v
        return PlaneTree(tuple(children))

    return chord(0, m - 1)


def tree_to_dissection(t: PlaneTree) -> Dissection:
    bad = next((n for n in t.nodes() if n.downdegree == 1), None)
    if bad is not None:
        raise ValueError(
            f"tree {t.serialize()} has a vertex with exactly one child; "
            "only trees without downdegree-1 vertices come from dissections"
        )
    if not t.children:
        return Dissection(2)
    diagonals: list[Diagonal] = []
    vertex = 0

    def place(node: PlaneTree, is_root: bool) -> None:
        nonlocal vertex
        if not node.children:
            vertex += 1
            return
        start = vertex
        for child in node.children:
            place(child, False)
        if not is_root:
            diagonals.append(Diagonal(start, vertex))

    place(t, True)
    return Dissection(vertex + 1, tuple(diagonals))
