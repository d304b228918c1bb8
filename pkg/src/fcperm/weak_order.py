"""Right weak order on S_n and its fully commutative subposet.

Covers go up by one right multiplication at an ascent.  The fully
commutative permutations are downward closed under covers (sorting an
adjacent descent removes an inversion pair and cannot create a decreasing
triple), so the whole subposet is reachable from the identity; that is how
``build_fc_poset`` enumerates it without touching the rest of S_n.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Mapping

from .crowding import classify, is_minimal_crowded_direct
from .patterns import is_fully_commutative
from .permutations import Permutation
from .words import BoundExceeded

DEFAULT_POSET_BOUND = 9
DEFAULT_IDEAL_LENGTH_BOUND = 24


@dataclass(frozen=True)
class CoverEdge:
    """upper = lower * s_index, with the length going up by one."""

    lower: Permutation
    upper: Permutation
    index: int


def up_covers(w: Permutation) -> list[CoverEdge]:
    """One edge per ascent.

    >>> [e.index for e in up_covers(Permutation.identity(4))]
    [1, 2, 3]
    """
    return [CoverEdge(w, w.times(i), i) for i in sorted(w.ascents())]


def down_covers(w: Permutation) -> list[CoverEdge]:
    """One edge per descent; the lower end is w with the descent sorted."""
    return [CoverEdge(w.times(d), w, d) for d in sorted(w.descents())]


def inversion_pairs(w: Permutation) -> frozenset[tuple[int, int]]:
    """Value pairs (a, b), a < b, appearing out of order in w."""
    image = w.image
    n = len(image)
    out = set()
    for p in range(n):
        for q in range(p + 1, n):
            if image[p] > image[q]:
                out.add((image[q], image[p]))
    return frozenset(out)


def right_weak_leq(v: Permutation, w: Permutation) -> bool:
    """Right weak order, as containment of inversion-pair sets.

    Covers add exactly one value pair, so reachability downward is the same
    as set containment.
    """
    if v.n != w.n:
        raise ValueError(f"degree mismatch: {v.n} vs {w.n}")
    return inversion_pairs(v) <= inversion_pairs(w)


def left_weak_leq(v: Permutation, w: Permutation) -> bool:
    """Left weak order, via inverses.

    >>> left_weak_leq(Permutation.identity(5), Permutation((5, 1, 3, 4, 2)))
    True
    """
    if v.n != w.n:
        raise ValueError(f"degree mismatch: {v.n} vs {w.n}")
    return right_weak_leq(v.inverse(), w.inverse())


def principal_ideal(
    w: Permutation, bound: int = DEFAULT_IDEAL_LENGTH_BOUND
) -> set[Permutation]:
    """Everything below w in the right weak order, by downward search.

    >>> len(principal_ideal(Permutation((4, 3, 2, 1))))
    24
    """
    length = w.length()
    if length > bound:
        raise BoundExceeded(
            f"length {length} exceeds bound {bound}; raise the bound to enumerate"
        )
    seen = {w}
    queue = deque([w])
    while queue:
        current = queue.popleft()
        for d in current.descents():
            lower = current.times(d)
            if lower not in seen:
                seen.add(lower)
                queue.append(lower)
    return seen


@dataclass(frozen=True)
class FcPoset:
    """The fully commutative permutations of S_n under the right weak order."""

    n: int
    elements: tuple[Permutation, ...]
    edges: tuple[CoverEdge, ...]
    up: Mapping[Permutation, tuple[CoverEdge, ...]]
    down: Mapping[Permutation, tuple[CoverEdge, ...]]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "nodes": [w.to_text() for w in self.elements],
            "edges": [
                [e.lower.to_text(), e.upper.to_text(), e.index] for e in self.edges
            ],
        }


def fc_elements(n: int, bound: int = DEFAULT_POSET_BOUND) -> list[Permutation]:
    """All fully commutative permutations of S_n, sorted lexicographically.

    Found by searching upward from the identity; downward closure of full
    commutativity guarantees nothing is missed.
    """
    if n > bound:
        raise BoundExceeded(
            f"degree {n} exceeds bound {bound}; raise the bound to enumerate"
        )
    identity = Permutation.identity(n)
    seen = {identity}
    queue = deque([identity])
    while queue:
        current = queue.popleft()
        for i in current.ascents():
            upper = current.times(i)
            if upper not in seen and is_fully_commutative(upper):
                seen.add(upper)
                queue.append(upper)
    return sorted(seen, key=lambda w: w.image)


def build_fc_poset(n: int, bound: int = DEFAULT_POSET_BOUND) -> FcPoset:
    """Materialize the fully commutative subposet with all cover edges.

    >>> build_fc_poset(3).elements
    (Permutation('123'), Permutation('132'), Permutation('213'), Permutation('231'), Permutation('312'))
    """
    elements = fc_elements(n, bound=bound)
    members = set(elements)
    edges = []
    up: dict[Permutation, list[CoverEdge]] = {w: [] for w in elements}
    down: dict[Permutation, list[CoverEdge]] = {w: [] for w in elements}
    for w in elements:
        for edge in up_covers(w):
            if edge.upper in members:
                edges.append(edge)
                up[w].append(edge)
                down[edge.upper].append(edge)
    return FcPoset(
        n=n,
        elements=tuple(elements),
        edges=tuple(edges),
        up={w: tuple(es) for w, es in up.items()},
        down={w: tuple(es) for w, es in down.items()},
    )


def uncrowded_frontier(
    n: int, bound: int = DEFAULT_POSET_BOUND
) -> tuple[tuple[Permutation, ...], tuple[Permutation, ...]]:
    """Maximal uncrowded and minimal crowded elements of the subposet.

    >>> uncrowded_frontier(5)[1]
    ()
    """
    poset = build_fc_poset(n, bound=bound)
    crowded = {w: classify(w).crowded for w in poset.elements}
    maximal_uncrowded = tuple(
        w
        for w in poset.elements
        if not crowded[w]
        and all(crowded[e.upper] for e in poset.up[w])
    )
    minimal_crowded = tuple(
        w
        for w in poset.elements
        if crowded[w]
        and all(not crowded[e.lower] for e in poset.down[w])
    )
    return maximal_uncrowded, minimal_crowded


def knuth_neighbors(w: Permutation) -> list[Permutation]:
    """Permutations one Knuth relation away.

    A relation swaps the first two letters of a consecutive 312 or 132, or
    the last two letters of a consecutive 231 or 213.

    >>> knuth_neighbors(Permutation((3, 1, 2)))
    [Permutation('132')]
    """
    image = w.image
    n = len(image)
    out = set()
    for d in range(n - 2):
        a, b, c = image[d], image[d + 1], image[d + 2]
        ranks = tuple(sorted((a, b, c)).index(v) + 1 for v in (a, b, c))
        if ranks in ((3, 1, 2), (1, 3, 2)):
            out.add(w.times(d + 1))
        if ranks in ((2, 3, 1), (2, 1, 3)):
            out.add(w.times(d + 2))
    return sorted(out, key=lambda v: v.image)


def poset_to_dot(poset: FcPoset) -> str:
    """Graphviz digraph of the subposet, nodes tinted by crowdedness.

    Crowded nodes are filled, minimal crowded ones get a heavy border.
    """
    lines = ["digraph fc_poset {", "  rankdir=BT;", "  node [style=filled];"]
    for w in poset.elements:
        name = w.to_text(compact=True) if w.n <= 9 else w.to_text()
        verdict = classify(w)
        if not verdict.crowded:
            color = "white"
            extra = ""
        elif is_minimal_crowded_direct(w).minimal:
            color = "lightcoral"
            extra = " penwidth=3"
        else:
            color = "mistyrose"
            extra = ""
        lines.append(f'  "{name}" [fillcolor={color}{extra}];')
    for e in poset.edges:
        lo = e.lower.to_text(compact=True) if poset.n <= 9 else e.lower.to_text()
        hi = e.upper.to_text(compact=True) if poset.n <= 9 else e.upper.to_text()
        lines.append(f'  "{lo}" -> "{hi}" [label="{e.index}"];')
    lines.append("}")
    return "\n".join(lines)
