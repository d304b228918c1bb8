"""Heaps of reduced words and the boolean core of a fully commutative element.

The heap of a reduced word ``u_1 .. u_l`` is the partial order on positions
{1, .., l} generated by x < y whenever x comes earlier and |u_x - u_y| <= 1.
Its labeled linear extensions are exactly the commutation class of the word,
so for a fully commutative permutation the heap is a complete, word-free
picture of the whole reduced-word set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .patterns import is_boolean, is_fully_commutative
from .permutations import Permutation
from .words import (
    BoundExceeded,
    canonical_reduced_word,
    evaluate_word,
    is_reduced,
    word_to_text,
)

DEFAULT_HEAP_BOUND = 14


@dataclass(frozen=True)
class Heap:
    """Labeled poset on the letter positions of a reduced word.

    ``below[k]`` holds every element strictly under element k+1, so order
    queries are set lookups.  ``covers`` is the transitive reduction, stored
    as sorted (lower, upper) pairs.
    """

    labels: tuple[int, ...]
    covers: tuple[tuple[int, int], ...]
    below: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.labels)

    def label(self, x: int) -> int:
        return self.labels[x - 1]

    def less(self, x: int, y: int) -> bool:
        return x in self.below[y - 1]

    def comparable(self, x: int, y: int) -> bool:
        return x == y or self.less(x, y) or self.less(y, x)

    def elements_with_label(self, j: int) -> tuple[int, ...]:
        return tuple(x for x in range(1, self.size + 1) if self.labels[x - 1] == j)

    def to_dot(self) -> str:
        """Graphviz digraph, edges from covered to covering, drawn upward."""
        lines = ["digraph heap {", "  rankdir=BT;"]
        for x, label in enumerate(self.labels, start=1):
            lines.append(f'  n{x} [label="{label} ({x})"];')
        for x, y in self.covers:
            lines.append(f"  n{x} -> n{y};")
        lines.append("}")
        return "\n".join(lines)


def build_heap(letters: tuple[int, ...] | list[int]) -> Heap:
    """Heap of a reduced word.  Raises ValueError on a non-reduced word.

    >>> h = build_heap((2, 1, 3))
    >>> h.covers
    ((1, 2), (1, 3))
    """
    letters = tuple(letters)
    if not letters:
        return Heap(labels=(), covers=(), below=())
    n = max(letters) + 1
    if not is_reduced(letters, n):
        raise ValueError(f"word {word_to_text(letters)} is not reduced")
    size = len(letters)
    below: list[frozenset[int]] = []
    for y in range(1, size + 1):
        acc: set[int] = set()
        for x in range(1, y):
            if abs(letters[x - 1] - letters[y - 1]) <= 1:
                acc.add(x)
                acc |= below[x - 1]
        below.append(frozenset(acc))
    covers = []
    for y in range(1, size + 1):
        for x in range(1, y):
            if abs(letters[x - 1] - letters[y - 1]) <= 1:
                direct = not any(
                    x in below[z - 1] for z in below[y - 1] if z > x
                )
                if direct:
                    covers.append((x, y))
                    # covers of a reduced-word heap always join adjacent letters
                    assert abs(letters[x - 1] - letters[y - 1]) == 1
    return Heap(labels=letters, covers=tuple(sorted(covers)), below=tuple(below))


def heap_of(w: Permutation) -> Heap:
    """The heap of a fully commutative permutation (word-independent)."""
    if not is_fully_commutative(w):
        raise ValueError(
            f"{w.to_text()} is not fully commutative; build a heap from an explicit word"
        )
    return build_heap(canonical_reduced_word(w))


def labeled_linear_extensions(
    heap: Heap, bound: int = DEFAULT_HEAP_BOUND
) -> set[tuple[int, ...]]:
    """All words read off linear extensions of the heap.

    This set is the commutation class of the generating word; for a fully
    commutative permutation it is the full reduced-word set.
    """
    if heap.size > bound:
        raise BoundExceeded(
            f"heap size {heap.size} exceeds bound {bound}; raise the bound to enumerate"
        )
    size = heap.size
    pending = [0] * size
    above: list[list[int]] = [[] for _ in range(size)]
    for x, y in heap.covers:
        above[x - 1].append(y)
        pending[y - 1] += 1
    ready = sorted(x for x in range(1, size + 1) if pending[x - 1] == 0)
    out: set[tuple[int, ...]] = set()
    word: list[int] = []

    def grow(ready: list[int]) -> None:
        if len(word) == size:
            out.add(tuple(word))
            return
        for idx, x in enumerate(ready):
            rest = ready[:idx] + ready[idx + 1 :]
            released = []
            for y in above[x - 1]:
                pending[y - 1] -= 1
                if pending[y - 1] == 0:
                    released.append(y)
            word.append(heap.labels[x - 1])
            grow(rest + released)
            word.pop()
            for y in above[x - 1]:
                pending[y - 1] += 1

    grow(ready)
    return out


def canonical_form(heap: Heap):
    """A value equal for two heaps exactly when they are isomorphic as
    labeled posets.

    Elements sharing a label form a chain, so (label, rank within that chain)
    names every element canonically; the cover set in those names plus the
    label multiset pins the poset down.
    """
    rank: dict[int, tuple[int, int]] = {}
    for x in range(1, heap.size + 1):
        j = heap.label(x)
        r = sum(
            1 for y in heap.elements_with_label(j) if heap.less(y, x)
        )
        rank[x] = (j, r)
    named_covers = frozenset((rank[x], rank[y]) for x, y in heap.covers)
    return (tuple(sorted(heap.labels)), named_covers)


@dataclass(frozen=True)
class CoreDecomposition:
    """w split as core * remainder with lengths adding up.

    The core is boolean, has the same support as w, and is the largest
    boolean permutation under w in the right weak order.
    """

    core: Permutation
    remainder: Permutation
    core_word: tuple[int, ...]
    remainder_word: tuple[int, ...]


def boolean_core(w: Permutation) -> CoreDecomposition:
    """Boolean core of a fully commutative permutation.

    Take any reduced word, its heap, and for each supported letter the
    minimal element carrying that label.  Those minima form an order ideal;
    reading them first gives a reduced word whose prefix is the core.

    >>> boolean_core(Permutation.from_text("345619278")).core.to_text(compact=True)
    '314569278'
    """
    if not is_fully_commutative(w):
        raise ValueError(f"{w.to_text()} is not fully commutative")
    n = w.n
    word = canonical_reduced_word(w)
    heap = build_heap(word) if word else Heap((), (), ())
    first_of_label: dict[int, int] = {}
    for x in range(1, heap.size + 1):
        j = heap.label(x)
        if j not in first_of_label:
            first_of_label[j] = x
        else:
            # same-label elements are always comparable, earliest is minimal
            assert heap.less(first_of_label[j], x)
    ideal = sorted(first_of_label.values())
    rest = sorted(set(range(1, heap.size + 1)) - set(ideal))
    core_word = tuple(heap.label(x) for x in ideal)
    remainder_word = tuple(heap.label(x) for x in rest)
    core = evaluate_word(core_word, n)
    remainder = evaluate_word(remainder_word, n)
    if core.compose(remainder) != w:
        raise RuntimeError(f"core split failed for {w.to_text()}")
    if not is_boolean(core) or core.support() != w.support():
        raise RuntimeError(f"core of {w.to_text()} is not a same-support boolean")
    return CoreDecomposition(
        core=core,
        remainder=remainder,
        core_word=core_word,
        remainder_word=remainder_word,
    )
