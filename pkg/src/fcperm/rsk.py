"""Row insertion with a full bump trace.

Insertion is ordinary unbounded RSK, so arbitrary permutations are handled
correctly; the operations whose statements only make sense in the two-row
world (``bump_pairs``) enforce full commutativity at their boundary.

The trace records, for each inserted letter, the whole bump cascade and the
first-row column where the letter landed.  That column always equals the
length of a longest increasing subsequence ending at the letter, which is
the bridge between tableau shape and one-line combinatorics used throughout
this library.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .patterns import is_fully_commutative
from .permutations import Permutation


@dataclass(frozen=True)
class Tableau:
    """Rows of strictly increasing integers, weakly shrinking in length.

    >>> Tableau(((1, 2, 4), (3, 5, 6))).shape
    (3, 3)
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        for r, row in enumerate(rows):
            if not row:
                raise ValueError("empty tableau row")
            if any(a >= b for a, b in zip(row, row[1:])):
                raise ValueError(f"row {r + 1} is not strictly increasing: {row}")
            if r > 0:
                upper = rows[r - 1]
                if len(row) > len(upper):
                    raise ValueError("row lengths must weakly decrease")
                if any(upper[c] >= row[c] for c in range(len(row))):
                    raise ValueError("columns must strictly increase downward")

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    @property
    def size(self) -> int:
        return sum(self.shape)

    def row(self, r: int) -> tuple[int, ...]:
        """Row r (1-based); empty when the tableau has fewer rows."""
        if r < 1:
            raise ValueError("rows are numbered from 1")
        return self.rows[r - 1] if r <= len(self.rows) else ()

    def is_standard(self, n: int) -> bool:
        entries = sorted(v for row in self.rows for v in row)
        return entries == list(range(1, n + 1))

    def to_text(self) -> str:
        """Rows top to bottom, commas inside rows, '/' between rows.

        >>> Tableau(((1, 2, 3, 5), (4, 6, 7, 8))).to_text()
        '1,2,3,5/4,6,7,8'
        """
        return "/".join(",".join(str(v) for v in row) for row in self.rows)

    @classmethod
    def from_text(cls, text: str) -> "Tableau":
        text = text.strip()
        if not text:
            return cls(())
        return cls(
            tuple(
                tuple(int(tok) for tok in part.split(","))
                for part in text.split("/")
            )
        )

    def to_json_dict(self) -> dict:
        return {"rows": [list(row) for row in self.rows]}


@dataclass(frozen=True)
class InsertionStep:
    """What happened when one letter entered the tableau.

    ``bumps`` lists the cascade as (incoming, displaced, row) triples; it is
    empty when the letter was appended to row 1.  ``settled_row`` and
    ``settled_col`` locate the cell the cascade created.
    """

    value: int
    bumps: tuple[tuple[int, int, int], ...]
    settled_row: int
    settled_col: int


@dataclass(frozen=True)
class BumpTrace:
    events: tuple[InsertionStep, ...]
    first_column: Mapping[int, int]

    def row_bump_map(self, row: int = 1) -> dict[int, int]:
        """displaced value -> the value that pushed it out of ``row``."""
        out = {}
        for step in self.events:
            for b, z, r in step.bumps:
                if r == row:
                    out[z] = b
        return out


@dataclass(frozen=True)
class RskResult:
    p: Tableau
    q: Tableau
    trace: BumpTrace


def _insert_all(values: Sequence[int]):
    rows: list[list[int]] = []
    qrows: list[list[int]] = []
    events = []
    first_column: dict[int, int] = {}
    for step_index, value in enumerate(values, start=1):
        incoming = value
        bumps = []
        r = 0
        while True:
            if r == len(rows):
                rows.append([])
                qrows.append([])
            row = rows[r]
            col = bisect_right(row, incoming)
            if r == 0:
                first_column[value] = col + 1
            if col == len(row):
                row.append(incoming)
                settled = (r + 1, col + 1)
                break
            displaced = row[col]
            row[col] = incoming
            bumps.append((incoming, displaced, r + 1))
            incoming = displaced
            r += 1
        qrows[settled[0] - 1].append(step_index)
        events.append(
            InsertionStep(
                value=value,
                bumps=tuple(bumps),
                settled_row=settled[0],
                settled_col=settled[1],
            )
        )
    return rows, qrows, events, first_column


def rsk(w: Permutation) -> RskResult:
    """Insertion tableau, recording tableau, and the full trace.

    >>> rsk(Permutation.from_text("315264")).p.to_text()
    '1,2,4/3,5,6'
    >>> rsk(Permutation.from_text("41627385")).p.to_text()
    '1,2,3,5/4,6,7,8'
    """
    rows, qrows, events, first_column = _insert_all(w.image)
    return RskResult(
        p=Tableau(tuple(tuple(r) for r in rows)),
        q=Tableau(tuple(tuple(r) for r in qrows)),
        trace=BumpTrace(events=tuple(events), first_column=first_column),
    )


def partial_p(w: Permutation, i: int) -> Tableau:
    """Insertion tableau of the first i letters of w."""
    if not 0 <= i <= w.n:
        raise ValueError(f"prefix length {i} out of range 0..{w.n}")
    rows, _, _, _ = _insert_all(w.image[:i])
    return Tableau(tuple(tuple(r) for r in rows))


def row2(w: Permutation) -> tuple[int, ...]:
    """Second row of the insertion tableau, sorted ascending.

    >>> row2(Permutation.from_text("41627385"))
    (4, 6, 7, 8)
    """
    return rsk(w).p.row(2)


def lis_ending_at(w: Permutation, q: int) -> int:
    """Length of a longest increasing subsequence of w ending with q.

    Computed by direct dynamic programming, independently of insertion; it
    always agrees with the first-insertion column of q.

    >>> lis_ending_at(Permutation.from_text("41623785"), 8)
    5
    """
    if not 1 <= q <= w.n:
        raise ValueError(f"value {q} out of range 1..{w.n}")
    image = w.image
    best = [0] * w.n
    for k, v in enumerate(image):
        best[k] = 1 + max((best[t] for t in range(k) if image[t] < v), default=0)
        if v == q:
            return best[k]
    raise AssertionError("unreachable: q is a value of w")


def bump_pairs(w: Permutation) -> list[tuple[int, int]]:
    """The (bumper, bumped) pairs of a fully commutative permutation, in
    bump order.

    >>> bump_pairs(Permutation.from_text("41627385"))
    [(1, 4), (2, 6), (3, 7), (5, 8)]
    """
    if not is_fully_commutative(w):
        raise ValueError(f"{w.to_text()} is not fully commutative")
    pairs = []
    for step in rsk(w).trace.events:
        if step.bumps:
            # two-row insertion never cascades past row 1
            assert len(step.bumps) == 1
            b, z, _ = step.bumps[0]
            pairs.append((b, z))
    return pairs


def max_increasing_subsequences(values: Iterable[int]) -> list[tuple[int, ...]]:
    """Every maximum-length increasing subsequence, as value tuples."""
    seq = tuple(values)
    n = len(seq)
    best = [1] * n
    for k in range(n):
        for t in range(k):
            if seq[t] < seq[k]:
                best[k] = max(best[k], best[t] + 1)
    target = max(best, default=0)
    out: list[tuple[int, ...]] = []

    def extend(k: int, acc: list[int]) -> None:
        acc.append(seq[k])
        if best[k] == 1:
            out.append(tuple(reversed(acc)))
        else:
            for t in range(k):
                if seq[t] < seq[k] and best[t] == best[k] - 1:
                    extend(t, acc)
        acc.pop()

    for k in range(n):
        if best[k] == target:
            extend(k, [])
    return sorted(out)
