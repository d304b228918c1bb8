"""Crowded and uncrowded permutations, transition analysis, and minimality.

A set L of integers is *uncrowded* when every window [y, y+2x] (x positive)
meets L in at most x+1 points, and *crowded* otherwise.  A fully commutative
permutation inherits the adjective of the second row of its insertion
tableau.  Crowdedness is exactly the obstruction to sharing an insertion
tableau with a boolean permutation, and it appears along weak-order covers
in a completely controlled way; ``analyze_transition`` extracts the full
witness data for one cover step and checks every step of that control.
"""

from __future__ import annotations

from dataclasses import dataclass

from .heaps import boolean_core
from .patterns import is_fully_commutative, iter_occurrences
from .permutations import Permutation
from .rsk import rsk, row2


class InvariantViolation(RuntimeError):
    """An internal deduction failed; the inputs are a counterexample to
    something this library believes is a theorem.  Please report them."""


def _demand(condition: bool, message: str) -> None:
    if not condition:
        raise InvariantViolation(message)


@dataclass(frozen=True)
class CrowdedWitness:
    """A window [y, y+2x] holding more than x+1 members of the set."""

    x: int
    y: int
    window: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.window) <= self.x + 1:
            raise ValueError("witness window does not violate the bound")


def find_crowded_witness(values) -> CrowdedWitness | None:
    """A violating window for a crowded set, or None for an uncrowded one.

    Windows are scanned by radius x, then by left endpoint y, so the
    reported witness is the tightest leftmost one.  Restricting y to
    [min L, max L - 2x] loses nothing: any violating window shrinks to one
    anchored there.

    >>> find_crowded_witness({3, 5, 6}) is None
    True
    >>> find_crowded_witness({4, 5, 6})
    CrowdedWitness(x=1, y=4, window=(4, 5, 6))
    """
    members = sorted(set(values))
    if len(members) <= 2:
        return None
    lo, hi = members[0], members[-1]
    for x in range(1, (hi - lo) // 2 + 1):
        for y in range(lo, hi - 2 * x + 1):
            window = tuple(v for v in members if y <= v <= y + 2 * x)
            if len(window) > x + 1:
                return CrowdedWitness(x=x, y=y, window=window)
    return None


def is_uncrowded_set(values) -> bool:
    """True when no window violates the density bound.

    >>> is_uncrowded_set(set())
    True
    >>> is_uncrowded_set({6, 7, 8})
    False
    """
    return find_crowded_witness(values) is None


def minimal_crowded_window(x: int, y: int) -> tuple[int, ...]:
    """The inclusion-minimal crowded set with window [y, y+2x].

    {y, y+1, y+2} for x = 1; otherwise y, y+1, then every second value up
    to y+2x-1, then y+2x.
    """
    if x < 1:
        raise ValueError("window radius must be positive")
    if x == 1:
        return (y, y + 1, y + 2)
    return (y, y + 1) + tuple(range(y + 3, y + 2 * x, 2)) + (y + 2 * x,)


@dataclass(frozen=True)
class MinimalCrowdedSet:
    x: int
    y: int
    elements: tuple[int, ...]


def minimal_crowded_subset(values) -> MinimalCrowdedSet:
    """An inclusion-wise minimal crowded subset of a crowded set.

    The candidates are exactly the sets ``minimal_crowded_window(x, y)``;
    among the inclusion-minimal ones contained in the input, the one with
    largest y (then smallest x) is returned.

    >>> minimal_crowded_subset({4, 6, 7, 8}).elements
    (6, 7, 8)
    """
    members = frozenset(values)
    if is_uncrowded_set(members):
        raise ValueError(f"{sorted(members)} is uncrowded")
    lo, hi = min(members), max(members)
    candidates = []
    for x in range(1, (hi - lo) // 2 + 1):
        for y in range(lo, hi - 2 * x + 1):
            window = minimal_crowded_window(x, y)
            if members.issuperset(window):
                candidates.append((x, y, frozenset(window)))
    _demand(bool(candidates), f"crowded set {sorted(members)} holds no standard window")
    minimal = [
        (x, y, s)
        for x, y, s in candidates
        if not any(t < s for _, _, t in candidates)
    ]
    x, y, s = max(minimal, key=lambda item: (item[1], -item[0]))
    return MinimalCrowdedSet(x=x, y=y, elements=tuple(sorted(s)))


@dataclass(frozen=True)
class Classification:
    crowded: bool
    row2: tuple[int, ...]
    witness: CrowdedWitness | None

    def to_json_dict(self) -> dict:
        out: dict = {
            "verdict": "crowded" if self.crowded else "uncrowded",
            "row2": list(self.row2),
        }
        if self.witness is not None:
            out["witness"] = {
                "x": self.witness.x,
                "y": self.witness.y,
                "window": list(self.witness.window),
            }
        return out


def classify(w: Permutation) -> Classification:
    """Crowded/uncrowded verdict for a fully commutative permutation.

    >>> classify(Permutation.from_text("41627385")).witness.window
    (6, 7, 8)
    >>> classify(Permutation.from_text("41623785")).crowded
    False
    """
    if not is_fully_commutative(w):
        raise ValueError(f"{w.to_text()} is not fully commutative")
    second = row2(w)
    witness = find_crowded_witness(second)
    return Classification(crowded=witness is not None, row2=second, witness=witness)


def uncrowded_iff_core(w: Permutation) -> bool:
    """True exactly when w is uncrowded; self-checks that this coincides
    with sharing an insertion tableau with the boolean core."""
    verdict = not classify(w).crowded
    same_tableau = rsk(boolean_core(w).core).p == rsk(w).p
    _demand(
        verdict == same_tableau,
        f"{w.to_text()}: uncrowded is {verdict} but core-tableau match is {same_tableau}",
    )
    return verdict


@dataclass(frozen=True)
class TransitionReport:
    """Everything extracted from one tableau-changing cover step v -> v*s_i.

    ``prefix_max``/``suffix_min`` are the extremes around the swap,
    ``pattern_3142`` the positions of the occurrence they force, the runs
    are the increasing stretches adjacent to the swapped pair, and
    ``column_chain``/``bumpers`` trace how the new second-row entry
    ``moved_value`` is pushed down.  ``interval`` is the short integer
    window that ends up overfull in the second row of P(v*s_i).
    """

    v: Permutation
    w: Permutation
    index: int
    prefix_max: int
    suffix_min: int
    pattern_3142: tuple[int, int, int, int]
    run_before: tuple[int, ...]
    run_after: tuple[int, ...]
    moved_value: int
    column_chain: tuple[int, ...]
    bumpers: tuple[int, ...]
    chain_length: int
    interval: tuple[int, int]

    def to_json_dict(self) -> dict:
        return {
            "v": self.v.to_text(),
            "w": self.w.to_text(),
            "index": self.index,
            "prefix_max": self.prefix_max,
            "suffix_min": self.suffix_min,
            "pattern_3142": list(self.pattern_3142),
            "run_before": list(self.run_before),
            "run_after": list(self.run_after),
            "moved_value": self.moved_value,
            "column_chain": list(self.column_chain),
            "bumpers": list(self.bumpers),
            "chain_length": self.chain_length,
            "interval": list(self.interval),
        }


def analyze_transition(v: Permutation, i: int) -> TransitionReport:
    """Witness data for a cover step that changes the insertion tableau
    without changing support.  Such a step always lands on a crowded
    permutation, and every deduction on the way there is checked.

    >>> report = analyze_transition(Permutation.from_text("41623785"), 5)
    >>> report.prefix_max, report.suffix_min, report.moved_value, report.chain_length
    (6, 5, 8, 0)
    """
    if not is_fully_commutative(v):
        raise ValueError(f"precondition failed: {v.to_text()} is not fully commutative")
    if not 1 <= i <= v.n - 1:
        raise ValueError(f"precondition failed: index {i} out of range 1..{v.n - 1}")
    if v(i) > v(i + 1):
        raise ValueError(f"precondition failed: {i} is not an ascent of {v.to_text()}")
    w = v.times(i)
    if not is_fully_commutative(w):
        raise ValueError(
            f"precondition failed: {w.to_text()} is not fully commutative"
        )
    if i not in v.support():
        raise ValueError(
            f"precondition failed: {i} is not in the support of {v.to_text()}"
        )
    rv, rw = rsk(v), rsk(w)
    if rv.p == rw.p:
        raise ValueError(
            f"precondition failed: the insertion tableau does not change at index {i}"
        )

    stats = v.support_stats(i)
    prefix_max, suffix_min = stats.prefix_max, stats.suffix_min
    pos = {val: p for p, val in enumerate(v.image, start=1)}
    pos_max, pos_min = pos[prefix_max], pos[suffix_min]

    # the extremes straddle the swapped pair as a 3142 occurrence
    _demand(
        v(i) < suffix_min < prefix_max < v(i + 1),
        f"{v.to_text()}@{i}: expected v(i) < suffix_min < prefix_max < v(i+1)",
    )
    pattern = (pos_max, i, i + 1, pos_min)

    # the stretches next to the swap are increasing and squeezed by the extremes
    run_before = tuple(v(p) for p in range(pos_max + 1, i))
    run_after = tuple(v(p) for p in range(i + 2, pos_min))
    _demand(len(run_before) >= 1, f"{v.to_text()}@{i}: run before the swap is empty")
    _demand(len(run_after) >= 1, f"{v.to_text()}@{i}: run after the swap is empty")
    chain = run_before + (v(i), suffix_min) + (prefix_max, v(i + 1)) + run_after
    _demand(
        all(a < b for a, b in zip(chain, chain[1:])),
        f"{v.to_text()}@{i}: squeezed runs are not increasing",
    )

    row1_v, row2_v = rv.p.row(1), set(rv.p.row(2))
    row2_w = set(rw.p.row(2))
    moved = set(row1_v) & row2_w
    _demand(
        len(moved) == 1,
        f"{v.to_text()}@{i}: expected a unique value moving to row 2, got {sorted(moved)}",
    )
    moved_value = moved.pop()

    bumped_by_v = rv.trace.row_bump_map()
    bumped_by_w = rw.trace.row_bump_map()

    # the prefix maximum is pushed down by the run before the swap, same in both
    _demand(
        bumped_by_v.get(prefix_max) in set(run_before),
        f"{v.to_text()}@{i}: prefix_max not bumped by the run before the swap",
    )
    _demand(
        bumped_by_w.get(prefix_max) == bumped_by_v.get(prefix_max),
        f"{v.to_text()}@{i}: prefix_max bumped differently after the swap",
    )
    # the suffix minimum pushes v(i+1) down on the unswapped side
    _demand(
        bumped_by_v.get(v(i + 1)) == suffix_min,
        f"{v.to_text()}@{i}: v(i+1) is not bumped by suffix_min",
    )
    # the moved value sits after the swap and never displaces anyone
    _demand(
        pos[moved_value] > i + 1,
        f"{v.to_text()}@{i}: moved value appears before the swap",
    )
    step = rv.trace.events[pos[moved_value] - 1]
    _demand(
        step.value == moved_value and not step.bumps,
        f"{v.to_text()}@{i}: moved value displaces something in P(v)",
    )

    # chain of first-insertion columns starting at v(i+1)
    col_v = rv.trace.first_column
    col_w = rw.trace.first_column
    base = col_v[v(i + 1)]
    for offset, value in enumerate(run_after, start=1):
        _demand(
            col_v[value] == base + offset,
            f"{v.to_text()}@{i}: run column drifts at {value}",
        )
    first_in_column: dict[int, int] = {}
    for value in v.image:
        first_in_column.setdefault(col_v[value], value)

    def chain_value(k: int) -> int | None:
        if k == 0:
            return v(i + 1)
        if k <= len(run_after):
            return run_after[k - 1]
        return first_in_column.get(base + k)

    _demand(v(i + 1) in row2_v, f"{v.to_text()}@{i}: v(i+1) missed row 2 of P(v)")
    r = 0
    while True:
        nxt = chain_value(r + 1)
        if nxt is None or nxt not in row2_v:
            break
        r += 1
    tail = chain_value(r + 1)
    _demand(
        tail is not None,
        f"{v.to_text()}@{i}: no value lands in column {base + r + 1} of P(v)",
    )
    column_chain = tuple(chain_value(k) for k in range(r + 2))

    # the chain ends exactly at the moved value, one past the last row-2 link
    _demand(
        tail == moved_value,
        f"{v.to_text()}@{i}: chain ends at {tail}, not at the moved value {moved_value}",
    )
    _demand(
        moved_value == column_chain[r] + 1,
        f"{v.to_text()}@{i}: moved value is not adjacent to the last chain link",
    )

    bumpers = [suffix_min]
    for k in range(1, r + 1):
        bumpers.append(bumped_by_v[column_chain[k]])
    _demand(
        all(a < b for a, b in zip(bumpers, bumpers[1:])),
        f"{v.to_text()}@{i}: bumpers are not increasing",
    )
    _demand(
        all(pos[a] < pos[b] for a, b in zip(bumpers, bumpers[1:])),
        f"{v.to_text()}@{i}: bumpers are not left to right",
    )
    # after the swap the suffix minimum pushes down the next chain link instead
    _demand(
        bumped_by_w.get(column_chain[1]) == suffix_min,
        f"{v.to_text()}@{i}: suffix_min does not bump the next link in P(w)",
    )
    for k, t in enumerate(bumpers):
        _demand(
            col_w[t] == col_v[t],
            f"{v.to_text()}@{i}: bumper {t} changes first column after the swap",
        )

    # the window [prefix_max, moved_value] is short but rich in row-2 entries
    _demand(
        column_chain[r] - prefix_max <= 2 * r + 1,
        f"{v.to_text()}@{i}: window is too wide for the chain",
    )
    packed = {prefix_max, *column_chain[: r + 1]}
    _demand(
        packed <= row2_v and len(packed) == r + 2,
        f"{v.to_text()}@{i}: expected {r + 2} second-row entries in the window",
    )
    interval = (prefix_max, moved_value)
    inside_w = [z for z in sorted(row2_w) if prefix_max <= z <= moved_value]
    _demand(
        len(inside_w) >= r + 3,
        f"{v.to_text()}@{i}: second row of P(w) is not overfull on {interval}",
    )
    _demand(
        classify(w).crowded,
        f"{v.to_text()}@{i}: transition target is not crowded",
    )

    return TransitionReport(
        v=v,
        w=w,
        index=i,
        prefix_max=prefix_max,
        suffix_min=suffix_min,
        pattern_3142=pattern,
        run_before=run_before,
        run_after=run_after,
        moved_value=moved_value,
        column_chain=column_chain,
        bumpers=tuple(bumpers),
        chain_length=r,
        interval=interval,
    )


_PATTERN_415263 = Permutation((4, 1, 5, 2, 6, 3))
_PATTERN_315264 = Permutation((3, 1, 5, 2, 6, 4))


@dataclass(frozen=True)
class MinimalityReport:
    """Outcome of the five-part direct test for minimal crowdedness.

    ``descent_start``/``descent_count`` hold d and k when the descent set is
    {d, d+2, .., d+2k}; the window conditions are only meaningful then.
    """

    w: Permutation
    minimal: bool
    descent_form: bool
    descent_values_crowded: bool
    fixed_outside: bool
    pattern_consecutive: bool
    window_patterns: bool
    descent_start: int | None
    descent_count: int | None

    def to_json_dict(self) -> dict:
        return {
            "w": self.w.to_text(),
            "minimal": self.minimal,
            "conditions": {
                "descent_form": self.descent_form,
                "descent_values_crowded": self.descent_values_crowded,
                "fixed_outside": self.fixed_outside,
                "pattern_consecutive": self.pattern_consecutive,
                "window_patterns": self.window_patterns,
            },
            "descent_start": self.descent_start,
            "descent_count": self.descent_count,
            "row2": list(row2(self.w)),
        }


def is_minimal_crowded_direct(w: Permutation) -> MinimalityReport:
    """Direct characterization of the minimal crowded permutations.

    The five conditions: descents form {d, d+2, .., d+2k} with k >= 2; the
    values at those descents form a crowded set; everything outside
    [d, d+2k+1] is fixed; 415263 occurs and only consecutively; and each
    six-letter window starting at a descent is a 415263 or 315264 pattern.

    >>> is_minimal_crowded_direct(Permutation.from_text("41627385")).minimal
    True
    """
    if not is_fully_commutative(w):
        raise ValueError(f"{w.to_text()} is not fully commutative")
    descents = sorted(w.descents())
    descent_form = (
        len(descents) >= 3
        and all(b - a == 2 for a, b in zip(descents, descents[1:]))
    )
    d = descents[0] if descent_form else None
    k = len(descents) - 1 if descent_form else None

    if descent_form:
        descent_values = {w(p) for p in descents}
    else:
        descent_values = set(row2(w))
    descent_values_crowded = find_crowded_witness(descent_values) is not None

    if descent_form:
        inside = range(d, d + 2 * k + 2)
        fixed_outside = all(
            w(p) == p for p in range(1, w.n + 1) if p not in inside
        )
    else:
        fixed_outside = False

    if w.n >= _PATTERN_415263.n:
        occurrences = list(iter_occurrences(w, _PATTERN_415263))
        pattern_consecutive = bool(occurrences) and all(
            occ.positions[-1] - occ.positions[0] == 5 for occ in occurrences
        )
    else:
        pattern_consecutive = False

    if descent_form:
        window_patterns = True
        for t in range(0, k - 1):
            start = d + 2 * t
            values = tuple(w(p) for p in range(start, start + 6))
            ranks = tuple(sorted(values).index(v) + 1 for v in values)
            if ranks not in (_PATTERN_415263.image, _PATTERN_315264.image):
                window_patterns = False
                break
    else:
        window_patterns = False

    minimal = (
        descent_form
        and descent_values_crowded
        and fixed_outside
        and pattern_consecutive
        and window_patterns
    )
    return MinimalityReport(
        w=w,
        minimal=minimal,
        descent_form=descent_form,
        descent_values_crowded=descent_values_crowded,
        fixed_outside=fixed_outside,
        pattern_consecutive=pattern_consecutive,
        window_patterns=window_patterns,
        descent_start=d,
        descent_count=k,
    )
