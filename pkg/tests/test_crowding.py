import random
from itertools import combinations

import pytest

from fcperm import (
    InvariantViolation,
    Permutation,
    Tableau,
    analyze_transition,
    boolean_core,
    classify,
    find_crowded_witness,
    is_minimal_crowded_direct,
    is_uncrowded_set,
    minimal_crowded_subset,
    minimal_crowded_window,
    row2,
    rsk,
    uncrowded_iff_core,
)
from fcperm.weak_order import fc_elements, up_covers
from fcperm.patterns import is_fully_commutative

from conftest import wide_scan_is_uncrowded


P = Permutation.from_text


class TestUncrowdedSets:
    def test_goldens(self):
        assert is_uncrowded_set({3, 5, 6})
        witness = find_crowded_witness({4, 5, 6})
        assert (witness.x, witness.y, witness.window) == (1, 4, (4, 5, 6))
        assert is_uncrowded_set(set())
        assert not is_uncrowded_set({6, 7, 8})

    def test_agrees_with_wide_scan_on_all_small_subsets(self):
        universe = list(range(1, 11))
        for size in range(len(universe) + 1):
            for subset in combinations(universe, size):
                assert is_uncrowded_set(subset) == wide_scan_is_uncrowded(subset)

    def test_witness_really_violates(self):
        rng = random.Random(11)
        for _ in range(500):
            subset = {v for v in range(1, 13) if rng.random() < 0.5}
            witness = find_crowded_witness(subset)
            if witness is None:
                continue
            inside = sorted(
                v for v in subset if witness.y <= v <= witness.y + 2 * witness.x
            )
            assert tuple(inside) == witness.window
            assert len(inside) > witness.x + 1


class TestMinimalCrowdedSubset:
    def test_window_shapes(self):
        assert minimal_crowded_window(1, 6) == (6, 7, 8)
        assert minimal_crowded_window(2, 4) == (4, 5, 7, 8)
        assert minimal_crowded_window(3, 1) == (1, 2, 4, 6, 7)

    def test_goldens(self):
        assert minimal_crowded_subset({4, 6, 7, 8}).elements == (6, 7, 8)
        chosen = minimal_crowded_subset({4, 5, 6})
        assert (chosen.x, chosen.y, chosen.elements) == (1, 4, (4, 5, 6))

    def test_rejects_uncrowded(self):
        with pytest.raises(ValueError):
            minimal_crowded_subset({3, 5, 6})

    def test_every_crowded_subset_of_ten_has_a_standard_window(self):
        universe = list(range(1, 11))
        for size in range(3, len(universe) + 1):
            for subset in combinations(universe, size):
                if is_uncrowded_set(subset):
                    continue
                result = minimal_crowded_subset(subset)
                assert set(result.elements) <= set(subset)
                assert not is_uncrowded_set(result.elements)
                assert result.elements == minimal_crowded_window(result.x, result.y)

    def test_random_crowded_sets(self):
        rng = random.Random(3)
        found = 0
        while found < 200:
            subset = {v for v in range(1, 13) if rng.random() < 0.55}
            if is_uncrowded_set(subset):
                continue
            found += 1
            result = minimal_crowded_subset(subset)
            elements = set(result.elements)
            assert elements <= subset
            assert not is_uncrowded_set(elements)
            for drop in elements:
                assert is_uncrowded_set(elements - {drop})
            assert result.elements == minimal_crowded_window(result.x, result.y)


class TestClassify:
    def test_goldens(self):
        assert not classify(P("41623785")).crowded
        verdict = classify(P("41627385"))
        assert verdict.crowded and verdict.witness.window == (6, 7, 8)
        assert not classify(Permutation.identity(5)).crowded

    def test_rejects_non_fully_commutative(self):
        with pytest.raises(ValueError):
            classify(Permutation((3, 2, 1)))

    def test_json_report(self):
        report = classify(P("41627385")).to_json_dict()
        assert report["verdict"] == "crowded"
        assert report["witness"]["window"] == [6, 7, 8]
        assert report["row2"] == [4, 6, 7, 8]


class TestUncrowdedIffCore:
    def test_goldens(self):
        v = P("41623785")
        assert uncrowded_iff_core(v)
        assert rsk(boolean_core(v).core).p == Tableau(((1, 2, 3, 5, 8), (4, 6, 7)))
        assert not uncrowded_iff_core(P("41627385"))

    def test_boolean_elements_are_uncrowded(self):
        from fcperm import is_boolean

        for w in fc_elements(6):
            if is_boolean(w):
                assert uncrowded_iff_core(w)


class TestAnalyzeTransition:
    def test_worked_example(self):
        report = analyze_transition(P("41623785"), 5)
        assert report.w == P("41627385")
        assert (report.prefix_max, report.suffix_min) == (6, 5)
        assert report.pattern_3142 == (3, 5, 6, 8)
        assert report.v(report.pattern_3142[0]) == 6
        assert report.run_before == (2,)
        assert report.run_after == (8,)
        assert report.moved_value == 8
        assert report.chain_length == 0
        assert report.column_chain == (7, 8)
        assert report.bumpers == (5,)
        assert report.interval == (6, 8)
        inside = [z for z in row2(report.w) if 6 <= z <= 8]
        assert len(inside) == report.chain_length + 3

    def test_precondition_errors(self):
        with pytest.raises(ValueError, match="precondition"):
            analyze_transition(Permutation.identity(6), 2)  # not in support
        with pytest.raises(ValueError, match="precondition"):
            analyze_transition(P("41627385"), 1)  # descent, not ascent
        with pytest.raises(ValueError, match="precondition"):
            analyze_transition(Permutation((3, 2, 1)), 1)  # not FC
        # support holds but the tableau does not change
        v = P("41263785")
        assert rsk(v).p == rsk(v.times(3)).p
        with pytest.raises(ValueError, match="precondition"):
            analyze_transition(v, 3)

    def test_exhaustive_over_s6(self):
        seen = 0
        for v in fc_elements(6):
            for edge in up_covers(v):
                w, i = edge.upper, edge.index
                if not is_fully_commutative(w) or i not in v.support():
                    continue
                if rsk(v).p == rsk(w).p:
                    continue
                seen += 1
                report = analyze_transition(v, i)
                assert classify(report.w).crowded
        assert seen >= 1

    def test_json_round_trip(self):
        import json

        report = analyze_transition(P("41623785"), 5)
        parsed = json.loads(json.dumps(report.to_json_dict()))
        assert parsed == report.to_json_dict()


class TestMinimalCrowdedDirect:
    def test_golden_positive(self):
        report = is_minimal_crowded_direct(P("41627385"))
        assert report.minimal
        assert report.descent_form
        assert report.descent_values_crowded
        assert report.fixed_outside
        assert report.pattern_consecutive
        assert report.window_patterns
        assert (report.descent_start, report.descent_count) == (1, 3)

    def test_uncrowded_fails_crowdedness_condition(self):
        for w in fc_elements(6):
            if classify(w).crowded:
                continue
            report = is_minimal_crowded_direct(w)
            assert not report.minimal
            assert not report.descent_values_crowded

    def test_smallest_example(self):
        assert is_minimal_crowded_direct(P("415263")).minimal

    def test_identity_and_small_degrees(self):
        assert not is_minimal_crowded_direct(Permutation.identity(1)).minimal
        assert not is_minimal_crowded_direct(Permutation((2, 1))).minimal

    def test_rejects_non_fully_commutative(self):
        with pytest.raises(ValueError):
            is_minimal_crowded_direct(Permutation((3, 2, 1)))

    def test_matches_poset_oracle_s7(self):
        from fcperm.weak_order import build_fc_poset

        poset = build_fc_poset(7)
        crowded = {w: classify(w).crowded for w in poset.elements}
        for w in poset.elements:
            by_poset = crowded[w] and all(
                not crowded[e.lower] for e in poset.down[w]
            )
            assert by_poset == is_minimal_crowded_direct(w).minimal


def test_invariant_violation_is_distinct_error():
    assert issubclass(InvariantViolation, RuntimeError)
    assert not issubclass(InvariantViolation, ValueError)
