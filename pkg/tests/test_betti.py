from __future__ import annotations

import pytest

from pathbetti import (
    GF2,
    GF32003,
    QQ,
    BettiTable,
    HomologySummary,
    OracleCapError,
    PathFamilySpec,
    RunSequence,
    betti_closed_cycle,
    betti_closed_line,
    betti_hochster,
    betti_top_degree,
    build_path_complex,
    build_run_complement,
    count_eligible,
    homology_cycle_complement,
    homology_run_sequence,
    make_complex,
    nonzero_criterion,
    pd_reg,
    reduced_homology_dims,
)


def _table(entries: dict) -> BettiTable:
    table = BettiTable()
    for (i, j), value in entries.items():
        table.accumulate(i, j, value, "test")
    return table


PENTAGON = {(1, 2): 5, (2, 3): 5, (3, 5): 1}
TRIANGLE = {(1, 2): 3, (2, 3): 2}
SQUARE_T3 = {(1, 3): 4, (2, 4): 3}
PATH4_T2 = {(1, 2): 3, (2, 3): 2}


class TestBettiTable:
    def test_accumulate_and_value(self):
        table = BettiTable()
        table.accumulate(1, 2, 3, "oracle")
        table.accumulate(1, 2, 2, "oracle")
        assert table.value(1, 2) == 5
        assert table.value(9, 9) == 0

    def test_equality_ignores_provenance(self):
        a = BettiTable()
        a.accumulate(1, 2, 5, "oracle")
        b = BettiTable()
        b.accumulate(1, 2, 5, "closed_form")
        assert a == b

    def test_items_sorted_by_internal_degree(self):
        table = _table({(3, 5): 1, (1, 2): 5, (2, 3): 5})
        assert [(i, j) for i, j, _, _ in table.items()] == [(1, 2), (2, 3), (3, 5)]

    def test_merge_sums_entries(self):
        a = _table({(1, 2): 2})
        b = _table({(1, 2): 3, (2, 3): 1})
        a.merge(b)
        assert a.entries == {(1, 2): 5, (2, 3): 1}

    def test_pd_reg_of_empty_table(self):
        assert BettiTable().pd == 0
        assert BettiTable().reg == 0

    def test_diff(self):
        a = _table({(1, 2): 5, (2, 3): 4})
        b = _table({(1, 2): 5, (3, 5): 1})
        assert a.diff(b) == {(2, 3): (4, 0), (3, 5): (0, 1)}


class TestHochsterOracle:
    def test_pentagon(self):
        delta = build_path_complex(PathFamilySpec("cycle", 5, 2))
        assert betti_hochster(delta).entries == PENTAGON

    def test_heptagon_has_seven_generators(self):
        delta = build_path_complex(PathFamilySpec("cycle", 7, 4))
        table = betti_hochster(delta)
        assert table.value(1, 4) == 7
        assert table.value(3, 7) == 1

    def test_single_simplex_is_principal(self):
        delta = make_complex(range(1, 5), [tuple(range(1, 5))])
        assert betti_hochster(delta).entries == {(1, 4): 1}

    def test_triangle_boundary_case(self):
        delta = build_path_complex(PathFamilySpec("cycle", 3, 2))
        assert betti_hochster(delta).entries == TRIANGLE

    def test_cap_refuses_large_inputs(self):
        delta = build_path_complex(PathFamilySpec("cycle", 30, 3))
        with pytest.raises(OracleCapError):
            betti_hochster(delta)

    def test_explicit_cap_argument(self):
        delta = build_path_complex(PathFamilySpec("cycle", 6, 2))
        with pytest.raises(OracleCapError):
            betti_hochster(delta, max_subset_bits=5)

    def test_env_override(self, monkeypatch):
        monkeypatch.setenv("PATHBETTI_MAX_SUBSET_BITS", "5")
        delta = build_path_complex(PathFamilySpec("cycle", 6, 2))
        with pytest.raises(OracleCapError):
            betti_hochster(delta)
        monkeypatch.setenv("PATHBETTI_MAX_SUBSET_BITS", "6")
        assert betti_hochster(delta).value(1, 2) == 6

    def test_chunked_scan_merges_to_the_full_table(self):
        delta = build_path_complex(PathFamilySpec("cycle", 7, 3))
        whole = betti_hochster(delta)
        total = 1 << len(delta.ambient)
        merged = BettiTable()
        for chunk in (range(0, total // 3), range(total // 3, total // 2), range(total // 2, total)):
            merged.merge(betti_hochster(delta, subset_range=chunk))
        assert merged == whole


class TestRunSequenceHomology:
    @pytest.mark.parametrize("t,lengths,degree", [
        (4, (1,), -1),
        (2, (2,), 0),
        (2, (4,), 1),
        (3, (2, 1), 1),
        (2, (1, 1), 0),
    ])
    def test_nonzero_cases(self, t, lengths, degree):
        summary = homology_run_sequence(t, RunSequence(lengths))
        assert summary == HomologySummary(degree, 1)

    @pytest.mark.parametrize("t,lengths", [
        (2, (3,)),
        (2, (6,)),
        (3, (4,)),
        (4, (5, 1)),
    ])
    def test_zero_cases(self, t, lengths):
        assert homology_run_sequence(t, RunSequence(lengths)) == HomologySummary.zero()

    def test_matches_explicit_homology(self):
        for t, lengths in [(2, (4,)), (2, (2, 2)), (3, (1, 2)), (4, (1,))]:
            seq = RunSequence(lengths)
            explicit = reduced_homology_dims(build_run_complement(seq, t))
            assert homology_run_sequence(t, seq).as_vector() == explicit


class TestCycleComplementHomology:
    @pytest.mark.parametrize("n,t,degree,dim", [
        (6, 2, 2, 2),
        (7, 4, 1, 1),
        (8, 3, 2, 3),
        (4, 4, -1, 1),
    ])
    def test_examples(self, n, t, degree, dim):
        summary = homology_cycle_complement(PathFamilySpec("cycle", n, t))
        assert summary == HomologySummary(degree, dim)

    def test_shifted_into_top_betti_degree(self):
        for n, t in [(6, 2), (7, 4), (8, 3), (9, 4), (5, 5)]:
            spec = PathFamilySpec("cycle", n, t)
            summary = homology_cycle_complement(spec)
            i, value = betti_top_degree(spec)
            assert i == summary.nonzero_degree + 2
            assert value == summary.dimension


class TestTopDegree:
    @pytest.mark.parametrize("n,t,i,value", [
        (6, 2, 4, 2),
        (7, 4, 3, 1),
        (8, 3, 4, 3),
        (3, 3, 1, 1),
    ])
    def test_examples(self, n, t, i, value):
        assert betti_top_degree(PathFamilySpec("cycle", n, t)) == (i, value)


class TestCountEligible:
    def test_heptagon_single_facets(self):
        assert count_eligible(PathFamilySpec("cycle", 7, 4), 1, 4) == 7

    def test_pentagon_runs_of_two(self):
        assert count_eligible(PathFamilySpec("cycle", 5, 2), 2, 3) == 5

    def test_pentagon_has_no_disjoint_pairs(self):
        assert count_eligible(PathFamilySpec("cycle", 5, 2), 2, 4) == 0

    def test_degree_n_rejected(self):
        with pytest.raises(ValueError):
            count_eligible(PathFamilySpec("cycle", 5, 2), 3, 5)

    def test_i_above_j_rejected(self):
        with pytest.raises(ValueError):
            count_eligible(PathFamilySpec("cycle", 5, 2), 4, 3)


class TestNonzeroCriterion:
    def test_gap_bound(self):
        assert not nonzero_criterion(PathFamilySpec("cycle", 7, 4), 2, 8)

    def test_homological_degree_bound_when_d_zero(self):
        spec = PathFamilySpec("cycle", 6, 2)
        assert not any(nonzero_criterion(spec, 4, j) for j in range(4, 6))

    def test_positive_case(self):
        assert nonzero_criterion(PathFamilySpec("cycle", 5, 2), 2, 3)

    def test_internal_degree_bound(self):
        assert not nonzero_criterion(PathFamilySpec("cycle", 9, 2), 1, 3)


class TestClosedCycle:
    def test_pentagon(self):
        assert betti_closed_cycle(PathFamilySpec("cycle", 5, 2)).entries == PENTAGON

    def test_heptagon_entries(self):
        table = betti_closed_cycle(PathFamilySpec("cycle", 7, 4))
        assert table.value(1, 4) == 7
        assert table.value(3, 7) == 1

    def test_triangle_boundary_case_matches_oracle(self):
        assert betti_closed_cycle(PathFamilySpec("cycle", 3, 2)).entries == TRIANGLE

    def test_square_with_t_three(self):
        assert betti_closed_cycle(PathFamilySpec("cycle", 4, 3)).entries == SQUARE_T3

    def test_full_simplex_cycle(self):
        assert betti_closed_cycle(PathFamilySpec("cycle", 4, 4)).entries == {(1, 4): 1}

    def test_provenance_tags(self):
        table = betti_closed_cycle(PathFamilySpec("cycle", 5, 2))
        assert table.method(1, 2) == "eligible_count"
        assert table.method(3, 5) == "closed_form"


class TestClosedLine:
    def test_path_on_four_vertices(self):
        assert betti_closed_line(PathFamilySpec("line", 4, 2)).entries == PATH4_T2

    def test_single_generator(self):
        for t in (2, 3, 5):
            assert betti_closed_line(PathFamilySpec("line", t, t)).entries == {(1, t): 1}

    def test_edge_count(self):
        assert betti_closed_line(PathFamilySpec("line", 5, 2)).value(1, 2) == 4

    def test_matches_oracle(self):
        for n, t in [(4, 2), (5, 2), (6, 3), (7, 2), (8, 4)]:
            spec = PathFamilySpec("line", n, t)
            oracle = betti_hochster(build_path_complex(spec))
            assert betti_closed_line(spec) == oracle

    def test_matches_oracle_on_the_full_range(self):
        for n in range(2, 13):
            for t in range(2, n + 1):
                spec = PathFamilySpec("line", n, t)
                oracle = betti_hochster(build_path_complex(spec))
                assert betti_closed_line(spec) == oracle, (n, t)

    def test_larger_embedding_cycle_gives_same_table(self):
        spec = PathFamilySpec("line", 7, 3)
        base = betti_closed_line(spec)
        for extra in (1, 2, 5):
            assert betti_closed_line(spec, embed_cycle_size=spec.n + spec.t + 1 + extra) == base

    def test_too_small_embedding_rejected(self):
        with pytest.raises(ValueError):
            betti_closed_line(PathFamilySpec("line", 7, 3), embed_cycle_size=8)


class TestPdReg:
    @pytest.mark.parametrize("n,t,pd,reg", [
        (6, 2, 4, 2),
        (7, 4, 3, 4),
        (5, 2, 3, 2),
        (3, 2, 2, 1),
        (4, 4, 1, 3),
    ])
    def test_examples(self, n, t, pd, reg):
        assert pd_reg(PathFamilySpec("cycle", n, t)) == (pd, reg)

    def test_rejects_lines(self):
        with pytest.raises(ValueError):
            pd_reg(PathFamilySpec("line", 5, 2))


class TestFieldIndependenceSpots:
    def test_pentagon_over_three_fields(self):
        delta = build_path_complex(PathFamilySpec("cycle", 5, 2))
        for field in (QQ, GF2, GF32003):
            assert betti_hochster(delta, field).entries == PENTAGON
