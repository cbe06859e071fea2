from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from _oracles import oracle_localization
from wpvol import (
    EmptyQuotient,
    GeneralTypeUnsupported,
    NotCalabiYau,
    UnsupportedSize,
    VolumeValue,
    cy_reduced_volume,
    df_invariant,
    localization_breakdown,
    localization_prefactor,
    localization_volume,
    mcmullen_volume,
    moment_value,
    permuted,
    positive_fixed_points,
    random_cy_weights,
    validate_weights,
)

F = Fraction


class TestMoment:
    def test_empty_set_gives_total(self):
        w = validate_weights(["1/2"] * 4)
        assert moment_value(w, ()) == 2

    def test_singleton(self):
        w = validate_weights(["1/2"] * 4)
        assert moment_value(w, (1,)) == 1

    def test_pair_negative(self):
        w = validate_weights(["1/5", "1/2", "1/2", "1/2"])
        assert moment_value(w, (2, 3)) == F(-3, 10)

    def test_full_set(self):
        w = validate_weights(["1/2"] * 4)
        assert moment_value(w, (1, 2, 3, 4)) == -2


class TestDfInvariant:
    def test_singleton(self):
        w = validate_weights(["1/3", "1/2", "1/2", "2/3"])
        assert df_invariant(w, (1,)) == F(5, 3)

    def test_no_collision(self):
        w = validate_weights(["1/3", "1/2", "1/2", "2/3"])
        assert df_invariant(w, ()) == w.total

    def test_wall_value(self):
        w = validate_weights(["1/2"] * 4)
        assert df_invariant(w, (1, 2)) == 0

    def test_alias_of_moment(self):
        w = validate_weights(["3/10", "11/20", "11/20", "3/5"])
        for s in [(), (1,), (2, 4), (1, 3, 4)]:
            assert df_invariant(w, s) == moment_value(w, s)


class TestPositiveFixedPoints:
    def test_symmetric_cy(self):
        pts = positive_fixed_points(validate_weights(["1/2"] * 4))
        assert [p.flipped for p in pts] == [(), (1,), (2,), (3,), (4,)]
        assert pts[0].moment == 2
        assert all(p.moment == 1 for p in pts[1:])

    def test_generic_cy(self):
        pts = positive_fixed_points(
            validate_weights(["3/10", "11/20", "11/20", "3/5"])
        )
        flipped = [p.flipped for p in pts]
        assert flipped == [
            (), (1,), (2,), (3,), (4,), (1, 2), (1, 3), (1, 4),
        ]

    @given(st.integers(3, 8), st.integers(0, 2 ** 62))
    @settings(max_examples=30, deadline=None)
    def test_empty_set_always_present_and_moments_positive(self, n, seed):
        w = random_cy_weights(n, seed)
        pts = positive_fixed_points(w)
        assert pts[0].flipped == ()
        assert pts[0].moment == w.total
        assert all(p.moment > 0 for p in pts)

    def test_size_cap(self):
        w = validate_weights([F(1, 20)] * 31)
        with pytest.raises(UnsupportedSize):
            positive_fixed_points(w)


GOLDEN = [
    (["2/5", "2/5", "2/5", "2/5", "2/5"], F(8, 5), 2),
    (["1/5", "1/2", "1/2", "1/2"], F(4, 5), 1),
    (["1/2", "1/2", "1/2", "1/2"], F(2), 1),
    (["3/10", "11/20", "11/20", "3/5"], F(6, 5), 1),
]


class TestLocalizationVolume:
    @pytest.mark.parametrize("weights,coefficient,power", GOLDEN)
    def test_golden_values(self, weights, coefficient, power):
        value = localization_volume(validate_weights(weights))
        assert value == VolumeValue(coefficient, power)

    def test_three_points_convention(self):
        w = validate_weights(["2/3", "1/2", "1/2"])
        assert localization_volume(w) == VolumeValue(F(1), 0)

    def test_empty_quotient_rejected(self):
        w = validate_weights(["9/10", "1/10", "1/10", "1/10"])
        with pytest.raises(EmptyQuotient):
            localization_volume(w)

    def test_general_type_rejected(self):
        w = validate_weights(["9/10", "9/10", "9/10", "9/10"])
        with pytest.raises(GeneralTypeUnsupported):
            localization_volume(w)

    @given(st.integers(0, 2 ** 62))
    @settings(max_examples=40, deadline=None)
    def test_matches_direct_subset_sum(self, seed):
        w = random_cy_weights(6, seed)
        assert localization_volume(w).coefficient == oracle_localization(w)

    @given(st.integers(4, 8), st.integers(0, 2 ** 62))
    @settings(max_examples=60, deadline=None)
    def test_cross_formula_equality_at_cy(self, n, seed):
        w = random_cy_weights(n, seed)
        assert localization_volume(w) == mcmullen_volume(w) == cy_reduced_volume(w)

    @given(st.integers(4, 7), st.integers(0, 2 ** 62), st.randoms(use_true_random=False))
    @settings(max_examples=40, deadline=None)
    def test_permutation_invariance(self, n, seed, rng):
        w = random_cy_weights(n, seed)
        order = list(range(n))
        rng.shuffle(order)
        assert localization_volume(permuted(w, order)) == localization_volume(w)

    def test_fano_scaling_along_uniform_path(self):
        # no wall is crossed when all weights shrink together, so the
        # coefficient scales by the (n-3)rd power of the scale factor
        w = random_cy_weights(6, 77)
        base = localization_volume(w).coefficient
        for eps in (F(1, 10), F(1, 100)):
            scaled = validate_weights([(1 - eps / 2) * d for d in w])
            assert localization_volume(scaled).coefficient == base * (1 - eps / 2) ** 3

    def test_wall_evaluation_matches_chamber_limits(self):
        # the symmetric point sits on six pair walls; the two adjacent
        # chamber formulas both tend to its value
        on_wall = localization_volume(validate_weights(["1/2"] * 4)).coefficient
        assert on_wall == 2
        for delta in (F(1, 100), F(1, 1000)):
            low = validate_weights(
                [F(1, 2) - 3 * delta] + [F(1, 2) + delta] * 3
            )
            high = validate_weights(
                [F(1, 2) + 3 * delta] + [F(1, 2) - delta] * 3
            )
            assert localization_volume(low).coefficient == 2 - 12 * delta
            assert localization_volume(high).coefficient == 2 - 12 * delta


class TestCyReduced:
    def test_symmetric(self):
        w = validate_weights(["1/2"] * 4)
        assert cy_reduced_volume(w) == VolumeValue(F(2), 1)

    def test_five_points(self):
        w = validate_weights(["2/5"] * 5)
        assert cy_reduced_volume(w) == VolumeValue(F(8, 5), 2)

    def test_four_point_walls(self):
        w = validate_weights(["1/3", "1/2", "1/2", "2/3"])
        assert cy_reduced_volume(w) == VolumeValue(F(4, 3), 1)

    def test_rejects_fano(self):
        with pytest.raises(NotCalabiYau):
            cy_reduced_volume(validate_weights(["1/4"] * 4))


class TestBreakdown:
    def test_symmetric_terms(self):
        brk = localization_breakdown(validate_weights(["1/2"] * 4))
        assert len(brk.terms) == 5
        assert brk.terms[0].point.flipped == ()
        assert brk.terms[0].sign == 1
        assert brk.terms[0].contribution == 2
        for term in brk.terms[1:]:
            assert term.sign == -1
            assert term.contribution == 1
        assert brk.total == -2

    def test_fano_total(self):
        brk = localization_breakdown(validate_weights(["1/5", "1/2", "1/2", "1/2"]))
        assert len(brk.terms) == 8
        assert brk.total == F(-4, 5)

    @given(st.integers(4, 7), st.integers(0, 2 ** 62))
    @settings(max_examples=40, deadline=None)
    def test_reconstructs_volume(self, n, seed):
        w = random_cy_weights(n, seed)
        brk = localization_breakdown(w)
        assert sum(t.sign * t.contribution for t in brk.terms) == brk.total
        assert localization_prefactor(n) * brk.total == localization_volume(w).coefficient
