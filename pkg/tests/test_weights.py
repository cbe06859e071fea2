from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from wpvol import (
    DimensionMismatch,
    DimensionTooSmall,
    GeometryClass,
    HassettCase,
    NonRational,
    UnsupportedSize,
    WeightOutOfRange,
    classify_geometry,
    git_nonempty,
    hassett_case,
    parse_weight,
    parse_weight_list,
    random_cy_weights,
    validate_weights,
    wall_report,
    weight_numerators,
)

F = Fraction


class TestParsing:
    def test_fraction_strings(self):
        assert parse_weight("3/10") == F(3, 10)
        assert parse_weight(" 1/2 ") == F(1, 2)
        assert parse_weight("1 / 2") == F(1, 2)

    def test_decimal_strings_convert_exactly(self):
        assert parse_weight("0.55") == F(11, 20)
        assert parse_weight("0.5") == F(1, 2)

    def test_floats_rejected(self):
        with pytest.raises(NonRational):
            parse_weight(0.5)

    def test_garbage_rejected(self):
        with pytest.raises(NonRational):
            parse_weight("one half")
        with pytest.raises(NonRational):
            parse_weight("1/0")

    def test_comma_list(self):
        w = parse_weight_list("1/2, 1/2,1/2 ,1/2")
        assert w.weights == (F(1, 2),) * 4


class TestValidation:
    def test_valid_vector(self):
        w = validate_weights(["1/2", "1/2", "1/2", "1/2"])
        assert w.n == 4 and w.total == 2

    def test_closed_endpoint_rejected(self):
        with pytest.raises(WeightOutOfRange):
            validate_weights(["1", "1/2", "1/2"])
        with pytest.raises(WeightOutOfRange):
            validate_weights([F(0), F(1, 2), F(1, 2)])

    def test_too_few_points(self):
        with pytest.raises(DimensionTooSmall):
            validate_weights(["1/2", "1/2"])


class TestClassify:
    def test_calabi_yau(self):
        w = validate_weights(["1/2"] * 4)
        assert classify_geometry(w) is GeometryClass.LOG_CALABI_YAU

    def test_fano(self):
        w = validate_weights(["1/4"] * 4)
        assert classify_geometry(w) is GeometryClass.LOG_FANO

    def test_general_type(self):
        w = validate_weights(["9/10", "9/10", "9/10", "1/20"])
        assert classify_geometry(w) is GeometryClass.LOG_GENERAL_TYPE

    @given(st.lists(st.integers(1, 59), min_size=3, max_size=8))
    def test_trichotomy_total_and_exclusive(self, nums):
        w = validate_weights([F(a, 60) for a in nums])
        cls = classify_geometry(w)
        expected = {
            True: GeometryClass.LOG_FANO,
            False: GeometryClass.LOG_GENERAL_TYPE,
        }
        if w.total == 2:
            assert cls is GeometryClass.LOG_CALABI_YAU
        else:
            assert cls is expected[w.total < 2]


class TestGitNonempty:
    def test_symmetric(self):
        assert git_nonempty(validate_weights(["1/2"] * 4))

    def test_dominant_weight(self):
        assert not git_nonempty(validate_weights(["9/10", "1/10", "1/10", "1/10"]))

    def test_fano_generic(self):
        assert git_nonempty(validate_weights(["1/5", "1/2", "1/2", "1/2"]))


class TestWallReport:
    def test_symmetric_cy_all_pairs_are_walls(self):
        rep = wall_report(validate_weights(["1/2"] * 4))
        pairs = {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}
        assert set(rep.hassett_walls) == pairs
        assert set(rep.localization_walls) == pairs
        assert rep.on_wall

    def test_generic_cy_no_walls(self):
        rep = wall_report(validate_weights(["3/10", "11/20", "11/20", "3/5"]))
        assert rep.hassett_walls == ()
        assert rep.localization_walls == ()
        assert not rep.on_wall

    def test_two_walls(self):
        rep = wall_report(validate_weights(["1/3", "1/2", "1/2", "2/3"]))
        assert set(rep.hassett_walls) == {(1, 4), (2, 3)}
        assert rep.on_wall

    def test_fano_localization_wall_without_hassett(self):
        rep = wall_report(validate_weights(["1/4"] * 4))
        assert rep.hassett_walls == ()
        assert len(rep.localization_walls) == 6
        assert rep.on_wall

    def test_size_cap(self):
        w = validate_weights([F(1, 20)] * 31)
        with pytest.raises(UnsupportedSize):
            wall_report(w)

    @given(st.integers(0, 2 ** 31))
    @settings(max_examples=40, deadline=None)
    def test_cy_walls_selfdual(self, seed):
        w = random_cy_weights(5, seed)
        rep = wall_report(w)
        full = set(range(1, 6))
        hassett = set(rep.hassett_walls)
        localization = set(rep.localization_walls)
        assert hassett == localization
        for s in localization:
            assert tuple(sorted(full - set(s))) in localization


class TestHassettCase:
    def test_no_collision(self):
        w = validate_weights(["3/5", "3/5", "3/5", "1/5"])
        assert hassett_case(w) is HassettCase.NO_COLLISION

    def test_collision(self):
        w = validate_weights(["3/5", "3/5", "3/5", "9/20"])
        assert hassett_case(w) is HassettCase.COLLISION_NEEDS_BLOWUP

    def test_other(self):
        w = validate_weights(["1/4"] * 4)
        assert hassett_case(w) is HassettCase.OTHER

    def test_dimension_guard(self):
        with pytest.raises(DimensionMismatch):
            hassett_case(validate_weights(["1/2"] * 5))


class TestRandomCyWeights:
    @given(st.integers(3, 9), st.integers(0, 2 ** 62))
    @settings(max_examples=60, deadline=None)
    def test_exact_cy_and_in_range(self, n, seed):
        w = random_cy_weights(n, seed)
        assert w.n == n
        assert w.total == 2
        assert classify_geometry(w) is GeometryClass.LOG_CALABI_YAU
        assert all(0 < d < 1 for d in w)

    def test_deterministic(self):
        assert random_cy_weights(5, 1234) == random_cy_weights(5, 1234)

    def test_dimension_guard(self):
        with pytest.raises(DimensionTooSmall):
            random_cy_weights(2, 0)


def test_weight_numerators_shared_denominator():
    w = validate_weights(["3/10", "11/20", "11/20", "3/5"])
    nums, L = weight_numerators(w)
    assert L == 20
    assert nums == [6, 11, 11, 12]
    assert [F(a, L) for a in nums] == list(w.weights)
