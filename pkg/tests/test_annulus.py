import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anc_sieve.annulus import (
    AnnularPermutation,
    all_rotation_pairs,
    apply_rotation,
    connected_pair_count,
    enumerate_anc,
    enumerate_anc_B,
    enumerate_matchings,
    enumerate_nc_disc,
    fixed_points,
    gamma,
    is_clockwise_cycle,
    is_connected_anc,
    is_noncrossing_disc,
    is_type_B,
    parse_cycle_notation,
    permutations_to_json_lines,
    profile_of,
    rigid_rotation,
    rigid_rotations,
    rotate_disc,
    rotations_of_order,
)
from anc_sieve.config import EnumerationStrategy
from anc_sieve.errors import (
    BoundExceeded,
    CycleNotationError,
    ParityError,
    PreconditionError,
    ProfileError,
)
from anc_sieve.formulas import count_anc, count_anc_B, iter_profiles
from anc_sieve.models import ProfileFilter, RotationPair
from anc_sieve.partitions import Partition


def P(*parts: int) -> Partition:
    return Partition(parts=parts)


@pytest.mark.parametrize(
    "n, m, expected",
    [(2, 2, "(1,2)(3,4)"), (1, 1, "(1)(2)"), (3, 2, "(1,2,3)(4,5)"), (2, 0, "(1,2)")],
)
def test_gamma(n, m, expected):
    assert str(gamma(n, m)) == expected


def test_cycles_are_canonical():
    p = AnnularPermutation.parse(3, 2, "(5,2)(3,1,4)")
    assert p.cycles == ((1, 4, 3), (2, 5))
    assert str(p) == "(1,4,3)(2,5)"
    assert p(4) == 3
    assert p.inverse().compose(p) == AnnularPermutation.identity(3, 2)


@pytest.mark.parametrize(
    "cycle, n, m, expected",
    [
        ((1, 2, 3), 3, 0, True),
        ((1, 3, 2), 3, 0, False),
        ((1, 3), 2, 2, True),
        ((1, 3, 2, 4), 2, 2, False),
        ((4,), 2, 2, True),
    ],
)
def test_is_clockwise_cycle(cycle, n, m, expected):
    assert is_clockwise_cycle(cycle, n, m) is expected


@pytest.mark.parametrize(
    "text, expected",
    [
        ("(1,3)(2,4)", True),
        ("(1,4)(2,3)", True),
        ("(1,3)(2)(4)", True),
        ("(1)(2)(3)(4)", False),
        ("(1,2)(3,4)", False),
    ],
)
def test_is_connected_anc(text, expected):
    assert is_connected_anc(AnnularPermutation.parse(2, 2, text)) is expected


def test_profile_of_two_connected_cycles(two_connected_cycles):
    p = AnnularPermutation.parse(9, 6, two_connected_cycles)
    assert is_connected_anc(p)
    profile = profile_of(p)
    assert (profile.c, profile.r, profile.s, profile.R, profile.S) == (2, 1, 1, 2, 1)
    assert profile.alpha == P(2)
    assert profile.beta == P(1)
    assert profile.lam == P(4, 3)
    assert profile.mu == P(3, 2)


def test_profile_of_rejects_non_anc():
    with pytest.raises(ProfileError):
        profile_of(AnnularPermutation.identity(2, 2))


def test_enumerate_smallest_annuli():
    assert [str(p) for p in enumerate_anc(1, 1)] == ["(1,2)"]
    assert [str(p) for p in enumerate_anc(2, 1)] == [
        "(1)(2,3)", "(1,2,3)", "(1,3,2)", "(1,3)(2)",
    ]


def test_enumerate_with_filter():
    found = enumerate_anc(2, 2, ProfileFilter(c=2))
    assert [str(p) for p in found] == ["(1,3)(2,4)", "(1,4)(2,3)"]
    assert len(enumerate_anc(2, 2)) == 18


@pytest.mark.parametrize("n, m", [(1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (4, 2)])
def test_enumeration_matches_count(n, m):
    assert len(enumerate_anc(n, m)) == count_anc(n, m)


@pytest.mark.parametrize("n, m", [(2, 1), (2, 2), (3, 2), (2, 3), (3, 3)])
def test_strategies_agree(n, m):
    blocks = enumerate_anc(n, m, strategy=EnumerationStrategy.BLOCKS)
    exhaustive = enumerate_anc(n, m, strategy=EnumerationStrategy.EXHAUSTIVE)
    assert blocks == exhaustive


def test_enumeration_is_bounded():
    with pytest.raises(BoundExceeded, match="max_total"):
        enumerate_anc(6, 6)
    with pytest.raises(ProfileError):
        enumerate_anc(1, 0)


def test_apply_rotation():
    rot = RotationPair(n=2, m=2, ext_shift=1, int_shift=1)
    assert rot.label_map() == (2, 1, 4, 3)
    p = AnnularPermutation.parse(2, 2, "(1,3)(2,4)")
    assert apply_rotation(rot, p) == p
    q = AnnularPermutation.parse(2, 2, "(1,3)(2)(4)")
    assert str(apply_rotation(rot, q)) == "(1)(2,4)(3)"
    with pytest.raises(PreconditionError):
        apply_rotation(RotationPair(n=3, m=2, ext_shift=1, int_shift=0), p)


def test_unequal_orders_fix_nothing():
    rot = RotationPair(n=2, m=1, ext_shift=1, int_shift=0)
    assert not rot.is_annular
    assert fixed_points(rot, 2, 1).count == 0


def test_rotations_of_order():
    assert [str(r) for r in rotations_of_order(6, 6, 3)] == [
        "rot(2,2)", "rot(2,4)", "rot(4,2)", "rot(4,4)",
    ]
    assert [str(r) for r in rigid_rotations(6, 6, 3)] == ["rot(2,2)", "rot(4,4)"]
    assert rotations_of_order(4, 2, 3) == []
    assert len(all_rotation_pairs(3, 2)) == 6


def test_rigid_rotation():
    assert str(rigid_rotation(3, 3, 3)) == "rot(1,1)"
    assert str(rigid_rotation(3, 3, 3, j=2)) == "rot(2,2)"
    assert str(rigid_rotation(4, 2, 2)) == "rot(2,1)"
    with pytest.raises(PreconditionError):
        rigid_rotation(4, 2, 2, j=2)
    with pytest.raises(PreconditionError):
        rigid_rotation(3, 2, 2)


def test_half_turn_fixed_points():
    fixed = fixed_points(rigid_rotation(2, 2, 2), 2, 2)
    assert fixed.count == 2
    assert all(is_connected_anc(p) for p in fixed.permutations)


def test_twisted_rotation_differs_from_rigid():
    only_connected = ProfileFilter(c=3)
    assert len(enumerate_anc(3, 3, only_connected)) == 3
    rigid = RotationPair(n=3, m=3, ext_shift=1, int_shift=1)
    twisted = RotationPair(n=3, m=3, ext_shift=1, int_shift=2)
    assert rigid.is_rigid and not twisted.is_rigid
    assert fixed_points(rigid, 3, 3, only_connected).count == 3
    assert fixed_points(twisted, 3, 3, only_connected).count == 0


def test_type_B():
    found = enumerate_anc_B(1, 1)
    assert len(found) == 2
    assert all(is_type_B(p) for p in found)
    with pytest.raises(ParityError):
        is_type_B(AnnularPermutation.parse(2, 1, "(1,3)(2)"))


@pytest.mark.parametrize(
    "n, m, c, expected",
    [(2, 1, 1, 8), (1, 2, 1, 8), (2, 2, 1, 32), (2, 2, 2, 4)],
)
def test_type_B_by_connected_count(n, m, c, expected):
    found = enumerate_anc_B(n, m, ProfileFilter(c=c))
    assert len(found) == count_anc_B(n, m, c=c) == expected
    assert all(is_type_B(p) and profile_of(p).c == 2 * c for p in found)


@pytest.mark.parametrize("n, m", [(2, 1), (1, 2)])
def test_type_B_by_full_profile(n, m):
    total = 0
    for profile in iter_profiles(n, m):
        found = enumerate_anc_B(n, m, ProfileFilter.from_profile(profile))
        assert len(found) == count_anc_B(
            n, m, c=profile.c, r=profile.r, s=profile.s, R=profile.R, S=profile.S,
            alpha=profile.alpha, beta=profile.beta, lam=profile.lam, mu=profile.mu,
        )
        total += len(found)
    assert total == count_anc_B(n, m) == 8


def test_matchings():
    assert [str(p) for p in enumerate_matchings(2, 2)] == ["(1,3)(2,4)", "(1,4)(2,3)"]
    assert [str(p) for p in enumerate_matchings(1, 1)] == ["(1,2)"]
    assert enumerate_matchings(2, 1) == ()
    assert [connected_pair_count(p) for p in enumerate_matchings(2, 2)] == [2, 2]


def test_disc():
    assert len(enumerate_nc_disc(3)) == 5
    assert len(enumerate_nc_disc(4, P(2, 1, 1))) == 6
    assert all(is_noncrossing_disc(p) for p in enumerate_nc_disc(4))
    assert not is_noncrossing_disc(AnnularPermutation.parse(4, 0, "(1,3)(2,4)"))
    with pytest.raises(ProfileError):
        enumerate_nc_disc(0)


def test_rotate_disc():
    p = AnnularPermutation.parse(4, 0, "(1,2)")
    assert str(rotate_disc(p, 1)) == "(1)(2,3)(4)"
    for q in enumerate_nc_disc(4):
        assert rotate_disc(rotate_disc(q, 1), 3) == q
        assert rotate_disc(q, 4) == q


def test_parse_cycle_notation():
    assert parse_cycle_notation(" ( 1 , 3 )( 2 , 4 ) ") == [(1, 3), (2, 4)]
    assert parse_cycle_notation("()") == []


@pytest.mark.parametrize("text", ["", "1,2", "(1,2", "(a)", "(1,,2)", "(1)(2"])
def test_parse_cycle_notation_rejects(text):
    with pytest.raises(CycleNotationError):
        parse_cycle_notation(text)


@pytest.mark.parametrize("text", ["(1,5)", "(1,2)(2,3)", "(0,1)"])
def test_bad_labels(text):
    with pytest.raises(CycleNotationError):
        AnnularPermutation.parse(2, 2, text)


def test_json_form():
    p = AnnularPermutation.parse(2, 2, "(2,4)(1,3)")
    assert p.to_json() == {"n": 2, "m": 2, "cycles": [[1, 3], [2, 4]]}
    assert AnnularPermutation.from_json(p.to_json()) == p
    lines = list(permutations_to_json_lines([p]))
    assert lines == ['{"n":2,"m":2,"cycles":[[1,3],[2,4]]}']
    assert json.loads(lines[0])["cycles"] == [[1, 3], [2, 4]]


@settings(max_examples=40, deadline=None)
@given(
    index=st.integers(min_value=0, max_value=10_000),
    ext_shift=st.integers(min_value=0, max_value=2),
    int_shift=st.integers(min_value=0, max_value=2),
)
def test_rotation_preserves_anc(index, ext_shift, int_shift):
    catalog = enumerate_anc(3, 3)
    p = catalog[index % len(catalog)]
    rot = RotationPair(n=3, m=3, ext_shift=ext_shift, int_shift=int_shift)
    rotated = apply_rotation(rot, p)
    assert is_connected_anc(rotated)
    assert rotated in catalog
    assert profile_of(rotated) == profile_of(p)
