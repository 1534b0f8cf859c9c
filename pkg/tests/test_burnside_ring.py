from __future__ import annotations

import random
from fractions import Fraction
from math import lcm

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from burnside import (
    BurnsideElement,
    GhostVector,
    cfb_check,
    dress_congruences,
    dress_membership,
    fixed_coset_count,
    ghost_of,
    mark,
    marks_membership,
    minimal_multiplier,
    table_of_marks,
)

SMALL_GROUPS = ["C1", "C(2^2)", "C(3^2)", "C12", "EA(2,3)", "C4xC2", "D8", "Q8", "SD(16)"]


def test_marks_of_trivial_group(lattice_of):
    assert table_of_marks(lattice_of("C1")).entries == ((1,),)


def test_marks_of_order_two_cyclic(lattice_of):
    assert table_of_marks(lattice_of("C2")).entries == ((2, 1), (0, 1))


def test_marks_of_order_four_cyclic(lattice_of):
    marks = table_of_marks(lattice_of("C(2^2)"))
    assert marks.entries == ((4, 2, 1), (0, 2, 1), (0, 0, 1))


def test_marks_of_quaternion_group(lattice_of):
    marks = table_of_marks(lattice_of("Q8"))
    assert marks.entries == (
        (8, 4, 2, 2, 2, 1),
        (0, 4, 2, 2, 2, 1),
        (0, 0, 2, 0, 0, 1),
        (0, 0, 0, 2, 0, 1),
        (0, 0, 0, 0, 2, 1),
        (0, 0, 0, 0, 0, 1),
    )


def test_single_mark_entries(lattice_of):
    lattice = lattice_of("Q8")
    # the center is contained in every order-4 subgroup, so it fixes both cosets
    assert mark(lattice, 1, 2) == 2
    assert mark(lattice, 0, 2) == 2
    assert mark(lattice, 0, 1) == 4
    assert mark(lattice, 5, 5) == 1


def test_mark_independent_of_representative(lattice_of):
    lattice = lattice_of("D8")
    group = lattice.group
    for i, cls_i in enumerate(lattice.classes):
        for j, cls_j in enumerate(lattice.classes):
            expected = mark(lattice, i, j)
            for u in cls_i.members:
                for v in cls_j.members:
                    assert fixed_coset_count(group, u, v) == expected


def _assert_marks_invariants(lattice):
    group = lattice.group
    entries = table_of_marks(lattice).entries
    classes = lattice.classes
    n = lattice.class_count
    for j in range(n):
        assert entries[0][j] == group.order // classes[j].order
        size = len(classes[j].members)
        assert entries[j][j] == group.order // (size * classes[j].order)
        assert entries[j][j] > 0
    for i in range(n):
        for j in range(n):
            if classes[i].order > classes[j].order or (i != j and classes[i].order == classes[j].order):
                assert entries[i][j] == 0


@pytest.mark.parametrize("text", SMALL_GROUPS)
def test_marks_invariants(text, lattice_of):
    _assert_marks_invariants(lattice_of(text))


def test_marks_invariants_across_catalog(lattice_of):
    from burnside import standard_catalog

    for spec in standard_catalog(64):
        _assert_marks_invariants(lattice_of(spec.text()))


def test_ghost_of_basis_and_zero(lattice_of):
    lattice = lattice_of("D8")
    n = lattice.class_count
    whole = BurnsideElement(lattice, [0] * (n - 1) + [1])
    assert ghost_of(lattice, whole).values == (1,) * n
    zero = BurnsideElement(lattice, [0] * n)
    assert ghost_of(lattice, zero).values == (0,) * n


def test_ghost_of_quaternion_center_coset_space(lattice_of):
    lattice = lattice_of("Q8")
    element = BurnsideElement(lattice, [0, 1, 0, 0, 0, 0])
    assert ghost_of(lattice, element).values == (4, 4, 0, 0, 0, 0)


def test_dress_rejects_indicator_of_trivial_class(lattice_of):
    lattice = lattice_of("C2")
    result = dress_membership(lattice, GhostVector(lattice, (1, 0)))
    assert not result.holds
    violation = result.violations[0]
    assert (violation.u_class, violation.v_class) == (0, 1)
    assert violation.index == 2
    assert violation.lhs_sum == 1
    assert violation.residue == 1


def test_dress_accepts_doubled_vector(lattice_of):
    lattice = lattice_of("C2")
    assert dress_membership(lattice, GhostVector(lattice, (2, 0))).holds


def test_dress_on_odd_prime(lattice_of):
    lattice = lattice_of("C3")
    assert not dress_membership(lattice, GhostVector(lattice, (1, 0))).holds
    assert dress_membership(lattice, GhostVector(lattice, (3, 0))).holds


def test_dress_congruence_count_on_quaternion(lattice_of):
    # all subgroups of Q8 are normal, so all 12 nested pairs give congruences
    lattice = lattice_of("Q8")
    congruences = dress_congruences(lattice)
    assert len(congruences) == 12
    assert all(c.index > 1 for c in congruences)


def test_marks_membership_examples(lattice_of):
    lattice = lattice_of("C2")
    ok, coeffs = marks_membership(lattice, GhostVector(lattice, (1, 1)))
    assert ok and coeffs == (Fraction(0), Fraction(1))
    ok, coeffs = marks_membership(lattice, GhostVector(lattice, (1, 0)))
    assert not ok
    assert coeffs == (Fraction(1, 2), Fraction(0))
    # the solve is exact: the coefficients reproduce the input vector
    assert ghost_of(lattice, BurnsideElement(lattice, (0, 0))).values == (0, 0)


def test_round_trip_recovers_coefficients(lattice_of):
    rng = random.Random(1729)
    for text in SMALL_GROUPS:
        lattice = lattice_of(text)
        n = lattice.class_count
        for _ in range(120):
            coeffs = [rng.randint(-5, 5) for _ in range(n)]
            image = ghost_of(lattice, BurnsideElement(lattice, coeffs))
            assert dress_membership(lattice, image).holds
            ok, recovered = marks_membership(lattice, image)
            assert ok
            assert list(recovered) == coeffs


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_membership_routes_agree_on_random_vectors(data, lattice_of):
    text = data.draw(st.sampled_from(["C(2^3)", "D8", "Q8", "C12", "EA(3,2)"]))
    lattice = lattice_of(text)
    values = data.draw(
        st.lists(
            st.integers(min_value=-6, max_value=6),
            min_size=lattice.class_count,
            max_size=lattice.class_count,
        )
    )
    vector = GhostVector(lattice, values)
    assert dress_membership(lattice, vector).holds == marks_membership(lattice, vector)[0]


def test_cfb_necessity(lattice_of):
    lattice = lattice_of("C2")
    assert cfb_check(lattice, GhostVector(lattice, (2, 0)))
    assert not cfb_check(lattice, GhostVector(lattice, (1, 0)))
    rng = random.Random(42)
    for text in SMALL_GROUPS:
        latt = lattice_of(text)
        n = latt.class_count
        assert cfb_check(latt, GhostVector(latt, (1,) * n))
        for _ in range(100):
            vector = GhostVector(latt, [rng.randint(-5, 5) for _ in range(n)])
            if dress_membership(latt, vector).holds:
                assert cfb_check(latt, vector)


def test_minimal_multiplier_examples(lattice_of):
    lattice = lattice_of("C2")
    assert minimal_multiplier(lattice, GhostVector(lattice, (1, 1))) == 1
    assert minimal_multiplier(lattice, GhostVector(lattice, (1, 0))) == 2
    with pytest.raises(ValueError):
        minimal_multiplier(lattice, GhostVector(lattice, (0, 0)))


def test_minimal_multiplier_agrees_with_ascending_search(lattice_of):
    rng = random.Random(7)
    for text in ("C(2^2)", "D8", "Q8", "C12"):
        lattice = lattice_of(text)
        n = lattice.class_count
        for _ in range(25):
            values = [rng.randint(-4, 4) for _ in range(n)]
            if not any(values):
                values[0] = 1
            vector = GhostVector(lattice, values)
            expected = minimal_multiplier(lattice, vector)
            found = next(
                d
                for d in range(1, lattice.group.order + 1)
                if dress_membership(lattice, d * vector).holds
            )
            assert expected == found


def test_unit_vector_multipliers_reach_group_order(lattice_of):
    for text in ("C(2^3)", "Q8", "D8", "C12", "EA(3,2)"):
        lattice = lattice_of(text)
        n = lattice.class_count
        acc = 1
        for k in range(n):
            unit = GhostVector(lattice, [1 if i == k else 0 for i in range(n)])
            m = minimal_multiplier(lattice, unit)
            assert lattice.group.order % m == 0
            acc = lcm(acc, m)
        assert acc == lattice.group.order


def test_vector_dimension_mismatch(lattice_of):
    lattice = lattice_of("Q8")
    with pytest.raises(ValueError):
        GhostVector(lattice, (1, 2, 3))
    other = lattice_of("C2")
    foreign = GhostVector(other, (1, 0))
    with pytest.raises(ValueError):
        dress_membership(lattice, foreign)
    with pytest.raises(ValueError):
        marks_membership(lattice, foreign)


def test_ghost_vector_scaling(lattice_of):
    lattice = lattice_of("C2")
    v = GhostVector(lattice, (1, 2))
    assert (3 * v).values == (3, 6)
    assert (v * 2).values == (2, 4)
