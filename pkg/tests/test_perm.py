from __future__ import annotations

import pytest
from hypothesis import given

from subembed import InputError, Permutation
from subembed.perm import parse_permutation_list

from .helpers import permutations


def test_parse_is_one_indexed():
    p = Permutation.parse("(1,2,3)", 4)
    assert p.images == (1, 2, 0, 3)
    assert str(p) == "(1,2,3)"


def test_parse_accepts_spaces_and_infers_degree():
    assert Permutation.parse("(1 2)(3 4)").degree == 4
    assert Permutation.parse("(1 2)(3 4)") == Permutation.parse("(1,2)(3,4)")


def test_right_action_composition():
    a = Permutation.parse("(1,2)", 3)
    b = Permutation.parse("(2,3)", 3)
    # apply a first, then b
    assert (a * b)(0) == b(a(0))
    assert a * b == Permutation.parse("(1,3,2)", 3)


def test_conjugate_is_g_inverse_x_g():
    x = Permutation.parse("(1,2,3)", 4)
    g = Permutation.parse("(1,3,2,4)", 4)
    assert x.conjugate(g) == ~g * x * g
    assert x.conjugate(g).cycle_type() == x.cycle_type()


def test_order_and_power():
    x = Permutation.parse("(1,2,3)(4,5)", 5)
    assert x.order() == 6
    assert (x ** 6).is_identity()
    assert x ** -1 == ~x


@pytest.mark.parametrize("text", ["(1,2", "(a,b)", "(1,1)", "(0,1)"])
def test_parse_errors(text):
    with pytest.raises(InputError):
        Permutation.parse(text, 4)


def test_parse_beyond_degree_names_point():
    with pytest.raises(InputError, match="5"):
        Permutation.parse("(1,5)", 4)


def test_bad_images_rejected():
    with pytest.raises(InputError):
        Permutation([0, 0, 1])


def test_parse_permutation_list():
    gens = parse_permutation_list("(1,2,3),(1,2)", 3)
    assert [g.order() for g in gens] == [3, 2]


@given(permutations(6), permutations(6), permutations(6))
def test_group_axioms(p, q, r):
    e = Permutation.identity(6)
    assert (p * q) * r == p * (q * r)
    assert p * ~p == e and ~p * p == e
    assert p * e == p


@given(permutations(7))
def test_str_parse_round_trip(p):
    assert Permutation.parse(str(p), 7) == p


@given(permutations(6))
def test_order_is_lcm_of_cycle_lengths(p):
    assert (p ** p.order()).is_identity()
    assert all(not (p ** k).is_identity() for k in range(1, p.order()))


@given(permutations(5), permutations(5))
def test_commutator_definition(p, q):
    assert p.commutator(q) == ~p * ~q * p * q
