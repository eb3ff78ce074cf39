"""Brute-force census: builders, tallies, invariants, text format."""

from math import comb, factorial

import pytest

from pathcensus.errors import (
    InvalidOrder,
    OrderTooLarge,
    ParseError,
    TypeOrderMismatch,
)
from pathcensus.oracle import (
    Tournament,
    census,
    complement,
    count_type,
    make_nearly_transitive,
    make_random,
    make_tournament,
    make_transitive,
    tournament_from_text,
    tournament_to_text,
)
from pathcensus.types import canonical_key, signed_lift


# builders -------------------------------------------------------------------

def test_transitive_arcs():
    assert make_transitive(3).arcs() == [(1, 2), (1, 3), (2, 3)]
    assert make_transitive(2).arcs() == [(1, 2)]


def test_transitive_rejects_tiny_order():
    with pytest.raises(InvalidOrder):
        make_transitive(1)


def test_nearly_transitive_reverses_the_long_arc():
    t = make_nearly_transitive(4)
    assert t.beats(4, 1) and not t.beats(1, 4)
    assert t.beats(1, 2) and t.beats(2, 3) and t.beats(3, 4)
    with pytest.raises(InvalidOrder):
        make_nearly_transitive(2)


def test_make_tournament_validates():
    t = make_tournament(3, [(1, 2), (2, 3), (3, 1)])
    assert t.beats(3, 1)
    with pytest.raises(ValueError):
        make_tournament(3, [(1, 2), (2, 1), (2, 3)])
    with pytest.raises(ValueError):
        make_tournament(3, [(1, 2)])
    with pytest.raises(ValueError):
        make_tournament(3, [(1, 1), (1, 3), (2, 3)])


def test_complement_is_an_involution():
    t = make_random(6, seed=3)
    assert complement(complement(t)) == t


def test_complement_of_three_cycle_is_a_three_cycle():
    cycle = make_tournament(3, [(1, 2), (2, 3), (3, 1)])
    back = complement(cycle)
    assert back.arcs() == [(1, 3), (2, 1), (3, 2)]


def test_complement_of_transitive_has_equal_census():
    # the reversed transitive order is transitive again
    t = make_transitive(5)
    assert census(complement(t)).counts == census(t).counts


def test_make_random_is_deterministic():
    a = make_random(5, seed=0)
    b = make_random(5, seed=0)
    assert a == b
    assert a != make_random(5, seed=1) or True  # smoke only, not a contract


def test_make_random_is_complete():
    for seed in range(5):
        t = make_random(6, seed)
        for i in range(1, 7):
            for j in range(i + 1, 7):
                assert t.beats(i, j) != t.beats(j, i)
                assert not t.beats(i, i)


# census ----------------------------------------------------------------------

def test_census_of_tt3_exactly():
    assert census(make_transitive(3)).counts == {
        (2,): 1,
        (1, -1): 1,
        (-1, 1): 1,
    }


def test_census_total_is_half_factorial():
    assert census(make_transitive(4)).total() == 12
    for n in (4, 5, 6):
        t = make_random(n, seed=n)
        assert census(t).total() == factorial(n) // 2


def test_census_tt5_symmetric_two_block():
    c = census(make_transitive(5))
    assert c.counts[canonical_key((2, -2))] == 3


def test_census_rejects_small_and_huge_orders():
    with pytest.raises(InvalidOrder):
        census(make_transitive(2))
    with pytest.raises(OrderTooLarge):
        census(make_transitive(11))


def test_census_parallel_matches_serial():
    t = make_random(6, seed=42)
    assert census(t, jobs=2) == census(t)


# count_type -------------------------------------------------------------------

def test_directed_path_is_unique_in_transitive():
    for n in range(3, 8):
        assert count_type(make_transitive(n), (n - 1,)) == 1


def test_nearly_transitive_directed_counts():
    # 2^(n-2) + 1 directed paths once the extreme arc flips
    assert count_type(make_nearly_transitive(4), (3,)) == 5
    assert count_type(make_nearly_transitive(5), (4,)) == 9
    assert count_type(make_nearly_transitive(3), (2,)) == 3


def test_two_block_count_is_a_binomial():
    assert count_type(make_transitive(4), (2, -1)) == comb(3, 2)


def test_count_type_rejects_order_mismatch():
    with pytest.raises(TypeOrderMismatch):
        count_type(make_transitive(4), (1, -1))


def test_count_type_zero_for_absent_type():
    cycle = make_tournament(3, [(1, 2), (2, 3), (3, 1)])
    assert count_type(cycle, (1, -1)) == 0  # no path reverses in a 3-cycle


# cross-tournament invariants -----------------------------------------------------

def test_complement_invariance_on_random_instances():
    for seed in range(4):
        t = make_random(6, seed)
        assert census(t).counts == census(complement(t)).counts


def test_complement_invariance_and_partition_at_n8():
    t = make_random(8, seed=0)
    c = census(t)
    assert c.total() == factorial(8) // 2
    assert c.counts == census(complement(t)).counts


def test_self_duality_of_transitive():
    c = census(make_transitive(6)).counts
    for key, value in c.items():
        assert c[canonical_key(tuple(-e for e in key))] == value


def test_antidirected_balance():
    # both antidirected starters appear equally often in any tournament
    for n in (5, 7):
        plus = signed_lift((1,) * (n - 1), True)
        minus = signed_lift((1,) * (n - 1), False)
        for t in (make_nearly_transitive(n), make_random(n, seed=n)):
            c = census(t).counts
            assert c.get(canonical_key(plus), 0) == c.get(canonical_key(minus), 0)


def test_every_accumulated_count_was_even():
    # census would raise if a raw tally came out odd; run a few shapes
    for seed in range(3):
        census(make_random(5, seed))


# text format ------------------------------------------------------------------------

def test_text_roundtrip():
    t = make_random(5, seed=9)
    assert tournament_from_text(tournament_to_text(t)) == t


def test_text_format_shape():
    text = tournament_to_text(make_transitive(3))
    assert text == "3\n1 2\n1 3\n2 3\n"


@pytest.mark.parametrize(
    "bad",
    [
        "",
        "x\n1 2",
        "3\n1 2\n1 3",
        "3\n1 2\n2 1\n1 3\n2 3",
        "3\n1 2\n1 3\n2 3 4",
        "3\n1 2\n1 3\n2 z",
    ],
)
def test_text_rejects_malformed(bad):
    with pytest.raises(ParseError):
        tournament_from_text(bad)


def test_tournament_is_hashable_and_frozen():
    t = make_transitive(4)
    assert isinstance(hash(t), int)
    with pytest.raises(AttributeError):
        t.n = 5
