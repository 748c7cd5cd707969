import math

import pytest

from dessins.dessin import (
    canonical_form,
    canonical_form_normalized,
    is_clean,
    is_extra_clean,
    validate,
)
from dessins.enumeration import enumerate_clean, enumerate_normalized, permutations_with_cycles

from oracles import brute_iso_key, clean_tree_classes, cycle_count


def test_permutations_with_cycles():
    # unsigned Stirling numbers of the first kind
    assert sum(1 for _ in permutations_with_cycles(5, 2)) == 50
    assert sum(1 for _ in permutations_with_cycles(6, 4)) == 85
    total = sum(sum(1 for _ in permutations_with_cycles(5, k)) for k in range(6))
    assert total == math.factorial(5)
    perms = [tuple(p) for p in permutations_with_cycles(6, 3)]
    assert len(set(perms)) == len(perms)
    assert all(cycle_count(p) == 3 and sorted(p) == list(range(6)) for p in perms)


@pytest.mark.parametrize("n, count", [(2, 1), (4, 1)])
def test_small_counts(n, count):
    assert len(enumerate_clean(n)) == count


@pytest.mark.parametrize("n", [2, 4, 6])
def test_matches_double_enumeration(n):
    oracle = clean_tree_classes(n)
    ds = enumerate_clean(n)
    assert len(ds) == len(oracle)
    assert {brute_iso_key(d.s0._zero, d.s1._zero) for d in ds} == oracle


def test_counts_up_to_ten():
    # plane trees with n/2 edges: 1, 1, 2, 3, 6
    assert [len(enumerate_clean(n)) for n in (2, 4, 6, 8, 10)] == [1, 1, 2, 3, 6]


def test_sorted_and_distinct():
    ds = enumerate_clean(8)
    keys = [canonical_form(d).key for d in ds]
    assert keys == sorted(set(keys))
    assert all(validate(d).ok and is_clean(d) for d in ds)


def test_errors():
    with pytest.raises(ValueError):
        enumerate_clean(5)
    with pytest.raises(ValueError):
        enumerate_clean(12)
    with pytest.raises(ValueError):
        enumerate_normalized(0)


def test_path_extra_clean_markings():
    nds = enumerate_normalized(4, extra_clean_only=True)
    # both orders of the two ends; the half-turn relates them, so one class
    assert len(nds) == 1
    assert all(is_extra_clean(nd) for nd in nds)


def test_normalized_counts():
    assert [len(enumerate_normalized(n)) for n in (4, 6, 8)] == [10, 35, 126]
    assert [len(enumerate_normalized(n, True)) for n in (4, 6, 8)] == [1, 3, 10]


def test_star_markings_present(star_f, star_g):
    keys = {canonical_form_normalized(nd) for nd in enumerate_normalized(8, extra_clean_only=True)}
    assert canonical_form_normalized(star_f) in keys
    assert canonical_form_normalized(star_g) in keys
    assert canonical_form_normalized(star_f) != canonical_form_normalized(star_g)


def test_outputs_valid():
    for nd in enumerate_normalized(6):
        assert validate(nd).ok
    keys = [canonical_form_normalized(nd) for nd in enumerate_normalized(6)]
    assert len(set(keys)) == len(keys)
