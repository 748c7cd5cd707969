"""End-to-end acceptance checks, one test per criterion, each with a time bound.

Every test prints a single PASS/FAIL line (visible with ``pytest -s`` or in
the terminal even under capture, since the line is written uncaptured).
"""

import random
import time
import numpy as np
import pytest

from dessins.dessin import (
    NormalizedDessin,
    TreeDessin,
    canonical_form,
    canonical_form_normalized,
    is_isomorphic,
    refine,
    smooth,
    underlying,
)
from dessins.dynamics import compose, fingerprint, iterate_recursion, iterate_substitution, monodromy
from dessins.enumeration import enumerate_clean, enumerate_normalized
from dessins.hubbard import canonical_form_hubbard, dessin_to_hubbard, hubbard_to_dessin, validate_hubbard
from dessins.permcore import Perm, PermGroup, group_order

from oracles import all_tree_pairs, brute_iso_key, clean_tree_classes, closure_order, conj


@pytest.fixture
def criterion(capsys):
    """Run ``body`` under a time bound and print one result line."""

    def run(number, title, bound, body):
        start = time.perf_counter()
        try:
            detail = body()
            elapsed = time.perf_counter() - start
            assert elapsed < bound, f"took {elapsed:.2f} s, bound {bound} s"
        except BaseException as exc:
            elapsed = time.perf_counter() - start
            with capsys.disabled():
                print(f"\nFAIL criterion {number} ({title}) {elapsed:.2f} s: {exc}")
            raise
        with capsys.disabled():
            print(f"\nPASS criterion {number} ({title}) {elapsed:.2f} s < {bound} s: {detail}")

    return run


# criterion 1: numerical lift of loops around 0 and 1 for 4z^4(1 - z^4)

def _fiber(c):
    # h(z) = c  <=>  -4 z^8 + 4 z^4 - c = 0
    return np.roots([-4, 0, 0, 0, 4, 0, 0, 0, -c])


def _lift(points, path):
    cur = points.copy()
    for c in path:
        nxt = _fiber(c)
        order = [int(np.argmin(np.abs(nxt - z))) for z in cur]
        assert len(set(order)) == len(cur), "path step too coarse"
        cur = nxt[order]
    return cur


def _numeric_star():
    base = _fiber(0.5)
    base = base[np.argsort(np.angle(base))]
    theta = np.linspace(0, 2 * np.pi, 800)
    loops = (0.5 * np.exp(1j * theta), 1 - 0.5 * np.exp(1j * theta))
    rotations = []
    for loop in loops:
        end = _lift(base, loop)
        rotations.append(Perm(tuple(int(np.argmin(np.abs(base - z))) + 1 for z in end)))
    d = TreeDessin(*rotations)

    def mark(target):
        return d.vertex_of("B", int(np.argmin(np.abs(base - target))) + 1)

    f = NormalizedDessin(d, mark(-1), mark(1))
    g = NormalizedDessin(d, mark(-1), mark(1j))
    return d, f, g


def test_criterion_1_star_depth_one(criterion, star, star_f, star_g):
    def body():
        d, f_num, g_num = _numeric_star()
        assert is_isomorphic(d, star)
        assert is_isomorphic(refine(TreeDessin.from_cycles(4, "(1 2 3 4)", "()")), star)
        assert canonical_form_normalized(f_num) == canonical_form_normalized(star_f)
        assert canonical_form_normalized(g_num) == canonical_form_normalized(star_g)
        assert fingerprint(star_f) == fingerprint(star_g)
        assert is_isomorphic(underlying(star_f), underlying(star_g))
        assert canonical_form_normalized(star_f) != canonical_form_normalized(star_g)
        return f"numeric lift matches star; |Mon| = {fingerprint(star_f).mon_orders[0]} for both markings"

    criterion(1, "worked example, depth 1", 1.0, body)


def test_criterion_2_star_depth_two(criterion, star_f, star_g):
    def body():
        orders = {}
        for name, nd in (("f", star_f), ("g", star_g)):
            for method in (iterate_recursion, iterate_substitution):
                orders.setdefault(name, set()).add(group_order(monodromy(method(nd, 2))))
        assert orders == {"f": {2**27}, "g": {2**29}}
        return "2^27 and 2^29 by recursion and substitution"

    criterion(2, "worked example, depth 2", 5.0, body)


def test_criterion_3_smoothing(criterion, star_f, star_g):
    def body():
        for nd, expected in ((star_f, 2**16), (star_g, 2**18)):
            second = iterate_recursion(nd, 2)
            d = second.dessin
            assert d.n_edges == 64
            anchors = (second.mark0, d.vertex_of("B", d.s1(second.mark0.rep)))
            for anchor in anchors:
                s = smooth(d, anchor)
                assert s.n_edges == 32
                assert group_order(s.monodromy_group()) == expected
        return "2^16 and 2^18 for anchors in both color classes"

    criterion(3, "smoothing", 5.0, body)


def test_criterion_4_second_iterate_injectivity(criterion):
    def body():
        keys = {}
        for n in (4, 6, 8):
            for nd in enumerate_normalized(n, extra_clean_only=True):
                key = canonical_form(underlying(iterate_recursion(nd, 2))).key
                assert key not in keys, f"collision between {keys.get(key)} and {nd}"
                keys[key] = nd
        return f"{len(keys)} extra-clean dessins, distinct second iterates"

    criterion(4, "second-iterate injectivity", 120.0, body)


def test_criterion_5_cross_method(criterion):
    def body():
        count = 0
        for n in (4, 6):
            for nd in enumerate_normalized(n, extra_clean_only=True):
                for k in (1, 2, 3):
                    a = canonical_form_normalized(iterate_recursion(nd, k))
                    b = canonical_form_normalized(iterate_substitution(nd, k))
                    assert a == b, f"{nd} at n={k}"
                assert canonical_form_normalized(compose(nd, nd)) == canonical_form_normalized(
                    iterate_recursion(nd, 2)
                )
                count += 1
        return f"{count} dessins, n <= 3, plus compose(f, f)"

    criterion(5, "cross-method equality", 120.0, body)


def test_criterion_6_hubbard(criterion):
    def body():
        count = 0
        for n in (4, 6, 8):
            for nd in enumerate_normalized(n):
                t = dessin_to_hubbard(nd)
                report = validate_hubbard(t)
                assert report.ok, f"{nd}: {report.failures}"
                back = hubbard_to_dessin(t)
                assert canonical_form_normalized(back) == canonical_form_normalized(nd)
                again = dessin_to_hubbard(back)
                assert canonical_form_hubbard(again) == canonical_form_hubbard(t)
                count += 1
        return f"{count} normalized dessins, all checks and round trips"

    criterion(6, "Hubbard-tree axioms", 60.0, body)


def _test_groups():
    groups = set()
    for n in (2, 4, 6, 8):
        for d in enumerate_clean(n):
            groups.add((d.s0._zero, d.s1._zero))
    # every labeled tree up to relabeling; relabelings are covered below
    for n in range(1, 6):
        groups.update(brute_iso_key(*pair) for pair in all_tree_pairs(n))
    rng = random.Random(20261016)
    for n in range(1, 9):
        for k in (1, 2, 3):
            for _ in range(6):
                gens = []
                for _ in range(k):
                    p = list(range(n))
                    rng.shuffle(p)
                    gens.append(tuple(p))
                groups.add(tuple(gens))
    # intransitive and small-support examples
    groups.add(((1, 0, 3, 2, 4, 5, 6, 7), (0, 1, 2, 3, 5, 6, 7, 4)))
    groups.add(((1, 2, 0, 3, 4, 5, 6, 7),))
    return sorted(groups)


def test_criterion_7_group_order_oracle(criterion):
    def body():
        groups = _test_groups()
        rng = random.Random(7)
        for gens in groups:
            n = len(gens[0])
            order = group_order(PermGroup(n, [Perm._from0(g) for g in gens]))
            assert order == closure_order(gens), gens
            for _ in range(100):
                t = list(range(n))
                rng.shuffle(t)
                moved = [Perm._from0(conj(g, t)) for g in gens]
                assert group_order(PermGroup(n, moved)) == order, (gens, t)
        return f"{len(groups)} groups on <= 8 points, 100 conjugations each"

    criterion(7, "group-order oracle", 30.0, body)


def test_criterion_8_enumeration_oracle(criterion):
    def body():
        counts = {}
        for n in (2, 4, 6):
            counts[n] = len(enumerate_clean(n))
            assert counts[n] == len(clean_tree_classes(n)), n
        return f"counts {counts} match brute force"

    criterion(8, "enumeration oracle", 60.0, body)
