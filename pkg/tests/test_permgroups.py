import random

import pytest

from oracles import brute_force_subgroups, conjugacy_partition

from hitbox.errors import DomainError, ParseError, ResourceLimitError
from hitbox.permgroups import (
    SubgroupClass,
    closure,
    cycle_type,
    cycle_type_set,
    identity,
    is_even,
    maximal_classes,
    parse_perm,
    perm_conj,
    perm_mul,
    perm_str,
    subgroup_classes,
)


def grp(degree, *cycles):
    return closure(degree, [parse_perm(c, degree) for c in cycles])


A4 = grp(4, "(1,2,3)", "(1,2)(3,4)")
S3 = grp(3, "(1,2)", "(1,2,3)")
C2 = grp(2, "(1,2)")
C6 = grp(6, "(1,2,3,4,5,6)")
D6 = grp(6, "(1,2,3,4,5,6)", "(1,6)(2,5)(3,4)")


def test_parse_and_format():
    p = parse_perm("(1,2,3)(4,5)", 5)
    assert p == (1, 2, 0, 4, 3)
    assert perm_str(p) == "(1,2,3)(4,5)"
    assert parse_perm("()", 3) == identity(3)
    for bad in ("(1,2", "(1,2)(2,3)", "(0,1)", "(1,9)"):
        with pytest.raises(ParseError):
            parse_perm(bad, 4)


def test_closure_examples():
    assert A4.order == 12  # oracle below re-derives it by brute force
    assert len({perm_mul(a, b) for a in A4.elements for b in A4.elements}) == 12
    assert C2.order == 2
    assert closure(3, [identity(3)]).order == 1
    with pytest.raises(ResourceLimitError):
        closure(8, [parse_perm("(1,2)", 8), parse_perm("(1,2,3,4,5,6,7,8)", 8)], bound=1000)


def test_cycle_type_examples():
    assert cycle_type(parse_perm("(1,2,3)", 4)) == (3, 1)
    assert cycle_type(identity(6)) == (1, 1, 1, 1, 1, 1)
    assert cycle_type(parse_perm("(1,2)(3,4,5,6)", 6)) == (4, 2)


def test_subgroup_classes_against_brute_force():
    for G in (A4, S3, C6, D6):
        classes = subgroup_classes(G)
        oracle = conjugacy_partition(G, brute_force_subgroups(G))
        assert len(classes) == len(oracle)
        # every reported representative appears in exactly one oracle class
        for c in classes:
            hits = [cls for cls in oracle if c.representative.elements in cls]
            assert len(hits) == 1


def test_a4_subgroup_structure():
    classes = subgroup_classes(A4)
    assert len(classes) == 5  # trivial, C2, C3, V4, A4
    maxi = maximal_classes(A4)
    assert sorted(c.index for c in maxi) == [3, 4]
    orders = {c.index: c.representative.order for c in maxi}
    assert orders == {3: 4, 4: 3}  # V4 and C3


def test_maximal_classes_examples():
    assert [(c.index, c.representative.order) for c in maximal_classes(C2)] == [(2, 1)]
    assert sorted(c.index for c in maximal_classes(S3)) == [2, 3]
    assert sorted(c.index for c in maximal_classes(D6)) == [2, 2, 2, 3]
    assert sorted(c.index for c in maximal_classes(C6)) == [2, 3]
    with pytest.raises(DomainError):
        maximal_classes(closure(3, [identity(3)]))


def test_lagrange_and_index():
    for G in (A4, S3, D6):
        for c in subgroup_classes(G):
            assert G.order % c.representative.order == 0
            assert c.index * c.representative.order == G.order


def test_conjugation_lands_in_one_class():
    rng = random.Random(15)
    classes = subgroup_classes(A4)
    elems = sorted(A4.elements)
    for c in classes:
        H = c.representative.elements
        for _ in range(20):
            g = rng.choice(elems)
            Hg = frozenset(perm_conj(g, h) for h in H)
            hits = 0
            for d in classes:
                K = d.representative.elements
                if any(frozenset(perm_conj(x, k) for k in K) == Hg for x in elems):
                    hits += 1
            assert hits == 1


def test_cycle_type_sets():
    assert cycle_type_set(A4) == frozenset({(1, 1, 1, 1), (2, 2), (3, 1)})
    S4 = grp(4, "(1,2)", "(1,2,3,4)")
    assert cycle_type_set(S4) == frozenset(
        {(1, 1, 1, 1), (2, 1, 1), (2, 2), (3, 1), (4,)}
    )
    assert cycle_type_set(C2) == frozenset({(1, 1), (2,)})
    # subgroups see a subset of the parent's types
    for c in subgroup_classes(S4):
        assert cycle_type_set(c.representative) <= cycle_type_set(S4)


def test_parity():
    assert is_even(parse_perm("(1,2,3)", 3))
    assert not is_even(parse_perm("(1,2)", 2))
    assert A4.in_alternating()
    assert not D6.in_alternating()
