"""Independent oracles used by the tests.

Everything here recomputes expected values by a route different from the
production code: brute-force enumerations, divisor checks, numeric root
finding, exhaustive modular searches.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from hitbox.permgroups import PermGroup, closure, identity, perm_mul
from hitbox.polys import UniPoly


def brute_force_subgroups(G: PermGroup) -> set[frozenset]:
    """Every subgroup of G, as closures of all pairs of elements.

    Valid for the small groups used in tests, whose subgroups are all
    generated by at most two elements.
    """
    elems = sorted(G.elements)
    subs = {frozenset({identity(G.degree)})}
    for a in elems:
        for b in elems:
            H = closure(G.degree, [a, b], bound=G.order)
            subs.add(H.elements)
    return subs


def conjugacy_partition(G: PermGroup, subgroups: set[frozenset]) -> list[set[frozenset]]:
    from hitbox.permgroups import perm_conj

    remaining = set(subgroups)
    classes = []
    while remaining:
        H = remaining.pop()
        cls = {H}
        for g in G.elements:
            cls.add(frozenset(perm_conj(g, h) for h in H))
        remaining -= cls
        classes.append(cls)
    return classes


def divisor_root_candidates(f: UniPoly):
    """All rational-root-theorem candidates of the primitive model of f."""
    from hitbox.rationals import divisors
    import math

    ints, _ = f.primitive_int()
    while ints and ints[0] == 0:
        ints = ints[1:]
    if not ints or len(ints) == 1:
        return set()
    out = {Fraction(0)}
    for q in divisors(ints[-1]):
        for p in divisors(ints[0]):
            if math.gcd(p, q) == 1:
                out.add(Fraction(p, q))
                out.add(Fraction(-p, q))
    return out


def roots_by_divisor_check(f: UniPoly) -> set[Fraction]:
    return {r for r in divisor_root_candidates(f) if f(r) == 0}


def trial_division_irreducible(f: UniPoly) -> bool:
    """Degree <= 6 irreducibility by searching low-degree monic factors
    with rational-root and quadratic/cubic coefficient sweeps."""
    from hitbox.factorq import rational_roots

    n = f.degree
    if n <= 1:
        return n == 1
    if rational_roots(f):
        return False
    if n <= 3:
        return True
    # look for monic quadratic/cubic factors with small coefficient search
    ints, _ = f.monic().primitive_int()
    bound = 1 + max(abs(c) for c in ints)
    for d in (2, 3):
        if d > n // 2:
            break
        for b in range(-bound, bound + 1):
            for c in range(-bound, bound + 1):
                if d == 2:
                    g = UniPoly([c, b, 1])
                    if (f.monic() % g).is_zero():
                        return False
        if d == 3:
            for b in range(-bound, bound + 1):
                for c in range(-bound, bound + 1):
                    for e in range(-bound, bound + 1):
                        g = UniPoly([e, c, b, 1])
                        if (f.monic() % g).is_zero():
                            return False
    return True


def hilbert2_no_primitive_solution(a: Fraction, b: Fraction, k: int = 8) -> bool:
    """True iff z^2 = a x^2 + b y^2 has no primitive solution mod 2^k.

    A 2-adic solution scales to a primitive integral one, which survives
    reduction mod every power of 2; so nonexistence here certifies the
    symbol is -1 (used only on integral a, b with small valuations, where
    k = 8 is past the Hensel threshold and spurious solutions cannot
    survive).
    """
    m = 1 << k
    av, bv = int(a) % m, int(b) % m
    all_squares = {z * z % m for z in range(m)}
    odd_squares = {z * z % m for z in range(1, m, 2)}
    for x in range(m):
        ax = av * x * x % m
        for y in range(m):
            rhs = (ax + bv * y * y) % m
            if x % 2 or y % 2:
                if rhs in all_squares:
                    return False
            elif rhs in odd_squares:  # primitive via odd z instead
                return False
    return True
