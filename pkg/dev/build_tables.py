"""Dev script: construct transitive groups of degree 2-6 from structural
recipes, verify invariants, and print generator strings for embedding."""
from itertools import permutations
from hitbox.permgroups import *

def coset_action(G, H):
    """Permutation action of G.generators on left cosets gH."""
    elems = sorted(G.elements)
    Hset = frozenset(H)
    cosets = []
    seen = set()
    for g in elems:
        c = frozenset(perm_mul(g, h) for h in Hset)
        if c not in seen:
            seen.add(c)
            cosets.append(c)
    index = {c: i for i, c in enumerate(cosets)}
    gens = []
    for a in G.generators:
        img = []
        for c in cosets:
            rep = min(c)
            c2 = frozenset(perm_mul(perm_mul(a, rep), h) for h in Hset)
            img.append(index[c2])
        gens.append(tuple(img))
    return gens

S4 = closure(4, [parse_perm("(1,2)",4), parse_perm("(1,2,3,4)",4)])
A4 = closure(4, [parse_perm("(1,2,3)",4), parse_perm("(1,2)(3,4)",4)])

# 6T4: A4 on cosets of <(12)(34)>
H = closure(4, [parse_perm("(1,2)(3,4)",4)]).elements
g6t4 = coset_action(A4, H)
# 6T7/6T8: S4 on cosets of C4 and of V4' = <(12),(34)>
C4 = closure(4, [parse_perm("(1,2,3,4)",4)]).elements
V4p = closure(4, [parse_perm("(1,2)",4), parse_perm("(3,4)",4)]).elements
gS4a = coset_action(S4, C4)
gS4b = coset_action(S4, V4p)

# 6T9: S3 two-sided translation
S3e = sorted(closure(3, [parse_perm("(1,2)",3), parse_perm("(1,2,3)",3)]).elements)
idx = {g: i for i, g in enumerate(S3e)}
def left(a): return tuple(idx[perm_mul(a, x)] for x in S3e)
def right(b): return tuple(idx[perm_mul(x, perm_inv(b))] for x in S3e)
r = parse_perm("(1,2,3)",3); s = parse_perm("(1,2)",3)
g6t9 = [left(r), left(s), right(r), right(s)]

recipes = {
 "6T1": [parse_perm("(1,2,3,4,5,6)",6)],
 "6T2": [parse_perm("(1,2,3)(4,6,5)",6), parse_perm("(1,4)(2,5)(3,6)",6)],
 "6T3": [parse_perm("(1,2,3,4,5,6)",6), parse_perm("(1,6)(2,5)(3,4)",6)],
 "6T4": g6t4,
 "6T5": [parse_perm("(1,2,3)",6), parse_perm("(4,5,6)",6), parse_perm("(1,4)(2,5)(3,6)",6)],
 "6T6": [parse_perm("(1,2)",6), parse_perm("(1,3,5)(2,4,6)",6)],
 "S4a": gS4a,
 "S4b": gS4b,
 "6T9": g6t9,
 "6T10": [parse_perm("(1,2,3)",6), parse_perm("(4,5,6)",6), parse_perm("(1,4,2,5)(3,6)",6)],
 "6T11": [parse_perm("(1,2)",6), parse_perm("(1,3,5)(2,4,6)",6), parse_perm("(1,3)(2,4)",6)],
 "6T12": [parse_perm("(1,2,3,4,5)",6), parse_perm("(1,6)(2,5)",6)],
 "6T13": [parse_perm("(1,2,3)",6), parse_perm("(1,2)",6), parse_perm("(1,4)(2,5)(3,6)",6)],
 "6T14": [parse_perm("(1,2,3,4,5)",6), parse_perm("(1,6)(2,5)",6), parse_perm("(2,3,5,4)",6)],
 "6T15": [parse_perm("(1,2,3)",6), parse_perm("(2,3,4,5,6)",6)],
 "6T16": [parse_perm("(1,2)",6), parse_perm("(1,2,3,4,5,6)",6)],
}
groups = {}
for name, gens in recipes.items():
    G = closure(6, gens)
    groups[name] = G
    print(f"{name}: order={G.order} transitive={G.is_transitive()} even={G.in_alternating()}"
          f" gens={[perm_str(g) for g in G.generators]}")

# parity decides 6T7 vs 6T8
print("S4a (cosets of C4): even =", groups["S4a"].in_alternating())
print("S4b (cosets of V4'): even =", groups["S4b"].in_alternating())

# pairwise non-conjugate?
names = list(groups)
for i in range(len(names)):
    for j in range(i+1, len(names)):
        A, B = groups[names[i]], groups[names[j]]
        if A.order == B.order and conjugate_in_symmetric(A, B):
            print("CONJUGATE:", names[i], names[j])
print("orders:", sorted(G.order for G in groups.values()))
