"""Independent oracles (sympy) used to freeze expected values in the C++ tests.

Run: python3 tests/oracles/oracle_values.py
"""
import itertools
from collections import Counter

from sympy import Poly, symbols, discriminant, factor_list, resultant, Matrix, binomial, Rational
from sympy.combinatorics import Permutation, PermutationGroup
from sympy.combinatorics.named_groups import SymmetricGroup
from sympy.polys.numberfields.galoisgroups import galois_group

x = symbols("x")


def disc_oracles():
    print("disc X^2+X+1", discriminant(x**2 + x + 1, x))
    print("disc X^3-X", discriminant(x**3 - x, x))
    f = Poly(x**4 + x + 1, x)
    syl = resultant(f.as_expr(), f.diff(x).as_expr(), x)
    print("Res(X^4+X+1, f')", syl, "disc", discriminant(f.as_expr(), x))
    print("disc X^4+1", discriminant(x**4 + 1, x))
    print("disc X^3-3X+1", discriminant(x**3 - 3 * x + 1, x))
    print("disc X^3-2", discriminant(x**3 - 2, x))
    print("factor X^4+4", factor_list(x**4 + 4))
    print("factor X^10+1", factor_list(x**10 + 1))


def group_oracles():
    d4 = PermutationGroup([Permutation([1, 2, 3, 0]), Permutation([2, 1, 0, 3])])
    print("D4 order", d4.order(), "index", 24 // d4.order(), "transitive", d4.is_transitive())
    print("e(9)", Rational(2, binomial(9, 4)), "e(10)", Rational(2, binomial(10, 5)))


def subgroup_oracle(n):
    # Saturating closure over explicit element sets.
    elems = list(itertools.permutations(range(n)))
    idx = {p: i for i, p in enumerate(elems)}

    def mul(a, b):
        return tuple(a[b[i]] for i in range(n))

    def close(gens):
        ident = tuple(range(n))
        s = {ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = mul(a, g)
                    if c not in s:
                        s.add(c)
                        nxt.append(c)
            frontier = nxt
        return frozenset(s)

    subs = {close([g]) for g in elems}
    changed = True
    while changed:
        changed = False
        for h in list(subs):
            for g in elems:
                if g not in h:
                    k = close(list(h) + [g])
                    if k not in subs:
                        subs.add(k)
                        changed = True
    def transitive(h):
        orb = {0}
        for p in h:
            orb.add(p[0])
        return len(orb) == n
    trans = [h for h in subs if transitive(h)]
    # conjugacy classes of transitive subgroups
    classes = []
    for h in trans:
        if any(any(frozenset(mul(mul(s, p), tuple(s.index(i) for i in range(n))) for p in h) == c for s in elems) for c in classes):
            continue
        classes.append(h)
    from math import factorial
    print(f"n={n}: subgroups={len(subs)} transitive={len(trans)} transitive classes orders={sorted(len(c) for c in classes)}")
    proper = [factorial(n) // len(h) for h in trans if len(h) < factorial(n) // 2]
    print(f"  min index transitive not An/Sn:", min(proper) if proper else None)


def label(coeffs):
    f = Poly([1] + list(coeffs), x)
    fl = factor_list(f.as_expr())[1]
    if sum(e for _, e in fl) > 1 or len(fl) > 1:
        return "reducible"
    g, _ = galois_group(f, by_name=True)
    return g.name


def census_oracle(n, h):
    c = Counter()
    for a in itertools.product(range(-h, h + 1), repeat=n):
        c[label(a)] += 1
    print(f"census n={n} H={h}:", dict(sorted(c.items())))


if __name__ == "__main__":
    disc_oracles()
    group_oracles()
    subgroup_oracle(3)
    subgroup_oracle(4)
    subgroup_oracle(5)
    census_oracle(2, 1)
    census_oracle(3, 5)
    census_oracle(4, 2)
