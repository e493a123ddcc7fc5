"""Independent oracles for the test suite.

Everything here recomputes results a second way: subgroups come from a
power-set filter, a divisor walk, a basis parameterization, or RREF
matrices instead of span closure; flags come from raw definitional loops
over all elements; graph invariants come from Floyd-Warshall and subset
search.  The oracles deliberately avoid the package's enumeration and
metric code paths.
"""
from itertools import combinations, permutations, product as cartesian
from math import gcd, inf


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def elements_of(factors):
    return [tuple(x) for x in cartesian(*(range(d) for d in factors))]


def add_mod(x, y, factors):
    return tuple((a + b) % d for a, b, d in zip(x, y, factors))


def close_under_addition(seed, factors):
    """Subgroup generated by seed: plain worklist, one generator step at a
    time.  Finite abelian groups need no separate inverse handling."""
    zero = (0,) * len(factors)
    out = {zero}
    frontier = [zero]
    seed = list(seed)
    while frontier:
        x = frontier.pop()
        for g in seed:
            y = add_mod(x, g, factors)
            if y not in out:
                out.add(y)
                frontier.append(y)
    return frozenset(out)


def power_set_subgroups(factors):
    """Every additively closed subset containing zero; |M| <= 12 only.

    Over Z_n the action is repeated addition, so these are exactly the
    submodules.
    """
    els = elements_of(factors)
    n = len(els)
    assert n <= 12, "power-set oracle is only meant for tiny modules"
    index = {e: i for i, e in enumerate(els)}
    table = [[index[add_mod(a, b, factors)] for b in els] for a in els]
    zero_bit = 1 << index[(0,) * len(factors)]
    found = set()
    for mask in range(1, 1 << n):
        if not mask & zero_bit:
            continue
        members = [i for i in range(n) if (mask >> i) & 1]
        closed = True
        for i in members:
            row = table[i]
            for j in members:
                if not (mask >> row[j]) & 1:
                    closed = False
                    break
            if not closed:
                break
        if closed:
            found.add(frozenset(els[i] for i in members))
    return found


def cyclic_subgroups(n):
    """Subgroups of Z_n as 1-tuple element sets: one per divisor."""
    out = set()
    for d in divisors(n):
        out.add(frozenset(((d * k) % n,) for k in range(n // d)))
    return out


def rank2_subgroups(m, n):
    """Subgroups of Z_m x Z_n from the (a, b, l) basis parameterization:
    a | m and b | n fix the first-coordinate image and the axis part,
    l < b with (m/a)*l = 0 mod b picks the twist."""
    subs = set()
    for a in divisors(m):
        c = m // a
        for b in divisors(n):
            for twist in range(b):
                if (c * twist) % b == 0:
                    seed = [(a % m, twist % n), (0, b % n)]
                    subs.add(close_under_addition(seed, (m, n)))
    return subs


def rank2_count(m, n):
    return sum(gcd(a, b) for a in divisors(m) for b in divisors(n))


def rref_subspaces(p):
    """All subspaces of F_p^3, one RREF matrix each."""

    def span(rows):
        if not rows:
            return frozenset({(0, 0, 0)})
        out = set()
        for coeffs in cartesian(range(p), repeat=len(rows)):
            vec = tuple(sum(c * r[i] for c, r in zip(coeffs, rows)) % p
                        for i in range(3))
            out.add(vec)
        return frozenset(out)

    out = {span([])}
    for c in range(3):
        free = [i for i in range(3) if i > c]
        for vals in cartesian(range(p), repeat=len(free)):
            row = [0, 0, 0]
            row[c] = 1
            for i, v in zip(free, vals):
                row[i] = v
            out.add(span([tuple(row)]))
    for c1, c2 in combinations(range(3), 2):
        r1_free = [i for i in range(3) if i > c1 and i != c2]
        r2_free = [i for i in range(3) if i > c2]
        for v1 in cartesian(range(p), repeat=len(r1_free)):
            for v2 in cartesian(range(p), repeat=len(r2_free)):
                row1 = [0, 0, 0]
                row1[c1] = 1
                for i, v in zip(r1_free, v1):
                    row1[i] = v
                row2 = [0, 0, 0]
                row2[c2] = 1
                for i, v in zip(r2_free, v2):
                    row2[i] = v
                out.add(span([tuple(row1), tuple(row2)]))
    out.add(span([(1, 0, 0), (0, 1, 0), (0, 0, 1)]))
    return out


def gaussian_subspace_total(p):
    # 1 + [3:1]_p + [3:2]_p + 1 with both middle counts p^2 + p + 1
    return 2 + 2 * (p * p + p + 1)


# ---- brute-force flags on package objects (raw loops, no lattice flags)

def brute_second(sub):
    module = sub.module
    if sub.order == 1:
        return False
    zero = frozenset({module.zero})
    for r in module.ring.elements():
        image = frozenset(module.scale(r, x) for x in sub.elements)
        if image != zero and image != sub.elements:
            return False
    return True


def brute_prime(sub):
    module = sub.module
    if sub.order == module.order:
        return False
    colon = brute_colon(sub)
    for r in module.ring.elements():
        if r in colon:
            continue
        for m in module.elements():
            if m not in sub.elements and module.scale(r, m) in sub.elements:
                return False
    return True


def brute_colon(sub):
    module = sub.module
    return frozenset(r for r in module.ring.elements()
                     if all(module.scale(r, m) in sub.elements
                            for m in module.elements()))


def brute_annihilator(sub):
    module = sub.module
    zero = module.zero
    return frozenset(r for r in module.ring.elements()
                     if all(module.scale(r, x) == zero for x in sub.elements))


# ---- exhaustive graph invariants

def exhaustive_diameter(g):
    n = g.vertex_count
    if n <= 1:
        return 0
    dist = [[0 if i == j else (1 if g.adjacent(i, j) else inf)
             for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            for j in range(n):
                through = dist[i][k] + dist[k][j]
                if through < dist[i][j]:
                    dist[i][j] = through
    return max(dist[i][j] for i in range(n) for j in range(n))


def exhaustive_girth(g):
    n = g.vertex_count
    for k in range(3, n + 1):
        for subset in combinations(range(n), k):
            inside = set(subset)
            if any(len(g.neighbors(v) & inside) < 2 for v in subset):
                continue
            first, rest = subset[0], subset[1:]
            for perm in permutations(rest):
                cycle = (first,) + perm
                if all(g.adjacent(cycle[i], cycle[(i + 1) % k])
                       for i in range(k)):
                    return k
    return inf


def exhaustive_domination(g):
    n = g.vertex_count
    if n == 0:
        return 0
    closed = [frozenset({v}) | g.neighbors(v) for v in range(n)]
    everything = set(range(n))
    for size in range(1, n + 1):
        for picked in combinations(range(n), size):
            covered = set()
            for v in picked:
                covered |= closed[v]
            if covered == everything:
                return size
    return n
