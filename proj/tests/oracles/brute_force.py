"""Independent brute-force oracle used to freeze expected values in the C++ tests.

Everything here is materialized naively (Python sets, full subset enumeration,
unpruned partition search) so it shares no code path with the library.
"""
from itertools import combinations
from math import gcd
from functools import reduce


def sumset(a, b):
    return {x + y for x in a for y in b}


def normal_form(a):
    a = sorted(a)
    lo = a[0]
    t = [x - lo for x in a]
    g = reduce(gcd, t, 0) or 1
    t = [x // g for x in t]
    r = sorted(t[-1] - x for x in t)
    return tuple(min(t, r))


def canonical_count(max_span):
    seen = set()
    for m in range(1, max_span + 1):
        for r in range(0, m):
            for inner in combinations(range(1, m), r):
                seen.add(normal_form((0,) + inner + (m,)))
    return len(seen)


def canonical_count_per_max(max_span):
    out = {}
    for m in range(1, max_span + 1):
        reps = set()
        for r in range(0, m):
            for inner in combinations(range(1, m), r):
                nf = normal_form((0,) + inner + (m,))
                if nf[-1] == m:
                    reps.add(nf)
        out[m] = len(reps)
    return out


def bp_min_unpruned(a):
    """Minimal |I|+|J| over all d and all bipartitions; windows materialized."""
    a = sorted(a)
    span = a[-1] - a[0]
    best = None
    for d in range(1, 2 * span + 2):
        for mask in range(1, (1 << len(a)) - 1):
            p = [x for i, x in enumerate(a) if mask >> i & 1]
            q = [x for i, x in enumerate(a) if not mask >> i & 1]
            if len({x % d for x in p}) > 1 or len({x % d for x in q}) > 1:
                continue
            I = set(range(min(p), max(p) + 1, d))
            J = set(range(min(q), max(q) + 1, d))
            s1, s2, s3 = sumset(I, I), sumset(I, J), sumset(J, J)
            if s1 & s2 or s1 & s3 or s2 & s3:
                continue
            tot = len(I) + len(J)
            if best is None or tot < best:
                best = tot
    return best


if __name__ == "__main__":
    print("canonical counts", [canonical_count(s) for s in range(1, 13)])
    print("per max", canonical_count_per_max(16))
    ex15 = list(range(0, 14)) + [26, 52]
    print("ex15 |2A|", len(sumset(ex15, ex15)))
    print("{0,1,3}+{0,2,3}", sorted(sumset([0, 1, 3], [0, 2, 3])))
    ex16 = list(range(0, 13)) + [45, 57]
    print("ex16 |2A|", len(sumset(ex16, ex16)), "bp", bp_min_unpruned(ex16))
    ex12 = [0, 1, 2, 20, 21, 22, 40, 41, 42]
    print("ex12 |2A|", len(sumset(ex12, ex12)), "bp", bp_min_unpruned(ex12))
    print("bp {0,1,3,4,6}", bp_min_unpruned([0, 1, 3, 4, 6]))
    print("|{0,1,5}+{0,2}|", len(sumset([0, 1, 5], [0, 2])))
    print("{0,1,2,4}", len(sumset([0, 1, 2, 4], [0, 1, 2, 4])))
    print("{0,1,3,4,6}", len(sumset([0, 1, 3, 4, 6], [0, 1, 3, 4, 6])))
    a = [0, 1, 2, 3, 4, 5, 10]
    s = len(sumset(a, a))
    print("{0..5,10}", s, "3k-3", 18, "bp", bp_min_unpruned(a))
    b = [0, 3, 6, 9, 1, 4, 7]
    print("bp7 |2A|", len(sumset(b, b)))
    fn = list(range(0, 8)) + [40, 42]
    print("footnote k=10", len(sumset(fn, fn)), 3 * 10 - 2)
