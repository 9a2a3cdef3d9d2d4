"""Independent brute-force reference for the boundary-cycle calculus.

Enumerates every blow-up sequence without canonical deduplication during the
search (only at the end), then compares all pairs under all dihedral
alignments. Used to freeze expected values in the C++ tests.
"""
import sys


def blow(c, i):
    k = len(c)
    c = list(c)
    c[i] -= 1
    c[(i + 1) % k] -= 1
    c.insert(i + 1, -1)
    return tuple(c)


def images(c):
    k = len(c)
    for r in range(k):
        yield tuple(c[(r + i) % k] for i in range(k))
        yield tuple(c[(r - i) % k] for i in range(k))


def canon(c):
    return min(images(c))


def family(seed, max_len):
    seen = {canon(seed)}
    frontier = {tuple(seed)}
    while frontier:
        nxt = set()
        for c in frontier:
            if len(c) >= max_len:
                continue
            for i in range(len(c)):
                d = blow(c, i)
                nxt.add(d)
        seen |= {canon(c) for c in nxt}
        frontier = {canon(c) for c in nxt}
    return seen


def mismatch(a, b):
    return min(sum(x != y for x, y in zip(a, img)) for img in images(b))


def lemma(seed, max_len, n_max):
    left = family(seed, max_len)
    right = set()
    for n in range(n_max + 1):
        right |= family((0, n, 0, -n), max_len)
    out = {}
    for k in range(4, max_len + 1):
        ls = [c for c in left if len(c) == k]
        rs = [c for c in right if len(c) == k]
        best = k
        for a in ls:
            for b in rs:
                best = min(best, mismatch(a, b))
                if best == 0:
                    break
        out[k] = (best, len(ls), len(rs))
    return out


if __name__ == "__main__":
    max_len = int(sys.argv[1]) if len(sys.argv) > 1 else 7
    n_max = int(sys.argv[2]) if len(sys.argv) > 2 else max_len + 2
    print("family(-1,-1,-1, 4):", sorted(family((-1, -1, -1), 4), key=lambda c: (len(c), c)))
    f1 = sorted(c for c in family((0, 1, 0, -1), 5) if len(c) == 5)
    print("hirzebruch(1) length 5:", f1)
    print("mismatch:", mismatch((-2, -1, -2, -1), (0, -1, 0, 1)))
    for seed in [(-1, -1, -1), (-2, -1, -1), (-2, -2, -1)]:
        print(seed, lemma(seed, max_len, n_max))
