"""Slow, obviously-correct reference implementations used only by tests."""

from itertools import product


def dense_smith_divisors(a):
    """Elementary divisors by full-pivoting row/column reduction over Python ints."""
    m = [list(map(int, row)) for row in a]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors = []
    t = 0
    while t < min(rows, cols):
        nz = [(abs(m[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if m[i][j]]
        if not nz:
            break
        _, pi, pj = min(nz)
        m[t], m[pi] = m[pi], m[t]
        for row in m:
            row[t], row[pj] = row[pj], row[t]
        while True:
            dirty = False
            for i in range(t + 1, rows):
                q = m[i][t] // m[t][t]
                if q:
                    m[i] = [x - q * y for x, y in zip(m[i], m[t])]
                if m[i][t]:
                    m[t], m[i] = m[i], m[t]
                    dirty = True
            for j in range(t + 1, cols):
                q = m[t][j] // m[t][t]
                if q:
                    for row in m:
                        row[j] -= q * row[t]
                if m[t][j]:
                    for row in m:
                        row[t], row[j] = row[j], row[t]
                    dirty = True
            if dirty:
                continue
            bad = [(i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if m[i][j] % m[t][t]]
            if not bad:
                break
            i, _ = bad[0]
            m[t] = [x + y for x, y in zip(m[t], m[i])]
        divisors.append(abs(m[t][t]))
        t += 1
    return divisors


def rank_mod_p(a, p):
    m = [[x % p for x in row] for row in a]
    rank = 0
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(m)) if m[r][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], -1, p)
        m[rank] = [x * inv % p for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][c]:
                f = m[r][c]
                m[r] = [(x - f * y) % p for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def matmul_mod(a, b, m):
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) % m for j in range(n)) for i in range(n)
    )


def group_closure_size(gens, m):
    """Plain BFS over tuples of tuples."""
    d = len(gens[0])
    ident = tuple(tuple(int(i == j) for j in range(d)) for i in range(d))
    gens = [tuple(tuple(int(x) % m for x in row) for row in g) for g in gens]
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x, g in product(frontier, gens):
            y = matmul_mod(x, g, m)
            if y not in seen:
                seen.add(y)
                nxt.append(y)
        frontier = nxt
    return len(seen)
