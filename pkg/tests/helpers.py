"""Independent oracles and comparison helpers for the test suite.

Everything here deliberately avoids the package's own exact kernels:
determinants run over Fractions, tree counts come from deletion and
contraction or from a plain Gaussian Kirchhoff minor, and resultants are
Sylvester determinants.  Slow is fine; these only certify small cases.
"""

from fractions import Fraction
from math import gcd


def igraph_edge_list(n, k, l):
    """Edge multiset of I(n,k,l): outer cycle step k on 0..n-1, inner
    cycle step l on n..2n-1, spokes in between."""
    edges = []
    for i in range(n):
        edges.append((i, (i + k) % n))
        edges.append((n + i, n + (i + l) % n))
        edges.append((i, n + i))
    return edges


def adjacency_from_edges(num_vertices, edges):
    a = [[0] * num_vertices for _ in range(num_vertices)]
    for x, y in edges:
        a[x][y] += 1
        a[y][x] += 1
    return a


def laplacian_from_edges(num_vertices, edges):
    m = [[0] * num_vertices for _ in range(num_vertices)]
    for x, y in edges:
        m[x][x] += 1
        m[y][y] += 1
        m[x][y] -= 1
        m[y][x] -= 1
    return m


def det_fractions(rows):
    """Gaussian elimination determinant over Fractions."""
    a = [[Fraction(x) for x in row] for row in rows]
    m = len(a)
    if m == 0:
        return Fraction(1)
    det = Fraction(1)
    for c in range(m):
        piv = next((r for r in range(c, m) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det *= a[c][c]
        inv = Fraction(1) / a[c][c]
        for r in range(c + 1, m):
            f = a[r][c] * inv
            if f:
                for j in range(c, m):
                    a[r][j] -= f * a[c][j]
    return det


def rank_fractions(rows):
    a = [[Fraction(x) for x in row] for row in rows]
    if not a:
        return 0
    cols = len(a[0])
    rank = 0
    for c in range(cols):
        piv = next((r for r in range(rank, len(a)) if a[r][c]), None)
        if piv is None:
            continue
        a[rank], a[piv] = a[piv], a[rank]
        inv = Fraction(1) / a[rank][c]
        for r in range(len(a)):
            if r != rank and a[r][c]:
                f = a[r][c] * inv
                for j in range(c, cols):
                    a[r][j] -= f * a[rank][j]
        rank += 1
    return rank


def tree_count_kirchhoff_fractions(num_vertices, edges):
    """Spanning tree count as a Laplacian minor over Fractions."""
    lap = laplacian_from_edges(num_vertices, edges)
    minor = [row[1:] for row in lap[1:]]
    det = det_fractions(minor)
    assert det.denominator == 1
    return int(det)


def _connected(num_vertices, edges):
    seen = {0}
    stack = [0]
    adj = [[] for _ in range(num_vertices)]
    for x, y in edges:
        adj[x].append(y)
        adj[y].append(x)
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == num_vertices


def tree_count_deletion_contraction(num_vertices, edges):
    """tau(G) = tau(G - e) + tau(G / e); exponential, tiny graphs only."""
    edges = [e for e in edges if e[0] != e[1]]
    if num_vertices == 1:
        return 1
    if len(edges) < num_vertices - 1 or not _connected(num_vertices, edges):
        return 0
    a, b = edges[-1]
    if a > b:
        a, b = b, a
    rest = edges[:-1]

    def relabel(v):
        if v == b:
            v = a
        return v - 1 if v > b else v

    merged = [(relabel(x), relabel(y)) for x, y in rest]
    return (
        tree_count_deletion_contraction(num_vertices, rest)
        + tree_count_deletion_contraction(num_vertices - 1, merged)
    )


def canonical_invariant_factors(factors):
    """Unique divisibility-chain form of a cyclic factor list.

    Replacing a pair by (gcd, lcm) preserves the group; iterating to a
    fixed point sorts every prime's exponents without factoring anything.
    """
    vals = [int(f) for f in factors if int(f) != 1]
    changed = True
    while changed:
        changed = False
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                g = gcd(vals[i], vals[j])
                lc = vals[i] // g * vals[j]
                if (g, lc) != (vals[i], vals[j]):
                    vals[i], vals[j] = g, lc
                    changed = True
    return tuple(v for v in vals if v != 1)


def sylvester_resultant(f, g):
    """Resultant from the Sylvester matrix, ascending coefficient lists."""
    df, dg = len(f) - 1, len(g) - 1
    assert f[-1] != 0 and g[-1] != 0
    size = df + dg
    if size == 0:
        return 1
    frev = list(reversed(f))
    grev = list(reversed(g))
    rows = []
    for i in range(dg):
        rows.append([0] * i + frev + [0] * (dg - 1 - i))
    for i in range(df):
        rows.append([0] * i + grev + [0] * (df - 1 - i))
    det = det_fractions(rows)
    assert det.denominator == 1
    return int(det)
