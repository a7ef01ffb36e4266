import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

_CHUNK = 1 << 20


def first_nonassociative(table):
    """First (a, b, c) in lexicographic order with (ab)c != a(bc), else (-1, -1, -1)."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    cols = np.arange(n)
    for a in range(n):
        left = t[t[a][:, None], cols[None, :]]  # (a b) c  indexed [b, c]
        right = t[a][t]  # a (b c)
        bad = np.flatnonzero(left != right)
        if bad.size:
            b, c = divmod(int(bad[0]), n)
            return a, b, c
    return -1, -1, -1


def _power_table(t, max_exp):
    n = t.shape[0]
    pw = np.empty((max_exp + 1, n), dtype=np.int64)
    pw[0] = -1
    pw[1] = np.arange(n)
    for e in range(2, max_exp + 1):
        pw[e] = t[pw[e - 1], np.arange(n)]
    return pw


def _evaluate(t, pw, exps, digits):
    acc = None
    for letter, e in enumerate(exps):
        if e == 0:
            continue
        val = pw[e][digits[letter]]
        acc = val if acc is None else t[acc, val]
    return acc


def _assignments(n, k):
    total = n**k
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(total, start + _CHUNK), dtype=np.int64)
        yield start, np.unravel_index(flat, (n,) * k)


def identity_counterexample(table, lhs, rhs):
    """Flat index (row-major over letters) of the first assignment separating
    the two exponent vectors, or -1."""
    t = np.asarray(table, dtype=np.int64)
    lhs = np.asarray(lhs, dtype=np.int64)
    rhs = np.asarray(rhs, dtype=np.int64)
    n, k = t.shape[0], lhs.shape[0]
    pw = _power_table(t, int(max(lhs.max(), rhs.max())))
    for start, digits in _assignments(n, k):
        bad = np.flatnonzero(_evaluate(t, pw, lhs, digits) != _evaluate(t, pw, rhs, digits))
        if bad.size:
            return start + int(bad[0])
    return -1


def zero_counterexample(table, word, zero):
    t = np.asarray(table, dtype=np.int64)
    word = np.asarray(word, dtype=np.int64)
    n, k = t.shape[0], word.shape[0]
    pw = _power_table(t, int(word.max()))
    for start, digits in _assignments(n, k):
        bad = np.flatnonzero(_evaluate(t, pw, word, digits) != zero)
        if bad.size:
            return start + int(bad[0])
    return -1


def components(n, src, dst):
    """Connected-component labels, numbered by first occurrence."""
    src = np.asarray(src, dtype=np.int64)
    dst = np.asarray(dst, dtype=np.int64)
    graph = coo_matrix((np.ones(src.shape[0], dtype=np.int8), (src, dst)), shape=(n, n))
    _, raw = connected_components(graph, directed=False)
    _, first = np.unique(raw, return_index=True)
    order = np.argsort(first)
    relabel = np.empty(order.shape[0], dtype=np.int64)
    relabel[order] = np.arange(order.shape[0])
    return relabel[raw]


def join_meet_tables(leq):
    """Join and meet tables of a partial order; (-1, a, b) marks a missing bound.

    Returns (join, meet, bad) where bad = (a, b) is the first pair lacking a
    least upper or greatest lower bound, or (-1, -1).
    """
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    join = np.full((n, n), -1, dtype=np.int64)
    meet = np.full((n, n), -1, dtype=np.int64)
    up_count = leq.sum(axis=1)
    down_count = leq.sum(axis=0)
    geq = leq.T
    for a in range(n):
        ub = leq[a][None, :] & leq  # row b: upper bounds of {a, b}
        hit = ub & (up_count[None, :] == ub.sum(axis=1)[:, None])
        has = hit.any(axis=1)
        join[a, has] = hit[has].argmax(axis=1)
        lb = geq[a][None, :] & geq
        hit = lb & (down_count[None, :] == lb.sum(axis=1)[:, None])
        has = hit.any(axis=1)
        meet[a, has] = hit[has].argmax(axis=1)
    bad = np.argwhere((join < 0) | (meet < 0))
    if bad.size:
        return join, meet, (int(bad[0, 0]), int(bad[0, 1]))
    return join, meet, (-1, -1)


def _sides(j, m, leq, x, kind, y, z):
    if kind == 0:
        return j[x, m[y, z]], m[j[x, y], j[x, z]], None
    if kind == 1:
        return m[x, j[y, z]], j[m[x, y], m[x, z]], None
    if kind == 2:
        return m[j[x, y], z], j[m[x, z], m[y, z]], None
    if kind == 3:
        return j[m[x, y], z], m[j[x, z], j[y, z]], None
    if kind == 4:
        return m[j[x, y], z], j[m[x, z], y], leq[y, z]
    if kind == 5:
        return m[x, j[y, z]], j[y, m[x, z]], leq[y, x]
    if kind == 6:
        return j[x, m[y, z]], m[y, j[x, z]], leq[x, y]
    raise ValueError(f"unknown kind code {kind}")


def element_violation(join, meet, leq, x, kind):
    """First (y, z) in lexicographic order violating the kind's law at x."""
    n = join.shape[0]
    y, z = np.meshgrid(np.arange(n), np.arange(n), indexing="ij")
    left, right, guard = _sides(join, meet, np.asarray(leq, dtype=bool), x, kind, y, z)
    bad = left != right
    if guard is not None:
        bad &= guard
    hit = np.flatnonzero(bad)
    if hit.size:
        return divmod(int(hit[0]), n)
    return -1, -1


def _closure(join, meet, seeds):
    n = join.shape[0]
    mask = np.zeros(n, dtype=bool)
    mask[list(seeds)] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[join[np.ix_(idx, idx)].ravel()] = True
        new[meet[np.ix_(idx, idx)].ravel()] = True
        if new.sum() == mask.sum():
            return idx
        mask = new


def _is_distributive_on(join, meet, idx):
    a = idx[:, None, None]
    b = idx[None, :, None]
    c = idx[None, None, :]
    return bool(np.all(join[a, meet[b, c]] == meet[join[a, b], join[a, c]]))


def neutral_violation(join, meet, x):
    """First (y, z) such that {x, y, z} generates a non-distributive sublattice."""
    n = join.shape[0]
    for y in range(n):
        for z in range(n):
            if not _is_distributive_on(join, meet, _closure(join, meet, (x, y, z))):
                return y, z
    return -1, -1
