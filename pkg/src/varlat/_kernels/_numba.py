import numpy as np
from numba import njit


@njit(cache=True)
def _first_nonassociative(t):
    n = t.shape[0]
    for a in range(n):
        for b in range(n):
            ab = t[a, b]
            for c in range(n):
                if t[ab, c] != t[a, t[b, c]]:
                    return a, b, c
    return -1, -1, -1


def first_nonassociative(table):
    return _first_nonassociative(np.ascontiguousarray(table, dtype=np.int64))


@njit(cache=True)
def _power(t, a, e):
    acc = a
    for _ in range(e - 1):
        acc = t[acc, a]
    return acc


@njit(cache=True)
def _value(t, exps, digits):
    acc = -1
    for letter in range(exps.shape[0]):
        e = exps[letter]
        if e == 0:
            continue
        val = _power(t, digits[letter], e)
        acc = val if acc < 0 else t[acc, val]
    return acc


@njit(cache=True)
def _identity_counterexample(t, lhs, rhs, zero):
    # zero >= 0 means: compare lhs against the constant zero, ignore rhs
    n = t.shape[0]
    k = lhs.shape[0]
    digits = np.zeros(k, dtype=np.int64)
    total = n**k
    for flat in range(total):
        rem = flat
        for i in range(k - 1, -1, -1):
            digits[i] = rem % n
            rem //= n
        left = _value(t, lhs, digits)
        right = zero if zero >= 0 else _value(t, rhs, digits)
        if left != right:
            return flat
    return -1


def identity_counterexample(table, lhs, rhs):
    return _identity_counterexample(
        np.ascontiguousarray(table, dtype=np.int64),
        np.asarray(lhs, dtype=np.int64),
        np.asarray(rhs, dtype=np.int64),
        -1,
    )


def zero_counterexample(table, word, zero):
    word = np.asarray(word, dtype=np.int64)
    return _identity_counterexample(np.ascontiguousarray(table, dtype=np.int64), word, word, int(zero))


@njit(cache=True)
def _find(parent, a):
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


@njit(cache=True)
def _components(n, src, dst):
    parent = np.arange(n)
    for i in range(src.shape[0]):
        ra = _find(parent, src[i])
        rb = _find(parent, dst[i])
        if ra != rb:
            if ra < rb:
                parent[rb] = ra
            else:
                parent[ra] = rb
    labels = np.full(n, -1, dtype=np.int64)
    root_label = np.full(n, -1, dtype=np.int64)
    nxt = 0
    for v in range(n):
        r = _find(parent, v)
        if root_label[r] < 0:
            root_label[r] = nxt
            nxt += 1
        labels[v] = root_label[r]
    return labels


def components(n, src, dst):
    return _components(int(n), np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64))


@njit(cache=True)
def _join_meet_tables(leq):
    n = leq.shape[0]
    join = np.full((n, n), -1, dtype=np.int64)
    meet = np.full((n, n), -1, dtype=np.int64)
    bad_a, bad_b = -1, -1
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if leq[a, c] and leq[b, c]:
                    least = True
                    for d in range(n):
                        if leq[a, d] and leq[b, d] and not leq[c, d]:
                            least = False
                            break
                    if least:
                        join[a, b] = c
                        break
            for c in range(n):
                if leq[c, a] and leq[c, b]:
                    greatest = True
                    for d in range(n):
                        if leq[d, a] and leq[d, b] and not leq[d, c]:
                            greatest = False
                            break
                    if greatest:
                        meet[a, b] = c
                        break
            if bad_a < 0 and (join[a, b] < 0 or meet[a, b] < 0):
                bad_a, bad_b = a, b
    return join, meet, bad_a, bad_b


def join_meet_tables(leq):
    join, meet, a, b = _join_meet_tables(np.ascontiguousarray(leq, dtype=np.bool_))
    return join, meet, (int(a), int(b))


@njit(cache=True)
def _element_violation(j, m, leq, x, kind):
    n = j.shape[0]
    for y in range(n):
        for z in range(n):
            if kind == 0:
                ok = j[x, m[y, z]] == m[j[x, y], j[x, z]]
            elif kind == 1:
                ok = m[x, j[y, z]] == j[m[x, y], m[x, z]]
            elif kind == 2:
                ok = m[j[x, y], z] == j[m[x, z], m[y, z]]
            elif kind == 3:
                ok = j[m[x, y], z] == m[j[x, z], j[y, z]]
            elif kind == 4:
                ok = (not leq[y, z]) or m[j[x, y], z] == j[m[x, z], y]
            elif kind == 5:
                ok = (not leq[y, x]) or m[x, j[y, z]] == j[y, m[x, z]]
            else:
                ok = (not leq[x, y]) or j[x, m[y, z]] == m[y, j[x, z]]
            if not ok:
                return y, z
    return -1, -1


def element_violation(join, meet, leq, x, kind):
    if not 0 <= kind <= 6:
        raise ValueError(f"unknown kind code {kind}")
    y, z = _element_violation(join, meet, np.ascontiguousarray(leq, dtype=np.bool_), int(x), int(kind))
    return int(y), int(z)


@njit(cache=True)
def _generated_distributive(j, m, x, y, z, member, items):
    member[:] = False
    count = 0
    for s in (x, y, z):
        if not member[s]:
            member[s] = True
            items[count] = s
            count += 1
    done = 0
    # every new element is combined with all earlier ones exactly once
    while done < count:
        a = items[done]
        for i in range(done + 1):
            b = items[i]
            for c in (j[a, b], m[a, b]):
                if not member[c]:
                    member[c] = True
                    items[count] = c
                    count += 1
        done += 1
    for i1 in range(count):
        a = items[i1]
        for i2 in range(count):
            b = items[i2]
            for i3 in range(count):
                c = items[i3]
                if j[a, m[b, c]] != m[j[a, b], j[a, c]]:
                    return False
    return True


@njit(cache=True)
def _neutral_violation(j, m, x):
    n = j.shape[0]
    member = np.zeros(n, dtype=np.bool_)
    items = np.zeros(n, dtype=np.int64)
    for y in range(n):
        for z in range(n):
            if not _generated_distributive(j, m, x, y, z, member, items):
                return y, z
    return -1, -1


def neutral_violation(join, meet, x):
    y, z = _neutral_violation(join, meet, int(x))
    return int(y), int(z)
