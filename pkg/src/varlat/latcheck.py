"""Explicit finite lattices and brute-force special-element detectors.

Elements are ``0..n-1``; ``leq[a, b]`` means ``a <= b``.  The eight kinds of
special element are checked over all pairs ``(y, z)`` directly from their
defining laws; neutrality closes ``{x, y, z}`` under join and meet and tests
the generated sublattice for distributivity.
"""
from __future__ import annotations

import enum
import io
from dataclasses import dataclass, field
from itertools import combinations, permutations, product as iproduct
from typing import Iterable, Sequence

import numpy as np

from . import _kernels
from . import varieties as V
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, NotALattice


class ElementKind(enum.Enum):
    DISTRIBUTIVE = "distributive"
    CODISTRIBUTIVE = "codistributive"
    STANDARD = "standard"
    COSTANDARD = "costandard"
    MODULAR = "modular"
    UPPER_MODULAR = "upper-modular"
    LOWER_MODULAR = "lower-modular"
    NEUTRAL = "neutral"

    @property
    def dual(self) -> "ElementKind":
        return _DUAL[self]


_DUAL = {
    ElementKind.DISTRIBUTIVE: ElementKind.CODISTRIBUTIVE,
    ElementKind.CODISTRIBUTIVE: ElementKind.DISTRIBUTIVE,
    ElementKind.STANDARD: ElementKind.COSTANDARD,
    ElementKind.COSTANDARD: ElementKind.STANDARD,
    ElementKind.UPPER_MODULAR: ElementKind.LOWER_MODULAR,
    ElementKind.LOWER_MODULAR: ElementKind.UPPER_MODULAR,
    ElementKind.MODULAR: ElementKind.MODULAR,
    ElementKind.NEUTRAL: ElementKind.NEUTRAL,
}

_CODE = {
    ElementKind.DISTRIBUTIVE: _kernels.DISTRIBUTIVE,
    ElementKind.CODISTRIBUTIVE: _kernels.CODISTRIBUTIVE,
    ElementKind.STANDARD: _kernels.STANDARD,
    ElementKind.COSTANDARD: _kernels.COSTANDARD,
    ElementKind.MODULAR: _kernels.MODULAR,
    ElementKind.UPPER_MODULAR: _kernels.UPPER_MODULAR,
    ElementKind.LOWER_MODULAR: _kernels.LOWER_MODULAR,
}


@dataclass(frozen=True, eq=False)
class FiniteLattice:
    leq: np.ndarray
    join: np.ndarray
    meet: np.ndarray
    labels: tuple = field(default=())

    @property
    def n(self) -> int:
        return int(self.leq.shape[0])

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return isinstance(other, FiniteLattice) and np.array_equal(self.leq, other.leq)

    def __hash__(self):
        return hash(self.leq.tobytes())

    @property
    def bottom(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=1))[0])

    @property
    def top(self) -> int:
        return int(np.flatnonzero(self.leq.all(axis=0))[0])

    def label(self, i: int) -> str:
        return str(self.labels[i]) if self.labels else str(i)

    def covers(self) -> list[tuple[int, int]]:
        """Pairs (a, b) with a < b and nothing strictly between."""
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        between = (lt.astype(np.int64) @ lt.astype(np.int64)) > 0
        return [tuple(map(int, ab)) for ab in np.argwhere(lt & ~between)]

    def index_of(self, label) -> int:
        return self.labels.index(label)


def build(leq, labels: Sequence = ()) -> FiniteLattice:
    """Validate a partial order and precompute joins and meets."""
    leq = np.array(leq, dtype=bool)
    if leq.ndim != 2 or leq.shape[0] != leq.shape[1] or leq.shape[0] == 0:
        raise NotALattice("order matrix must be non-empty and square")
    n = leq.shape[0]
    if not leq.diagonal().all():
        raise NotALattice("order is not reflexive")
    anti = leq & leq.T & ~np.eye(n, dtype=bool)
    if anti.any():
        a, b = map(int, np.argwhere(anti)[0])
        raise NotALattice(f"order is not antisymmetric at ({a}, {b})", (a, b))
    li = leq.astype(np.int64)
    if ((li @ li > 0) & ~leq).any():
        raise NotALattice("order is not transitive")
    join, meet, bad = _kernels.join_meet_tables(leq)
    if bad != (-1, -1):
        raise NotALattice(f"elements {bad[0]} and {bad[1]} lack a join or a meet", bad)
    if labels and len(labels) != n:
        raise ValueError("one label per element")
    for arr in (leq, join, meet):
        arr.setflags(write=False)
    return FiniteLattice(leq, join, meet, tuple(labels))


def chain(n: int) -> FiniteLattice:
    idx = np.arange(n)
    return build(idx[:, None] <= idx[None, :])


def from_covers(n: int, covers: Iterable[tuple[int, int]], labels: Sequence = ()) -> FiniteLattice:
    leq = np.eye(n, dtype=bool)
    for a, b in covers:
        leq[a, b] = True
    for k in range(n):  # Warshall
        leq |= leq[:, [k]] & leq[[k], :]
    return build(leq, labels)


def pentagon() -> FiniteLattice:
    """N5: 0 < a < b < 1 and c incomparable to a, b.  Elements 0, a, b, c, 1 = 0..4."""
    return from_covers(5, [(0, 1), (1, 2), (2, 4), (0, 3), (3, 4)], ("0", "a", "b", "c", "1"))


def diamond() -> FiniteLattice:
    """M3: three atoms a, b, c.  Elements 0, a, b, c, 1 = 0..4."""
    return from_covers(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)], ("0", "a", "b", "c", "1"))


def dual(lat: FiniteLattice) -> FiniteLattice:
    leq = lat.leq.T.copy()
    join, meet = lat.meet.copy(), lat.join.copy()
    for arr in (leq, join, meet):
        arr.setflags(write=False)
    return FiniteLattice(leq, join, meet, lat.labels)


def product(l1: FiniteLattice, l2: FiniteLattice) -> FiniteLattice:
    """Componentwise order; element (i, j) has index i * len(l2) + j."""
    leq = np.kron(l1.leq.astype(np.int8), l2.leq.astype(np.int8)).astype(bool)
    labels = tuple((l1.label(i), l2.label(j)) for i in range(l1.n) for j in range(l2.n))
    return build(leq, labels)


# -- detectors --------------------------------------------------------------------


def find_witness(lat: FiniteLattice, x: int, kind: ElementKind):
    """First (y, z) in lexicographic order violating ``kind`` at ``x``, or None."""
    if not 0 <= x < lat.n:
        raise IndexError(f"element {x} outside lattice of size {lat.n}")
    if kind is ElementKind.NEUTRAL:
        yz = _kernels.neutral_violation(lat.join, lat.meet, x)
    else:
        yz = _kernels.element_violation(lat.join, lat.meet, lat.leq, x, _CODE[kind])
    return None if yz[0] < 0 else (int(yz[0]), int(yz[1]))


def has_property(lat: FiniteLattice, x: int, kind: ElementKind) -> bool:
    return find_witness(lat, x, kind) is None


def elements_with(lat: FiniteLattice, kind: ElementKind) -> list[int]:
    return [x for x in range(lat.n) if has_property(lat, x, kind)]


def is_neutral_median(lat: FiniteLattice, x: int) -> bool:
    """Fast path: x is neutral iff (x^y)v(y^z)v(z^x) = (xvy)^(yvz)^(zvx) for all y, z."""
    j, m = lat.join, lat.meet
    y, z = np.meshgrid(np.arange(lat.n), np.arange(lat.n), indexing="ij")
    left = j[j[m[x, y], m[y, z]], m[z, x]]
    right = m[m[j[x, y], j[y, z]], j[z, x]]
    return bool(np.all(left == right))


def is_distributive(lat: FiniteLattice) -> bool:
    return all(has_property(lat, x, ElementKind.DISTRIBUTIVE) for x in range(lat.n))


def is_modular(lat: FiniteLattice) -> bool:
    return all(has_property(lat, x, ElementKind.MODULAR) for x in range(lat.n))


# -- isomorphism ------------------------------------------------------------------


def find_isomorphism(l1: FiniteLattice, l2: FiniteLattice):
    """An order isomorphism as a list ``phi`` with ``phi[a]`` in l2, or None."""
    if l1.n != l2.n:
        return None
    n = l1.n

    def signature(lat):
        return [(int(lat.leq[:, a].sum()), int(lat.leq[a, :].sum())) for a in range(lat.n)]

    s1, s2 = signature(l1), signature(l2)
    if sorted(s1) != sorted(s2):
        return None
    order = sorted(range(n), key=lambda a: s1[a])
    phi = [-1] * n
    used = [False] * n

    def extend(pos):
        if pos == n:
            return True
        a = order[pos]
        for b in range(n):
            if used[b] or s2[b] != s1[a]:
                continue
            if all(
                l1.leq[a, c] == l2.leq[b, phi[c]] and l1.leq[c, a] == l2.leq[phi[c], b]
                for c in order[:pos]
            ):
                phi[a], used[b] = b, True
                if extend(pos + 1):
                    return True
                phi[a], used[b] = -1, False
        return False

    return phi if extend(0) else None


# -- small lattices -----------------------------------------------------------------


def _bounded(inner: np.ndarray) -> np.ndarray:
    k = inner.shape[0]
    n = k + 2
    leq = np.zeros((n, n), dtype=bool)
    leq[0, :] = True
    leq[:, n - 1] = True
    leq[1 : n - 1, 1 : n - 1] = inner
    return leq


def _closure(rel: np.ndarray) -> np.ndarray:
    rel = rel.copy()
    for k in range(rel.shape[0]):
        rel |= rel[:, [k]] & rel[[k], :]
    return rel


def _canonical_form(leq: np.ndarray) -> bytes:
    n = leq.shape[0]
    inner = range(1, n - 1)
    best = None
    for perm in permutations(inner):
        order = [0, *perm, n - 1]
        key = leq[np.ix_(order, order)].tobytes()
        if best is None or key < best:
            best = key
    return best


def all_lattices(n: int) -> list[FiniteLattice]:
    """Every lattice with n elements, one per isomorphism class."""
    if n < 1:
        return []
    if n == 1:
        return [chain(1)]
    k = n - 2
    pairs = list(combinations(range(k), 2))
    seen = {}
    for bits in iproduct((False, True), repeat=len(pairs)):
        rel = np.eye(k, dtype=bool)
        for (a, b), on in zip(pairs, bits):
            rel[a, b] = on
        if not np.array_equal(_closure(rel), rel):
            continue
        leq = _bounded(rel)
        try:
            lat = build(leq)
        except NotALattice:
            continue
        seen.setdefault(_canonical_form(leq), lat)
    return list(seen.values())


def random_lattice(rng: np.random.Generator, max_n: int = 8, min_n: int = 1) -> FiniteLattice:
    """Sample a bounded poset on at most ``max_n`` elements until it is a lattice."""
    while True:
        n = int(rng.integers(min_n, max_n + 1))
        if n <= 2:
            return chain(n)
        k = n - 2
        density = rng.uniform(0.1, 0.7)
        rel = np.eye(k, dtype=bool)
        for a, b in combinations(range(k), 2):
            rel[a, b] = rng.random() < density
        perm = rng.permutation(n)
        leq = _bounded(_closure(rel))[np.ix_(perm, perm)]
        try:
            return build(leq)
        except NotALattice:
            continue


# -- text formats ------------------------------------------------------------------


def dumps_leq(lat: FiniteLattice) -> str:
    lines = [f"# lattice with {lat.n} elements; row a, column b: a <= b"]
    if lat.labels:
        lines.extend(f"# {i}: {lat.label(i)}" for i in range(lat.n))
    lines.extend(" ".join("1" if v else "0" for v in row) for row in lat.leq)
    return "\n".join(lines) + "\n"


def loads_leq(text: str) -> FiniteLattice:
    rows = [l for l in text.splitlines() if l.strip() and not l.lstrip().startswith("#")]
    return build(np.loadtxt(io.StringIO("\n".join(rows)), dtype=np.int64, ndmin=2) != 0)


def to_dot(lat: FiniteLattice, name: str = "lattice") -> str:
    """Hasse diagram: edges are covers, drawn bottom-up."""
    out = [f"digraph {name} {{", "  rankdir=BT;", "  node [shape=box];"]
    for i in range(lat.n):
        label = lat.label(i).replace("\\", "\\\\").replace('"', '\\"')
        out.append(f'  n{i} [label="{label}"];')
    out.extend(f"  n{a} -> n{b};" for a, b in lat.covers())
    out.append("}")
    return "\n".join(out) + "\n"


# -- sublattices of Com ---------------------------------------------------------------


def generate_sublattice(seeds: Iterable, cap: int | None = None, caps: Caps = DEFAULT_CAPS) -> FiniteLattice:
    """Close canonical descriptors under join and meet; label elements by descriptor."""
    cap = caps.lattice_cap if cap is None else cap
    elems: list = []
    keys: dict = {}

    def add(v):
        key = V.normal_key(v, caps)
        if key is not None:
            if key in keys:
                return
        elif any(V.equal(v, w, caps) for w in elems):
            return
        if len(elems) >= cap:
            raise CapExceeded(f"sublattice exceeds cap={cap}")
        if key is not None:
            keys[key] = len(elems)
        elems.append(V.normalize(v, caps))

    for s in seeds:
        if not V.is_canonical(s, caps):
            raise V.NonCanonical(f"seed {s} is not canonical")
        add(s)
    done = 0
    while done < len(elems):
        a = elems[done]
        for i in range(done + 1):
            b = elems[i]
            add(V.join(a, b, caps))
            add(V.meet(a, b, caps))
        done += 1
    n = len(elems)
    leq = np.array([[V.leq(a, b, caps) for b in elems] for a in elems], dtype=bool)
    order = sorted(range(n), key=lambda i: (int(leq[:, i].sum()), str(elems[i])))
    leq = leq[np.ix_(order, order)]
    return build(leq, [elems[i] for i in order])


__all__ = [
    "ElementKind",
    "FiniteLattice",
    "build",
    "chain",
    "from_covers",
    "pentagon",
    "diamond",
    "dual",
    "product",
    "find_witness",
    "has_property",
    "elements_with",
    "is_neutral_median",
    "is_distributive",
    "is_modular",
    "find_isomorphism",
    "all_lattices",
    "random_lattice",
    "dumps_leq",
    "loads_leq",
    "to_dot",
    "generate_sublattice",
]
