"""Exact entailment for commutative nil-varieties with an explicit nil exponent.

A basis ``N{p; ids}`` presents the variety given by commutativity, ``x^p = 0``
and ``ids``.  Its free object on ``k`` letters is a quotient of the truncated
carrier: exponent vectors in ``{0..p-1}^k`` plus a zero that absorbs every
vector with a coordinate reaching ``p``.  Vectors are encoded little-endian
in base ``p``; code 0 (the empty vector) stands for the zero element.

Two routes compute the same congruence:

* :func:`free_quotient` materialises the whole carrier and merges every
  elementary step ``xi(u) + c ~ xi(v) + c`` with union-find;
* :func:`entails` explores only the class of the words in question, which
  stays cheap for many letters (``x1 x2 ... x7 = 0``) where the full carrier
  would not.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator

import numpy as np

from . import _kernels
from .commwords import (
    CommWord,
    Equal,
    Identity,
    ZeroEq,
    canonical,
    content,
    dense_embeddings,
    identity_letters,
    properly_embeds,
)
from .config import DEFAULT_CAPS, Caps

ZERO = 0

X2Y = CommWord(((0, 2), (1, 1)))
XY2 = CommWord(((0, 1), (1, 2)))
#: the length-3 words in x, y with both letters, modulo commutativity
W_WORDS = frozenset({X2Y, XY2})


@dataclass(frozen=True)
class NilBasis:
    p: int
    ids: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.p < 1:
            raise ValueError("nil exponent must be >= 1")
        canon = frozenset(canonical(i) for i in self.ids)
        object.__setattr__(self, "ids", canon)

    @classmethod
    def of(cls, p: int, *ids: Identity) -> "NilBasis":
        return cls(p, frozenset(ids))

    def with_ids(self, *ids: Identity) -> "NilBasis":
        return NilBasis(self.p, self.ids | frozenset(ids))

    @property
    def letter_count(self) -> int:
        """Largest number of letters in one basis identity (0 for none)."""
        return max((len(identity_letters(i)) for i in self.ids), default=0)

    def sorted_ids(self) -> list[Identity]:
        return sorted(self.ids, key=lambda i: (len(str(i)), str(i)))

    def __str__(self) -> str:
        body = ", ".join(str(i) for i in self.sorted_ids())
        return f"N{{p={self.p}; {body}}}" if body else f"N{{p={self.p}}}"


# -- rules --------------------------------------------------------------------


@dataclass(frozen=True)
class _Rule:
    # letters of the source word and their multiplicities
    mults: tuple[int, ...]
    # target as (position in source letters, multiplicity); None = zero
    target: tuple[tuple[int, int], ...] | None


def _orient(u: CommWord, v: CommWord) -> _Rule:
    letters = [l for l, _ in u.exps]
    mults = tuple(m for _, m in u.exps)
    if not content(v) <= content(u):
        # letters of v absent from u may be sent to an overflowing image
        return _Rule(mults, None)
    pos = {l: i for i, l in enumerate(letters)}
    return _Rule(mults, tuple((pos[l], m) for l, m in v.exps))


@lru_cache(maxsize=None)
def _rules(basis: NilBasis) -> tuple[_Rule, ...]:
    out = []
    for ident in basis.sorted_ids():
        if isinstance(ident, ZeroEq):
            out.append(_Rule(tuple(m for _, m in ident.word.exps), None))
        elif not ident.trivial:
            out.append(_orient(ident.lhs, ident.rhs))
            out.append(_orient(ident.rhs, ident.lhs))
    return tuple(out)


def _neighbours(rules: tuple[_Rule, ...], p: int, t: tuple[int, ...]) -> Iterator[tuple[int, ...] | int]:
    """Vectors one elementary step away from ``t`` (``ZERO`` for the zero element)."""
    k = len(t)
    for rule in rules:
        for images in dense_embeddings(rule.mults, t):
            if rule.target is None:
                yield ZERO
                return
            nb = list(t)
            for img, m in zip(images, rule.mults):
                for j in range(k):
                    nb[j] -= m * img[j]
            for i, m in rule.target:
                img = images[i]
                for j in range(k):
                    nb[j] += m * img[j]
            if max(nb) >= p:
                yield ZERO
            else:
                yield tuple(nb)


def encode(vec: Iterable[int], p: int) -> int:
    code = 0
    scale = 1
    for c in vec:
        if c >= p:
            return ZERO
        code += c * scale
        scale *= p
    return code


def decode(code: int, p: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(k):
        code, r = divmod(code, p)
        out.append(r)
    return tuple(out)


# -- the full quotient ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class FreeNilQuotient:
    """The relatively free object of a basis on ``k`` generators.

    ``labels[code]`` is the class of carrier element ``code``; class 0 is the
    zero class.  ``reps[c]`` is the smallest code in class ``c`` and ``table``
    multiplies classes.
    """

    basis: NilBasis
    k: int
    labels: np.ndarray
    reps: np.ndarray
    table: np.ndarray

    @property
    def p(self) -> int:
        return self.basis.p

    @property
    def n_classes(self) -> int:
        return int(self.reps.shape[0])

    def class_of(self, word: CommWord) -> int:
        return int(self.labels[encode(word.vector(self.k), self.p)])

    def members(self, c: int) -> list[tuple[int, ...]]:
        return [decode(code, self.p, self.k) for code in np.flatnonzero(self.labels == c)]

    def generator_classes(self) -> list[int]:
        return [self.class_of(CommWord.power(i, 1)) for i in range(self.k)]

    def is_congruence(self) -> bool:
        """Classes are unions compatible with multiplication by every generator."""
        p, k = self.p, self.k
        size = p**k
        for g in range(k):
            image = {}
            for code in range(1, size):
                vec = list(decode(code, p, k))
                vec[g] += 1
                key = int(self.labels[code])
                val = int(self.labels[encode(vec, p)])
                if image.setdefault(key, val) != val:
                    return False
        return True


def _carrier_edges(basis: NilBasis, k: int) -> tuple[np.ndarray, np.ndarray]:
    p = basis.p
    rules = _rules(basis)
    src, dst = [], []
    for vec in product(range(p), repeat=k):
        if not any(vec):
            continue
        t = tuple(reversed(vec))
        code = encode(t, p)
        for nb in _neighbours(rules, p, t):
            src.append(code)
            dst.append(ZERO if nb == ZERO else encode(nb, p))
    return np.asarray(src, dtype=np.int64), np.asarray(dst, dtype=np.int64)


def free_quotient(basis: NilBasis, k: int, caps: Caps = DEFAULT_CAPS, shuffle_seed: int | None = None) -> FreeNilQuotient:
    """Build the free object of ``basis`` on ``k`` letters.

    ``shuffle_seed`` permutes the merge order; the resulting partition must not
    depend on it.
    """
    if k < 1:
        raise ValueError("need at least one letter")
    caps.check_quotient(basis.p, k)
    return _free_quotient(basis, k, shuffle_seed)


@lru_cache(maxsize=256)
def _free_quotient(basis: NilBasis, k: int, shuffle_seed: int | None) -> FreeNilQuotient:
    p = basis.p
    size = p**k
    src, dst = _carrier_edges(basis, k)
    if shuffle_seed is not None and src.size:
        perm = np.random.default_rng(shuffle_seed).permutation(src.size)
        src, dst = dst[perm], src[perm]
    labels = _kernels.components(size, src, dst)
    n_classes = int(labels.max()) + 1
    _, reps = np.unique(labels, return_index=True)
    reps = reps.astype(np.int64)

    vecs = np.array([decode(int(r), p, k) for r in reps], dtype=np.int64)
    sums = vecs[:, None, :] + vecs[None, :, :]
    weights = p ** np.arange(k, dtype=np.int64)
    codes = (sums * weights).sum(axis=2)
    codes[(sums >= p).any(axis=2)] = ZERO
    table = labels[codes]
    table[0, :] = 0
    table[:, 0] = 0
    labels.setflags(write=False)
    reps.setflags(write=False)
    table.setflags(write=False)
    assert n_classes == reps.shape[0]
    return FreeNilQuotient(basis, k, labels, reps, table)


# -- entailment ---------------------------------------------------------------


def _explore(rules, p, start, goal=None) -> tuple[bool, bool]:
    """Search the class of ``start``; returns (reached_zero, reached_goal)."""
    seen = {start}
    queue = deque([start])
    while queue:
        t = queue.popleft()
        for nb in _neighbours(rules, p, t):
            if nb == ZERO:
                return True, False
            if nb == goal:
                return False, True
            if nb not in seen:
                seen.add(nb)
                queue.append(nb)
    return False, False


def _as_vector(word: CommWord, k: int, p: int):
    vec = word.vector(k)
    return ZERO if max(vec) >= p else vec


def entails(basis: NilBasis, ident: Identity, caps: Caps = DEFAULT_CAPS, method: str = "search") -> bool:
    """Does the variety presented by ``basis`` satisfy ``ident``?

    ``method="quotient"`` answers from the materialised free object instead of
    the class search; both are exact.
    """
    ident = canonical(ident)
    k = len(identity_letters(ident))
    p = basis.p
    caps.check_quotient(p, k)
    if ident.trivial:
        return True
    if method == "quotient":
        q = free_quotient(basis, k, caps)
        if isinstance(ident, ZeroEq):
            return q.class_of(ident.word) == 0
        return q.class_of(ident.lhs) == q.class_of(ident.rhs)
    if method != "search":
        raise ValueError(f"unknown method {method!r}")
    rules = _rules(basis)
    if isinstance(ident, ZeroEq):
        w = _as_vector(ident.word, k, p)
        return w == ZERO or _explore(rules, p, w)[0]
    u = _as_vector(ident.lhs, k, p)
    v = _as_vector(ident.rhs, k, p)
    if u == ZERO and v == ZERO:
        return True
    if u == ZERO:
        u, v = v, u
    u_zero, hit = _explore(rules, p, u, goal=None if v == ZERO else v)
    if hit:
        return True
    if not u_zero:
        return False
    return v == ZERO or _explore(rules, p, v)[0]


def split_zero(ident: Identity) -> frozenset:
    """Zero identities forced by ``ident`` in every commutative nil-variety.

    Both sides vanish when the contents differ, or when one side properly
    embeds in the other (the longer side contains a substitution image of
    the shorter).
    """
    if not isinstance(ident, Equal):
        raise TypeError("split_zero expects an Equal identity")
    u, v = ident.lhs, ident.rhs
    if u == v:
        return frozenset()
    if content(u) != content(v) or properly_embeds(u, v) or properly_embeds(v, u):
        return frozenset({ZeroEq(u), ZeroEq(v)})
    return frozenset()


@dataclass(frozen=True)
class Degree:
    """Nilpotency degree: ``exact`` n, ``above`` a search bound, or ``infinite``."""

    kind: str
    n: int | None = None

    @classmethod
    def exact(cls, n: int) -> "Degree":
        return cls("exact", n)

    @classmethod
    def above(cls, bound: int) -> "Degree":
        return cls("above", bound)

    @classmethod
    def infinite(cls) -> "Degree":
        return cls("infinite")

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def sort_key(self):
        if self.kind == "above":
            raise ValueError("AboveBound degrees are not totally ordered")
        return (1, 0) if self.kind == "infinite" else (0, self.n)

    def __str__(self) -> str:
        if self.kind == "exact":
            return str(self.n)
        if self.kind == "infinite":
            return "infinite"
        return f">{self.n}"


def degree(basis: NilBasis, bound: int, caps: Caps = DEFAULT_CAPS) -> Degree:
    """Least ``n <= bound`` with ``x1 x2 ... xn = 0``, else AboveBound."""
    for n in range(1, bound + 1):
        if entails(basis, ZeroEq(CommWord.squarefree(n)), caps):
            return Degree.exact(n)
    return Degree.above(bound)


def canonical_words(max_length: int) -> list[CommWord]:
    """One representative per renaming class: exponents sorted descending."""

    def partitions(n, largest):
        if n == 0:
            yield ()
            return
        for first in range(min(n, largest), 0, -1):
            for rest in partitions(n - first, first):
                yield (first,) + rest

    out = []
    for n in range(1, max_length + 1):
        for part in partitions(n, n):
            out.append(CommWord(tuple(enumerate(part))))
    return out


def zr_generators(basis: NilBasis, length_bound: int, caps: Caps = DEFAULT_CAPS) -> frozenset:
    """Minimal zero identities ``w = 0`` with ``length(w) <= length_bound``.

    A word is dropped when an already chosen generator embeds in it.  The set
    generates every zero identity up to the bound; beyond it nothing is claimed.
    """
    from .commwords import embeds

    zeros: list[CommWord] = []
    for w in canonical_words(length_bound):
        # anything above a known zero word is zero
        if any(embeds(g, w) for g in zeros) or entails(basis, ZeroEq(w), caps):
            zeros.append(w)
    chosen = [w for w in zeros if not any(g != w and embeds(g, w) for g in zeros)]
    return frozenset(ZeroEq(w) for w in chosen)


def nil_subvariety(a: NilBasis, b: NilBasis, caps: Caps = DEFAULT_CAPS) -> bool:
    """Is the variety of ``a`` contained in the variety of ``b``?"""
    if not entails(a, ZeroEq(CommWord.power(0, b.p)), caps):
        return False
    return all(entails(a, ident, caps) for ident in b.sorted_ids())


def same_nil_variety(a: NilBasis, b: NilBasis, caps: Caps = DEFAULT_CAPS) -> bool:
    return nil_subvariety(a, b, caps) and nil_subvariety(b, a, caps)


__all__ = [
    "NilBasis",
    "FreeNilQuotient",
    "Degree",
    "W_WORDS",
    "X2Y",
    "XY2",
    "free_quotient",
    "entails",
    "split_zero",
    "degree",
    "zr_generators",
    "canonical_words",
    "nil_subvariety",
    "same_nil_variety",
    "encode",
    "decode",
]
