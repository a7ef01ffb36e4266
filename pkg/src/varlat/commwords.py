"""Commutative words as exponent vectors, identities, substitution, embedding.

Letters are small non-negative integers.  They render as ``x, y, z`` and then
``x1, x2, ...`` so that the rendering is injective.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Mapping, Sequence, Union

from .errors import MissingImage

Letter = int

_BASE_NAMES = ("x", "y", "z")


def letter_name(letter: Letter) -> str:
    if letter < 0:
        raise ValueError("letters are non-negative")
    if letter < len(_BASE_NAMES):
        return _BASE_NAMES[letter]
    return f"x{letter - len(_BASE_NAMES) + 1}"


@dataclass(frozen=True, order=True)
class CommWord:
    """A non-empty commutative word, stored as sorted ``(letter, multiplicity)`` pairs."""

    exps: tuple[tuple[Letter, int], ...]

    def __post_init__(self):
        if not self.exps:
            raise ValueError("a commutative word is non-empty")
        prev = -1
        for letter, mult in self.exps:
            if letter <= prev:
                raise ValueError("letters must be strictly increasing; use CommWord.of()")
            if mult < 1:
                raise ValueError("multiplicities are positive")
            prev = letter

    @classmethod
    def of(cls, exps: Mapping[Letter, int]) -> "CommWord":
        return cls(tuple(sorted((l, m) for l, m in exps.items() if m)))

    @classmethod
    def from_vector(cls, vec: Sequence[int]) -> "CommWord":
        return cls(tuple((i, m) for i, m in enumerate(vec) if m))

    @classmethod
    def power(cls, letter: Letter, n: int) -> "CommWord":
        return cls(((letter, n),))

    @classmethod
    def squarefree(cls, n: int) -> "CommWord":
        """The product x1 x2 ... xn of n distinct letters."""
        return cls(tuple((i, 1) for i in range(n)))

    def as_dict(self) -> dict[Letter, int]:
        return dict(self.exps)

    def vector(self, k: int) -> tuple[int, ...]:
        vec = [0] * k
        for letter, mult in self.exps:
            if letter >= k:
                raise ValueError(f"letter {letter} outside {k} coordinates")
            vec[letter] = mult
        return tuple(vec)

    def multiplicity(self, letter: Letter) -> int:
        return dict(self.exps).get(letter, 0)

    def __str__(self) -> str:
        parts = []
        for letter, mult in self.exps:
            name = letter_name(letter)
            parts.append(name if mult == 1 else f"{name}^{mult}")
        return "*".join(parts)


def content(u: CommWord) -> frozenset[Letter]:
    return frozenset(l for l, _ in u.exps)


def length(u: CommWord) -> int:
    return sum(m for _, m in u.exps)


def mul(u: CommWord, v: CommWord) -> CommWord:
    acc = u.as_dict()
    for letter, mult in v.exps:
        acc[letter] = acc.get(letter, 0) + mult
    return CommWord.of(acc)


def substitute(u: CommWord, images: Mapping[Letter, CommWord]) -> CommWord:
    acc: dict[Letter, int] = {}
    for letter, mult in u.exps:
        try:
            image = images[letter]
        except KeyError:
            raise MissingImage(f"no image for letter {letter_name(letter)}") from None
        for l2, m2 in image.exps:
            acc[l2] = acc.get(l2, 0) + mult * m2
    return CommWord.of(acc)


def dense_embeddings(mults: Sequence[int], target: Sequence[int]) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every tuple of non-zero vectors ``a_i`` with ``sum(mults[i] * a_i) <= target``.

    ``mults`` are the multiplicities of the letters of a word, in order; the
    yielded tuple holds their images as exponent vectors over ``target``'s
    coordinates.
    """
    k = len(target)
    n = len(mults)
    chosen: list[tuple[int, ...]] = [()] * n

    def rec(i: int, rem: tuple[int, ...]):
        if i == n:
            yield tuple(chosen)
            return
        m = mults[i]
        ranges = [range(r // m + 1) for r in rem]
        for vec in product(*ranges):
            if not any(vec):
                continue
            chosen[i] = vec
            yield from rec(i + 1, tuple(rem[j] - m * vec[j] for j in range(k)))

    yield from rec(0, tuple(target))


def embeddings(u: CommWord, v: CommWord) -> Iterator[dict[Letter, CommWord]]:
    """All substitutions xi on content(u) with xi(u) <= v componentwise."""
    letters = sorted(content(v))
    target = [v.multiplicity(l) for l in letters]
    u_letters = [l for l, _ in u.exps]
    mults = [m for _, m in u.exps]
    for images in dense_embeddings(mults, target):
        yield {
            ul: CommWord.of({letters[j]: e for j, e in enumerate(img)})
            for ul, img in zip(u_letters, images)
        }


def embeds(u: CommWord, v: CommWord) -> bool:
    """Commutative reading of ``u <| v``: some substitution image of u fits under v."""
    if length(u) > length(v):
        return False
    return next(embeddings(u, v), None) is not None


def properly_embeds(u: CommWord, v: CommWord) -> bool:
    """``embeds(u, v)`` with ``v`` strictly longer.

    This is the form under which ``u = v`` forces ``u = 0`` in a commutative
    nil-variety.  Equal-length embeddings are letter renamings (``x^2 y`` into
    ``x y^2``) and force nothing.
    """
    return length(v) > length(u) and embeds(u, v)


# -- identities ---------------------------------------------------------------


@dataclass(frozen=True)
class Equal:
    lhs: CommWord
    rhs: CommWord

    @property
    def trivial(self) -> bool:
        return self.lhs == self.rhs

    def __str__(self) -> str:
        return f"{self.lhs} = {self.rhs}"


@dataclass(frozen=True)
class ZeroEq:
    """``w = 0``, short for the system ``w t = t w = w`` with ``t`` fresh."""

    word: CommWord

    trivial = False

    def __str__(self) -> str:
        return f"{self.word} = 0"


Identity = Union[Equal, ZeroEq]


def words_of(ident: Identity) -> tuple[CommWord, ...]:
    if isinstance(ident, Equal):
        return (ident.lhs, ident.rhs)
    return (ident.word,)


def identity_letters(ident: Identity) -> frozenset[Letter]:
    out: frozenset[Letter] = frozenset()
    for w in words_of(ident):
        out |= content(w)
    return out


def canonical(ident: Identity) -> Identity:
    """Rename letters to 0, 1, ... in order of first appearance."""
    mapping: dict[Letter, Letter] = {}
    for w in words_of(ident):
        for letter, _ in w.exps:
            mapping.setdefault(letter, len(mapping))

    def ren(w: CommWord) -> CommWord:
        return CommWord.of({mapping[l]: m for l, m in w.exps})

    if isinstance(ident, Equal):
        return Equal(ren(ident.lhs), ren(ident.rhs))
    return ZeroEq(ren(ident.word))


def substitute_identity(ident: Identity, images: Mapping[Letter, CommWord]) -> Identity:
    if isinstance(ident, Equal):
        return Equal(substitute(ident.lhs, images), substitute(ident.rhs, images))
    return ZeroEq(substitute(ident.word, images))


def all_words(n_letters: int, max_length: int, min_length: int = 1) -> list[CommWord]:
    """Every commutative word over letters ``0..n_letters-1`` with length in range."""
    out = []
    for vec in product(range(max_length + 1), repeat=n_letters):
        if min_length <= sum(vec) <= max_length:
            out.append(CommWord.from_vector(vec))
    return sorted(out, key=lambda w: (length(w), w.exps))
