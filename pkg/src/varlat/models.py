"""Finite semigroups given by Cayley tables, and brute-force identity checks.

This is the independent oracle for :mod:`varlat.nilcalc`: identities are
evaluated under every assignment of table elements to letters, with no
symmetry reduction.
"""
from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .commwords import Identity, ZeroEq, canonical, identity_letters
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, NoZeroElement, NotAssociative


def check_associative(table) -> bool:
    """True iff (ab)c = a(bc) for all n^3 triples."""
    if isinstance(table, CayleyTable):
        table = table.table
    return _kernels.first_nonassociative(np.asarray(table)) == (-1, -1, -1)


def find_zero(table: np.ndarray) -> int | None:
    n = table.shape[0]
    for z in range(n):
        if np.all(table[z, :] == z) and np.all(table[:, z] == z):
            return z
    return None


@dataclass(frozen=True, eq=False)
class CayleyTable:
    table: np.ndarray
    zero: int | None = None

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise ValueError("a Cayley table is a non-empty square matrix")
        n = t.shape[0]
        if t.min() < 0 or t.max() >= n:
            raise ValueError("table entries must index elements")
        triple = _kernels.first_nonassociative(t)
        if triple != (-1, -1, -1):
            raise NotAssociative(f"(ab)c != a(bc) at {triple}")
        found = find_zero(t)
        if self.zero is not None and self.zero != found:
            raise ValueError(f"element {self.zero} is not absorbing")
        t.setflags(write=False)
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "zero", found)

    @property
    def n(self) -> int:
        return int(self.table.shape[0])

    def __eq__(self, other):
        return isinstance(other, CayleyTable) and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash(self.table.tobytes())

    def dumps(self) -> str:
        lines = [f"# order = {self.n}"]
        if self.zero is not None:
            lines.append(f"# zero = {self.zero}")
        lines.extend(" ".join(str(int(v)) for v in row) for row in self.table)
        return "\n".join(lines) + "\n"

    @classmethod
    def loads(cls, text: str) -> "CayleyTable":
        rows = [line for line in text.splitlines() if line.strip() and not line.lstrip().startswith("#")]
        return cls(np.loadtxt(io.StringIO("\n".join(rows)), dtype=np.int64, ndmin=2))


def _evaluate_assignment(flat: int, n: int, k: int) -> tuple[int, ...]:
    return tuple(int(d) for d in np.unravel_index(flat, (n,) * k))


def satisfies_in_table(t: CayleyTable, ident: Identity) -> bool:
    """Exhaustive check of ``ident`` under all ``n^k`` assignments."""
    return counterexample_in_table(t, ident) is None


def counterexample_in_table(t: CayleyTable, ident: Identity):
    """An assignment (tuple of elements for letters x, y, ...) refuting ``ident``, or None."""
    ident = canonical(ident)
    k = len(identity_letters(ident))
    if isinstance(ident, ZeroEq):
        if t.zero is None:
            raise NoZeroElement("w = 0 needs an absorbing element")
        flat = _kernels.zero_counterexample(t.table, ident.word.vector(k), t.zero)
    else:
        flat = _kernels.identity_counterexample(t.table, ident.lhs.vector(k), ident.rhs.vector(k))
    return None if flat < 0 else _evaluate_assignment(flat, t.n, k)


def quotient_to_table(q, caps: Caps = DEFAULT_CAPS) -> CayleyTable:
    """Cayley table of a :class:`~varlat.nilcalc.FreeNilQuotient`; zero is class 0."""
    if q.n_classes > caps.max_carrier:
        raise CapExceeded(f"{q.n_classes} classes exceed max_carrier={caps.max_carrier}")
    return CayleyTable(np.asarray(q.table), zero=0)


def cyclic_monoid_table(m: int) -> CayleyTable:
    """The (m+1)-element combinatorial cyclic monoid {1, a, ..., a^m}, a^(m+1) = a^m.

    Element i is a^i (element 0 is the identity).
    """
    if m < 0:
        raise ValueError("m >= 0")
    idx = np.arange(m + 1)
    return CayleyTable(np.minimum(idx[:, None] + idx[None, :], m))


def semilattice_table() -> CayleyTable:
    """{0, 1} under meet."""
    return CayleyTable(np.array([[0, 0], [0, 1]]))


def cyclic_group_table(d: int) -> CayleyTable:
    idx = np.arange(d)
    return CayleyTable((idx[:, None] + idx[None, :]) % d)


def left_zero_table(n: int = 2) -> CayleyTable:
    return CayleyTable(np.tile(np.arange(n)[:, None], (1, n)))


__all__ = [
    "CayleyTable",
    "check_associative",
    "satisfies_in_table",
    "counterexample_in_table",
    "quotient_to_table",
    "cyclic_monoid_table",
    "semilattice_table",
    "cyclic_group_table",
    "left_zero_table",
    "find_zero",
]
