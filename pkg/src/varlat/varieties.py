"""Commutative varieties in decomposed form ``G(d) + C(m) + N``.

``G(d)`` is the Abelian group variety of exponent ``d``, ``C(m)`` is
``var{x^m = x^(m+1), xy = yx}`` and ``N`` is a nil part, either a node of the
lattice L(I) or an explicit :class:`~varlat.nilcalc.NilBasis`.  ``COM`` (all
commutative semigroups) is a separate token.

A descriptor is *canonical* when its triple is exactly (Gr, m, Nil) of the
variety it denotes: either ``d = 1, m <= 1`` or ``m <= 2`` with ``N`` inside
K.  ``Nil(C_2)`` is L, so for ``m = 2`` the nil part is read as ``N v L``.
Lattice operations and equality are only performed on canonical descriptors.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass
from functools import lru_cache
from math import gcd
from typing import Union

from .commwords import CommWord, Equal, Identity, ZeroEq, canonical, identity_letters
from .config import DEFAULT_CAPS, Caps
from .errors import CapExceeded, InvalidIndex, NonCanonical, NotPeriodic, Unsupported, VarlatError
from .models import cyclic_monoid_table, satisfies_in_table
from .nilcalc import X2Y, XY2, Degree, NilBasis, degree, entails, same_nil_variety, nil_subvariety


class _Omega:
    """Index of a column top; above every natural number."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("omega")

    def __repr__(self):
        return "OMEGA"

    def __reduce__(self):
        return (_Omega, ())


OMEGA = _Omega()

COLUMNS = ("L", "K", "J", "I")
RANK = {c: i for i, c in enumerate(COLUMNS)}
MIN_INDEX = {"L": 1, "K": 3, "J": 4, "I": 4}

# words used by the catalog bases and the classification tests
X2 = CommWord.power(0, 2)
X3 = CommWord.power(0, 3)
X2YZ = CommWord(((0, 2), (1, 1), (2, 1)))
ZERO_X2Y = ZeroEq(X2Y)
ZERO_X2YZ = ZeroEq(X2YZ)
XXY_XYY = Equal(X2Y, XY2)


@dataclass(frozen=True)
class CatalogElement:
    column: str
    index: object  # int or OMEGA

    def __post_init__(self):
        if self.column not in RANK:
            raise InvalidIndex(f"unknown column {self.column!r}")
        if self.index is not OMEGA:
            if not isinstance(self.index, int) or self.index < MIN_INDEX[self.column]:
                raise InvalidIndex(
                    f"{self.column}_n needs an integer n >= {MIN_INDEX[self.column]}, got {self.index!r}"
                )

    @property
    def rank(self) -> int:
        return RANK[self.column]

    @property
    def is_top(self) -> bool:
        return self.index is OMEGA

    def __str__(self) -> str:
        if self.column == "L" and self.index == 1:
            return "T"
        return self.column if self.is_top else f"{self.column}_{self.index}"


TRIVIAL = CatalogElement("L", 1)
L_TOP = CatalogElement("L", OMEGA)
K_TOP = CatalogElement("K", OMEGA)
J_TOP = CatalogElement("J", OMEGA)
I_TOP = CatalogElement("I", OMEGA)


@lru_cache(maxsize=None)
def catalog_basis(e: CatalogElement) -> NilBasis:
    if e == TRIVIAL:
        return NilBasis.of(1)
    if e.column == "I":
        base = NilBasis.of(4, XXY_XYY, ZERO_X2YZ)
    elif e.column == "J":
        base = NilBasis.of(3, XXY_XYY, ZERO_X2YZ, ZeroEq(X3))
    elif e.column == "K":
        base = NilBasis.of(3, ZERO_X2Y)
    else:
        base = NilBasis.of(2, ZeroEq(X2))
    if e.is_top:
        return base
    return base.with_ids(ZeroEq(CommWord.squarefree(e.index)))


def catalog_leq(a: CatalogElement, b: CatalogElement) -> bool:
    return a.rank <= b.rank and a.index <= b.index


def catalog_join(a: CatalogElement, b: CatalogElement) -> CatalogElement:
    return CatalogElement(COLUMNS[max(a.rank, b.rank)], max(a.index, b.index))


def catalog_meet(a: CatalogElement, b: CatalogElement) -> CatalogElement:
    return CatalogElement(COLUMNS[min(a.rank, b.rank)], min(a.index, b.index))


def catalog_elements(max_index: int, tops: bool = True, columns=COLUMNS) -> list[CatalogElement]:
    out = []
    for col in columns:
        out.extend(CatalogElement(col, n) for n in range(MIN_INDEX[col], max_index + 1))
        if tops:
            out.append(CatalogElement(col, OMEGA))
    return out


def catalog_degree(e: CatalogElement) -> Degree:
    return Degree.infinite() if e.is_top else Degree.exact(e.index)


# -- descriptors ----------------------------------------------------------------

NilPart = Union[CatalogElement, NilBasis]


class Com:
    """The variety of all commutative semigroups."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "COM"

    def __str__(self):
        return "COM"

    def __reduce__(self):
        return (Com, ())


COM = Com()


@dataclass(frozen=True)
class Composite:
    d: int = 1
    m: int = 0
    nil: NilPart = TRIVIAL

    def __post_init__(self):
        if self.d < 1:
            raise ValueError("group exponent must be >= 1")
        if self.m < 0:
            raise ValueError("monoid index must be >= 0")

    def __str__(self) -> str:
        return f"G({self.d}) + C({self.m}) + {self.nil}"


VarietyDesc = Union[Com, Composite]

SL = Composite(1, 1, TRIVIAL)


def nil_basis(nil: NilPart) -> NilBasis:
    return catalog_basis(nil) if isinstance(nil, CatalogElement) else nil


def nil_entails(nil: NilPart, ident: Identity, caps: Caps = DEFAULT_CAPS) -> bool:
    return entails(nil_basis(nil), ident, caps)


def _exact_nil_degree(basis: NilBasis, bound: int, caps: Caps) -> Degree:
    # A step out of the class of x1...xn uses a basis side u that embeds in a
    # squarefree word, so u is squarefree and the basis already forces u = 0.
    # Hence a finite degree never exceeds the letter count of the basis.
    res = degree(basis, max(bound, basis.letter_count, 1), caps)
    return res if res.is_exact else Degree.infinite()


@lru_cache(maxsize=4096)
def _resolve(basis: NilBasis, caps: Caps) -> CatalogElement | None:
    if not (entails(basis, ZERO_X2YZ, caps) and entails(basis, XXY_XYY, caps)):
        return None
    if entails(basis, ZeroEq(X2), caps):
        column = "L"
    elif entails(basis, ZERO_X2Y, caps):
        column = "K"
    elif entails(basis, ZeroEq(X3), caps):
        column = "J"
    else:
        column = "I"
    deg = _exact_nil_degree(basis, 0, caps)
    elem = CatalogElement(column, deg.n if deg.is_exact else OMEGA)
    if not same_nil_variety(basis, catalog_basis(elem), caps):
        raise Unsupported(f"{basis} lies in I but matches no catalog node")
    return elem


def resolve_catalog(nil: NilPart, caps: Caps = DEFAULT_CAPS) -> CatalogElement | None:
    """The node of L(I) equal to ``nil``, or None when ``nil`` is not inside I."""
    if isinstance(nil, CatalogElement):
        return nil
    return _resolve(nil, caps)


def _in_k(nil: NilPart, caps: Caps) -> bool:
    if isinstance(nil, CatalogElement):
        return nil.rank <= RANK["K"]
    return entails(nil, ZERO_X2Y, caps)


def is_canonical(v: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> bool:
    if isinstance(v, Com):
        return True
    return (v.d == 1 and v.m <= 1) or (v.m <= 2 and _in_k(v.nil, caps))


def _require_canonical(v: VarietyDesc, caps: Caps) -> None:
    if not is_canonical(v, caps):
        raise NonCanonical(f"{v} is not canonical: its nil part may be smaller than Nil(V)")


def effective_nil(v: Composite, caps: Caps = DEFAULT_CAPS) -> NilPart:
    """Nil(V) for a canonical descriptor (folds in Nil(C_2) = L when m = 2)."""
    _require_canonical(v, caps)
    if v.m < 2:
        return v.nil
    return catalog_join(resolve_catalog(v.nil, caps), L_TOP)


def nil_join(a: NilPart, b: NilPart, caps: Caps = DEFAULT_CAPS) -> CatalogElement:
    ca, cb = resolve_catalog(a, caps), resolve_catalog(b, caps)
    if ca is None or cb is None:
        raise Unsupported(f"join of {a} and {b} leaves the catalog L(I)")
    return catalog_join(ca, cb)


def nil_meet(a: NilPart, b: NilPart, caps: Caps = DEFAULT_CAPS) -> NilPart:
    if isinstance(a, CatalogElement) and isinstance(b, CatalogElement):
        return catalog_meet(a, b)
    ba, bb = nil_basis(a), nil_basis(b)
    return NilBasis(min(ba.p, bb.p), ba.ids | bb.ids)


def nil_leq(a: NilPart, b: NilPart, caps: Caps = DEFAULT_CAPS) -> bool:
    if isinstance(a, CatalogElement) and isinstance(b, CatalogElement):
        return catalog_leq(a, b)
    return nil_subvariety(nil_basis(a), nil_basis(b), caps)


def nil_equal(a: NilPart, b: NilPart, caps: Caps = DEFAULT_CAPS) -> bool:
    ca, cb = resolve_catalog(a, caps), resolve_catalog(b, caps)
    if ca is not None and cb is not None:
        return ca == cb
    if (ca is None) != (cb is None):
        return False
    return same_nil_variety(nil_basis(a), nil_basis(b), caps)


# -- identities -----------------------------------------------------------------


def _group_satisfies(d: int, ident: Identity) -> bool:
    if d == 1:
        return True
    if isinstance(ident, ZeroEq):
        return False
    lhs, rhs = ident.lhs.as_dict(), ident.rhs.as_dict()
    return all((lhs.get(l, 0) - rhs.get(l, 0)) % d == 0 for l in set(lhs) | set(rhs))


def _monoid_satisfies(m: int, ident: Identity, caps: Caps) -> bool:
    k = len(identity_letters(ident))
    if (m + 1) ** k > caps.max_carrier:
        raise CapExceeded(f"{(m + 1) ** k} assignments into C_{m} exceed max_carrier")
    return satisfies_in_table(cyclic_monoid_table(m), ident)


def satisfies(v: VarietyDesc, ident: Identity, caps: Caps = DEFAULT_CAPS) -> bool:
    """Does the variety satisfy ``ident``?  A join satisfies what every part satisfies."""
    ident = canonical(ident)
    if isinstance(v, Com):
        return isinstance(ident, Equal) and ident.trivial
    return (
        _group_satisfies(v.d, ident)
        and _monoid_satisfies(v.m, ident, caps)
        and nil_entails(v.nil, ident, caps)
    )


# -- invariants -----------------------------------------------------------------


def gr(v: VarietyDesc) -> int:
    """Exponent of the greatest group subvariety."""
    if isinstance(v, Com):
        raise NotPeriodic("COM has no greatest group subvariety")
    return v.d


def m_index(v: VarietyDesc, cross_check: bool = False, caps: Caps = DEFAULT_CAPS) -> int:
    """Largest m with C_m inside the variety.

    With ``cross_check`` the value is re-derived from identities: the variety
    satisfies ``x^m y^p = x^(m+d) y^p`` and the largest cyclic monoid obeying
    that identity must be C_m itself.
    """
    if isinstance(v, Com):
        raise NotPeriodic("m(COM) is unbounded")
    if not cross_check:
        return v.m
    p = nil_basis(v.nil).p
    left = {1: p} if v.m == 0 else {0: v.m, 1: p}
    probe = Equal(CommWord.of(left), CommWord.of({0: v.m + v.d, 1: p}))
    if not satisfies(v, probe, caps):
        raise VarlatError(f"{v} fails its own monoid probe {probe}")
    for cand in range(v.m + 1, -1, -1):
        if satisfies_in_table(cyclic_monoid_table(cand), probe):
            if cand != v.m:
                raise VarlatError(f"m cross-check disagrees for {v}: {cand} != {v.m}")
            return cand
    raise VarlatError("unreachable: C_0 satisfies every identity")


def _eq4(n: int, t: int) -> Equal:
    """x1 x2 ... xn = (x1 x2 ... xn)^(t+1)."""
    return Equal(CommWord.squarefree(n), CommWord(tuple((i, t + 1) for i in range(n))))


def _eq4_degree(v: Composite, bound: int, caps: Caps) -> Degree:
    t_max = v.d
    for n in range(1, bound + 1):
        if any(satisfies(v, _eq4(n, t), caps) for t in range(1, t_max + 1)):
            return Degree.exact(n)
    return Degree.above(bound)


def degree_of(v: VarietyDesc, bound: int = 8, cross_check: bool = False, caps: Caps = DEFAULT_CAPS) -> Degree:
    """Degree of the variety: bound on nilpotency of its nilsemigroups.

    For m >= 2 the variety contains Nil(C_2) = L and has infinite degree;
    otherwise the degree is that of the nil part.
    """
    if isinstance(v, Com):
        return Degree.infinite()
    if v.m >= 2:
        result = Degree.infinite()
    elif isinstance(v.nil, CatalogElement):
        result = catalog_degree(v.nil)
    else:
        result = _exact_nil_degree(v.nil, bound, caps)
    if cross_check:
        probe_bound = bound if not result.is_exact else max(bound, result.n)
        seen = _eq4_degree(v, probe_bound, caps)
        expected = result if result.is_exact else Degree.above(probe_bound)
        if seen != expected:
            raise VarlatError(f"degree cross-check disagrees for {v}: {seen} vs {result}")
    return result


# -- lattice operations ------------------------------------------------------------


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def join(v1: VarietyDesc, v2: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> VarietyDesc:
    if isinstance(v1, Com) or isinstance(v2, Com):
        return COM
    n1, n2 = effective_nil(v1, caps), effective_nil(v2, caps)
    return Composite(_lcm(v1.d, v2.d), max(v1.m, v2.m), nil_join(n1, n2, caps))


def meet(v1: VarietyDesc, v2: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> VarietyDesc:
    if isinstance(v1, Com):
        if isinstance(v2, Composite):
            _require_canonical(v2, caps)
        return v2
    if isinstance(v2, Com):
        _require_canonical(v1, caps)
        return v1
    n1, n2 = effective_nil(v1, caps), effective_nil(v2, caps)
    return Composite(gcd(v1.d, v2.d), min(v1.m, v2.m), nil_meet(n1, n2, caps))


def equal(v1: VarietyDesc, v2: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> bool:
    if isinstance(v1, Com) or isinstance(v2, Com):
        for v in (v1, v2):
            if isinstance(v, Composite):
                _require_canonical(v, caps)
        return isinstance(v1, Com) and isinstance(v2, Com)
    n1, n2 = effective_nil(v1, caps), effective_nil(v2, caps)
    return v1.d == v2.d and v1.m == v2.m and nil_equal(n1, n2, caps)


def leq(v1: VarietyDesc, v2: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> bool:
    """Subvariety test for canonical descriptors."""
    if isinstance(v2, Com):
        if isinstance(v1, Composite):
            _require_canonical(v1, caps)
        return True
    if isinstance(v1, Com):
        _require_canonical(v2, caps)
        return False
    n1, n2 = effective_nil(v1, caps), effective_nil(v2, caps)
    return v2.d % v1.d == 0 and v1.m <= v2.m and nil_leq(n1, n2, caps)


def normal_key(v: VarietyDesc, caps: Caps = DEFAULT_CAPS):
    """Hashable key equal for equal canonical descriptors, or None if the nil part leaves L(I)."""
    if isinstance(v, Com):
        return ("COM",)
    elem = resolve_catalog(effective_nil(v, caps), caps)
    if elem is None:
        return None
    return (v.d, v.m, elem.column, elem.index)


def normalize(v: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> VarietyDesc:
    """Canonical descriptor with its nil part replaced by the catalog node when possible."""
    if isinstance(v, Com):
        return v
    nil = effective_nil(v, caps)
    elem = resolve_catalog(nil, caps)
    return Composite(v.d, v.m, elem if elem is not None else nil)


# -- classification ---------------------------------------------------------------


@dataclass(frozen=True)
class ClassReport:
    upper_modular: bool
    codistributive: bool
    costandard: bool
    neutral: bool
    modular: str  # "no" | "necessary-condition-holds" | "top"
    matched_clause: str  # "(i)" | "(ii)" | "(iii)" | "none"

    def as_dict(self) -> dict:
        return asdict(self)


def classify(v: VarietyDesc, caps: Caps = DEFAULT_CAPS) -> ClassReport:
    """Upper-modular / codistributive / costandard / neutral status in Com.

    Exact for every descriptor, canonical or not.  The clause tests read the
    given nil part N, and that is safe: a variety of the form G + M + N' with
    N' inside K has Nil inside K, which forces N (a subvariety of Nil) to
    satisfy x^2 y = 0; and a form M + N' with N' inside I has trivial Gr,
    m <= 1 and Nil = N', which forces N inside I.
    """
    if isinstance(v, Com):
        # COM is the top of Com, and the top of any lattice is neutral
        return ClassReport(True, True, True, True, "top", "(i)")
    in_k = nil_entails(v.nil, ZERO_X2Y, caps)
    clause_ii = (
        v.d == 1
        and v.m <= 1
        and nil_entails(v.nil, ZERO_X2YZ, caps)
        and nil_entails(v.nil, XXY_XYY, caps)
    )
    clause_iii = v.m <= 2 and in_k
    upper = clause_ii or clause_iii
    neutral = v.d == 1 and v.m <= 1 and in_k
    modular = "no" if (v.d > 1 or v.m >= 2) else "necessary-condition-holds"
    clause = "(ii)" if clause_ii else "(iii)" if clause_iii else "none"
    return ClassReport(upper, upper, clause_ii, neutral, modular, clause)


__all__ = [
    "OMEGA",
    "COLUMNS",
    "CatalogElement",
    "TRIVIAL",
    "L_TOP",
    "K_TOP",
    "J_TOP",
    "I_TOP",
    "catalog_basis",
    "catalog_leq",
    "catalog_join",
    "catalog_meet",
    "catalog_elements",
    "catalog_degree",
    "COM",
    "Com",
    "Composite",
    "SL",
    "VarietyDesc",
    "NilPart",
    "nil_basis",
    "resolve_catalog",
    "is_canonical",
    "effective_nil",
    "satisfies",
    "gr",
    "m_index",
    "degree_of",
    "join",
    "meet",
    "equal",
    "leq",
    "normal_key",
    "normalize",
    "classify",
    "ClassReport",
]
