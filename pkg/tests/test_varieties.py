import pytest
from hypothesis import given, strategies as st

from varlat import varieties as V
from varlat.commwords import CommWord, Equal, ZeroEq
from varlat.errors import InvalidIndex, NonCanonical, NotPeriodic, Unsupported
from varlat.nilcalc import Degree, NilBasis
from varlat.varieties import COM, Composite, CatalogElement as E, OMEGA

X, Y = 0, 1


def xp(n):
    return CommWord.power(X, n)


def test_catalog_indices():
    for col, low in (("L", 1), ("K", 3), ("J", 4), ("I", 4)):
        E(col, low)
        with pytest.raises(InvalidIndex):
            E(col, low - 1)
    with pytest.raises(InvalidIndex):
        E("Q", 3)
    assert str(E("L", 1)) == "T" and str(V.K_TOP) == "K" and str(E("K", 3)) == "K_3"


def test_catalog_basis_examples():
    assert V.catalog_basis(E("K", 3)) == NilBasis.of(
        3, ZeroEq(CommWord.of({X: 2, Y: 1})), ZeroEq(CommWord.squarefree(3))
    )
    assert V.catalog_basis(V.TRIVIAL) == NilBasis.of(1)
    assert V.catalog_basis(V.I_TOP) == NilBasis.of(4, V.XXY_XYY, V.ZERO_X2YZ)


def test_catalog_order_examples():
    assert V.catalog_leq(E("L", 2), E("K", 3))
    assert not V.catalog_leq(E("L", 4), E("K", 3))
    assert V.catalog_leq(V.K_TOP, V.I_TOP)
    assert V.catalog_join(E("L", 5), E("K", 3)) == E("K", 5)
    assert V.catalog_meet(E("J", 5), V.K_TOP) == E("K", 5)
    assert V.catalog_meet(V.I_TOP, E("K", 4)) == E("K", 4)
    assert V.catalog_join(V.TRIVIAL, V.TRIVIAL) == V.TRIVIAL
    assert OMEGA > 10**9 and not OMEGA < 3


def test_satisfies_examples():
    assert V.satisfies(Composite(1, 2, V.TRIVIAL), Equal(xp(2), xp(3)))
    assert V.satisfies(Composite(2, 0, V.TRIVIAL), Equal(xp(1), xp(3)))
    assert not V.satisfies(Composite(1, 2, V.TRIVIAL), Equal(xp(1), xp(2)))
    assert not V.satisfies(Composite(2, 0, V.TRIVIAL), ZeroEq(xp(1)))
    assert V.satisfies(COM, Equal(xp(2), xp(2)))
    assert not V.satisfies(COM, Equal(xp(2), xp(3)))


def test_invariant_examples():
    assert V.gr(Composite(6, 2, V.K_TOP)) == 6
    assert V.gr(Composite(1, 1, E("L", 3))) == 1
    with pytest.raises(NotPeriodic):
        V.gr(COM)
    with pytest.raises(NotPeriodic):
        V.m_index(COM)
    assert V.m_index(Composite(4, 2, V.K_TOP)) == 2
    assert V.m_index(Composite(1, 0, V.TRIVIAL)) == 0
    assert V.m_index(Composite(3, 1, E("L", 2)), cross_check=True) == 1


def test_degree_examples():
    assert V.degree_of(Composite(1, 1, E("K", 5)), cross_check=True) == Degree.exact(5)
    assert V.degree_of(COM) == Degree.infinite()
    # the nil part K contains every K_n, so no finite bound exists
    assert not V.degree_of(Composite(2, 1, V.K_TOP)).is_exact
    assert V.degree_of(Composite(1, 2, V.TRIVIAL)) == Degree.infinite()
    based = Composite(1, 0, NilBasis.of(3, ZeroEq(CommWord.of({X: 2, Y: 1})), ZeroEq(CommWord.squarefree(4))))
    assert V.degree_of(based, cross_check=True) == Degree.exact(4)


def test_join_meet_examples():
    a = V.join(Composite(2, 1, E("L", 2)), Composite(3, 0, E("K", 3)))
    assert V.equal(a, Composite(6, 1, E("K", 3)))
    b = V.meet(Composite(6, 2, V.K_TOP), Composite(4, 1, E("K", 4)))
    assert V.equal(b, Composite(2, 1, E("K", 4)))
    assert V.join(V.SL, COM) is COM
    assert V.meet(V.SL, COM) == V.SL


def test_equal_examples():
    based = Composite(1, 0, NilBasis.of(3, ZeroEq(CommWord.of({X: 2, Y: 1}))))
    assert V.equal(based, Composite(1, 0, V.K_TOP))
    assert not V.equal(Composite(1, 1, E("K", 3)), Composite(1, 1, E("K", 4)))
    assert V.equal(COM, COM)
    # Nil(C_2) = L, so T and L nil parts coincide at m = 2
    assert V.equal(Composite(1, 2, V.TRIVIAL), Composite(1, 2, V.L_TOP))


def test_non_canonical_is_refused():
    v = Composite(2, 1, V.I_TOP)
    assert not V.is_canonical(v)
    with pytest.raises(NonCanonical):
        V.join(v, V.SL)
    with pytest.raises(NonCanonical):
        V.equal(v, v)


def test_outside_catalog_join_is_unsupported():
    big = Composite(1, 0, NilBasis.of(3))  # x^3 = 0 only; not inside I
    assert V.resolve_catalog(big.nil) is None
    with pytest.raises(Unsupported):
        V.join(big, Composite(1, 0, V.K_TOP))


def test_classify_examples():
    r = V.classify(Composite(1, 1, V.I_TOP))
    assert (r.upper_modular, r.codistributive, r.costandard, r.neutral) == (True, True, True, False)
    assert r.matched_clause == "(ii)"
    r = V.classify(Composite(6, 2, V.K_TOP))
    assert r.upper_modular and not r.costandard and r.matched_clause == "(iii)"
    assert r.modular == "no"
    r = V.classify(Composite(1, 3, V.K_TOP))
    assert not r.upper_modular and r.matched_clause == "none"
    r = V.classify(Composite(1, 1, E("K", 4)))
    assert r.neutral and r.costandard
    top = V.classify(COM)
    assert top.matched_clause == "(i)" and top.modular == "top"


def test_normal_form():
    based = Composite(1, 0, NilBasis.of(4, V.XXY_XYY, V.ZERO_X2YZ, ZeroEq(CommWord.squarefree(5))))
    assert V.normalize(based) == Composite(1, 0, E("I", 5))
    assert V.normal_key(Composite(1, 2, V.TRIVIAL)) == (1, 2, "L", OMEGA)


# -- lattice laws on random canonical descriptors -------------------------------------

catalog = st.sampled_from(V.catalog_elements(6))


@st.composite
def canonical_family(draw, size):
    """Descriptors from one of the two join/meet-closed canonical regions.

    Joins can leave the canonical domain (C_2 v J_4 is not of the form
    G + C_2 + N with N inside K), so each draw stays inside either
    ``m <= 2, N <= K`` or ``d = 1, m <= 1``.
    """
    in_k = draw(st.booleans())
    out = []
    for _ in range(size):
        if draw(st.integers(0, 19)) == 0:
            out.append(COM)
            continue
        nil = draw(catalog)
        if in_k:
            d, m = draw(st.sampled_from((1, 2, 3, 4, 6))), draw(st.integers(0, 2))
            nil = V.catalog_meet(nil, V.K_TOP)
        else:
            d, m = 1, draw(st.integers(0, 1))
        out.append(Composite(d, m, nil))
    return out


@given(canonical_family(3))
def test_lattice_laws(abc):
    a, b, c = abc
    j, m = V.join, V.meet
    assert V.equal(j(a, b), j(b, a)) and V.equal(m(a, b), m(b, a))
    assert V.equal(j(a, j(b, c)), j(j(a, b), c))
    assert V.equal(m(a, m(b, c)), m(m(a, b), c))
    assert V.equal(j(a, a), a) and V.equal(m(a, a), a)
    assert V.equal(j(a, m(a, b)), a) and V.equal(m(a, j(a, b)), a)
    assert V.leq(a, b) == V.equal(j(a, b), b) == V.equal(m(a, b), a)


def test_join_can_leave_canonical_domain():
    v = V.join(Composite(1, 0, E("J", 4)), Composite(1, 2, V.TRIVIAL))
    assert not V.is_canonical(v)


probes = [
    Equal(xp(2), xp(3)),
    Equal(xp(1), xp(3)),
    Equal(xp(2), xp(4)),
    ZeroEq(CommWord.of({X: 2, Y: 1})),
    Equal(CommWord.of({X: 2, Y: 1}), CommWord.of({X: 1, Y: 2})),
    Equal(CommWord.of({X: 2, Y: 1}), CommWord.of({X: 4, Y: 1})),
    Equal(CommWord.of({X: 3, Y: 3}), CommWord.of({X: 3, Y: 5})),
]


@given(canonical_family(2))
def test_inclusion_transfers_identities(ab):
    a, b = ab
    if V.leq(a, b):
        for p in probes:
            if V.satisfies(b, p):
                assert V.satisfies(a, p)
