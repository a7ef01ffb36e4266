import pytest
from hypothesis import given, strategies as st

from varlat.commwords import CommWord, Equal, ZeroEq
from varlat.config import Caps
from varlat.errors import CapExceeded
from varlat.nilcalc import (
    Degree, NilBasis, decode, degree, encode, entails, free_quotient, nil_subvariety,
    same_nil_variety, split_zero, zr_generators,
)
from varlat import varieties as V

X, Y, Z = 0, 1, 2


def w(*vec):
    return CommWord.from_vector(vec)


X2Y, XY2, X2YZ = w(2, 1), w(1, 2), w(2, 1, 1)


def test_free_quotient_examples():
    q = free_quotient(NilBasis.of(2), 2)
    assert q.n_classes == 4  # x, y, xy, 0
    assert len(set(q.generator_classes())) == 2
    assert free_quotient(NilBasis.of(1), 1).n_classes == 1
    k1 = free_quotient(NilBasis.of(3, ZeroEq(X2Y)), 1)
    assert k1.n_classes == 3
    assert k1.class_of(w(2)) != 0


def test_free_quotient_is_congruence_and_order_free():
    b = V.catalog_basis(V.I_TOP)
    q = free_quotient(b, 3)
    assert q.is_congruence()
    for seed in (1, 2, 3):
        assert (free_quotient(b, 3, shuffle_seed=seed).labels == q.labels).all()


def test_entails_examples():
    assert entails(NilBasis.of(4, Equal(X2Y, XY2)), ZeroEq(X2YZ))
    assert entails(NilBasis.of(4, ZeroEq(X2Y)), ZeroEq(X2YZ))
    assert not entails(NilBasis.of(4, ZeroEq(X2YZ), Equal(X2Y, XY2)), ZeroEq(X2Y))


def test_entails_basics():
    b = NilBasis.of(3)
    assert entails(b, ZeroEq(w(3)))
    assert entails(b, Equal(w(4, 1), w(0, 5)))  # both sides are zero
    assert not entails(b, ZeroEq(w(2)))
    assert entails(b, Equal(w(1, 1), w(1, 1)))
    with pytest.raises(ValueError):
        entails(b, ZeroEq(w(1)), method="bogus")


def test_caps_are_enforced():
    with pytest.raises(CapExceeded):
        entails(NilBasis.of(3), ZeroEq(CommWord.squarefree(5)), Caps(max_letters=4))
    with pytest.raises(CapExceeded):
        free_quotient(NilBasis.of(7), 1, Caps(max_p=6))
    with pytest.raises(CapExceeded):
        free_quotient(NilBasis.of(4), 5, Caps(max_carrier=100))


def test_split_zero_examples():
    assert split_zero(Equal(w(1, 1), w(1))) == {ZeroEq(w(1, 1)), ZeroEq(w(1))}
    big = w(1, 2, 2)
    assert split_zero(Equal(X2YZ, big)) == {ZeroEq(X2YZ), ZeroEq(big)}
    assert split_zero(Equal(X2Y, XY2)) == frozenset()
    assert split_zero(Equal(X2Y, X2Y)) == frozenset()
    with pytest.raises(TypeError):
        split_zero(ZeroEq(X2Y))


def test_degree_examples():
    assert degree(V.catalog_basis(V.CatalogElement("K", 5)), 6) == Degree.exact(5)
    assert degree(NilBasis.of(1), 3) == Degree.exact(1)
    for bound in (1, 3, 5):
        assert degree(NilBasis.of(2), bound) == Degree.above(bound)


def test_degree_ordering():
    assert Degree.exact(2).sort_key() < Degree.exact(3).sort_key() < Degree.infinite().sort_key()
    with pytest.raises(ValueError):
        Degree.above(3).sort_key()
    assert str(Degree.above(3)) == ">3"


def test_zr_generators_examples():
    assert zr_generators(V.catalog_basis(V.I_TOP), 4) == {ZeroEq(X2YZ)}
    assert zr_generators(V.catalog_basis(V.K_TOP), 3) == {ZeroEq(X2Y)}
    assert zr_generators(NilBasis.of(1), 3) == {ZeroEq(w(1))}


def test_nil_subvariety_examples():
    l2 = V.catalog_basis(V.CatalogElement("L", 2))
    k3 = V.catalog_basis(V.CatalogElement("K", 3))
    assert nil_subvariety(l2, k3)
    assert not nil_subvariety(NilBasis.of(3), V.catalog_basis(V.K_TOP))
    assert nil_subvariety(k3, k3)
    assert same_nil_variety(NilBasis.of(3, ZeroEq(X2Y)), V.catalog_basis(V.K_TOP))


def test_basis_rendering_and_canonical_ids():
    b = NilBasis.of(4, Equal(CommWord.of({7: 2, 3: 1}), CommWord.of({7: 1, 3: 2})))
    assert str(b) == "N{p=4; x*y^2 = x^2*y}"  # letter 3 appears first
    assert b.letter_count == 2
    assert str(NilBasis.of(2)) == "N{p=2}"


@given(st.integers(2, 5), st.lists(st.integers(0, 4), min_size=1, max_size=4))
def test_encode_decode_round_trip(p, vec):
    vec = tuple(min(v, p - 1) for v in vec)
    assert decode(encode(vec, p), p, len(vec)) == vec


small_words = st.lists(st.integers(0, 2), min_size=3, max_size=3).filter(lambda v: 1 <= sum(v) <= 4).map(
    lambda v: CommWord.from_vector(v)
)
identities = st.one_of(
    small_words.map(ZeroEq),
    st.tuples(small_words, small_words).map(lambda uv: Equal(*uv)),
)


@given(st.integers(2, 4), st.lists(identities, max_size=2), identities)
def test_search_agrees_with_quotient(p, ids, probe):
    basis = NilBasis(p, frozenset(ids))
    assert entails(basis, probe) == entails(basis, probe, method="quotient")


@given(st.integers(2, 4), st.lists(identities, max_size=2))
def test_basis_entails_its_own_identities(p, ids):
    basis = NilBasis(p, frozenset(ids))
    assert all(entails(basis, i) for i in ids)
    assert entails(basis, ZeroEq(CommWord.power(0, p)))


@given(identities)
def test_split_zero_is_sound(ident):
    if isinstance(ident, Equal):
        basis = NilBasis.of(4, ident)
        assert all(entails(basis, z) for z in split_zero(ident))
