import numpy as np
import pytest
from hypothesis import given, strategies as st

from varlat import latcheck as LC
from varlat import varieties as V
from varlat.errors import CapExceeded, NonCanonical, NotALattice
from varlat.varieties import Composite

K = LC.ElementKind
# element order in pentagon() and diamond(): 0, a, b, c, 1
BOT, A, B, C, TOP = range(5)


def bowtie():
    leq = np.eye(4, dtype=bool)
    leq[0, 2] = leq[0, 3] = leq[1, 2] = leq[1, 3] = True
    return leq


def test_build_examples():
    assert LC.chain(2).n == 2
    assert LC.pentagon().n == 5
    with pytest.raises(NotALattice) as info:
        LC.build(bowtie())
    assert info.value.witness == (0, 1)


def test_build_rejects_non_orders():
    with pytest.raises(NotALattice):
        LC.build(np.zeros((2, 2), dtype=bool))
    with pytest.raises(NotALattice):
        LC.build(np.ones((2, 2), dtype=bool))
    nontransitive = np.eye(3, dtype=bool)
    nontransitive[0, 1] = nontransitive[1, 2] = True
    with pytest.raises(NotALattice):
        LC.build(nontransitive)


def test_pentagon_by_hand():
    n5 = LC.pentagon()
    assert not LC.is_distributive(n5)
    assert not LC.is_modular(n5)
    # c v a = 1, so (c v a) ^ b = b, while (c ^ b) v a = a
    assert not LC.has_property(n5, C, K.MODULAR)
    assert LC.has_property(n5, A, K.MODULAR)
    assert LC.has_property(n5, B, K.MODULAR)
    assert LC.elements_with(n5, K.NEUTRAL) == [BOT, TOP]
    w = LC.find_witness(n5, C, K.UPPER_MODULAR)
    assert w is None  # nothing below c but 0, and 0 passes trivially
    assert LC.has_property(n5, C, K.DISTRIBUTIVE) and LC.has_property(n5, C, K.CODISTRIBUTIVE)


def test_diamond_by_hand():
    m3 = LC.diamond()
    assert LC.is_modular(m3) and not LC.is_distributive(m3)
    for atom in (A, B, C):
        y, z = LC.find_witness(m3, atom, K.DISTRIBUTIVE)
        j, m = m3.join, m3.meet
        assert j[atom, m[y, z]] != m[j[atom, y], j[atom, z]]
        assert not LC.has_property(m3, atom, K.NEUTRAL)
    assert LC.elements_with(m3, K.DISTRIBUTIVE) == [BOT, TOP]


def test_witness_order_is_lexicographic():
    m3 = LC.diamond()
    j, m = m3.join, m3.meet
    first = LC.find_witness(m3, A, K.DISTRIBUTIVE)
    for y in range(5):
        for z in range(5):
            if (y, z) < first:
                assert j[A, m[y, z]] == m[j[A, y], j[A, z]]


@pytest.mark.parametrize("n", [1, 2, 3, 5])
def test_chains_satisfy_everything(n):
    c = LC.chain(n)
    for x in range(n):
        for k in K:
            assert LC.find_witness(c, x, k) is None


def test_bottom_is_neutral_everywhere():
    for n in range(1, 7):
        for lat in LC.all_lattices(n):
            assert LC.has_property(lat, lat.bottom, K.NEUTRAL)
            assert LC.has_property(lat, lat.top, K.NEUTRAL)


def test_dual_and_product():
    n5 = LC.pentagon()
    assert LC.dual(LC.dual(n5)) == n5
    sq = LC.product(LC.chain(2), LC.chain(2))
    assert sq.n == 4 and LC.is_distributive(sq)
    assert len(sq.covers()) == 4
    with pytest.raises(IndexError):
        LC.find_witness(n5, 9, K.MODULAR)


def test_product_is_componentwise():
    l1, l2 = LC.pentagon(), LC.chain(2)
    prod = LC.product(l1, l2)
    for i in range(l1.n):
        for j in range(l2.n):
            for k in K:
                expected = LC.has_property(l1, i, k) and LC.has_property(l2, j, k)
                assert LC.has_property(prod, i * l2.n + j, k) == expected


def test_isomorphism():
    n5 = LC.pentagon()
    phi = LC.find_isomorphism(LC.dual(n5), n5)
    assert phi is not None
    assert LC.find_isomorphism(n5, LC.diamond()) is None
    assert LC.find_isomorphism(n5, LC.chain(4)) is None


def test_text_and_dot():
    n5 = LC.pentagon()
    again = LC.loads_leq(LC.dumps_leq(n5))
    assert again == n5
    dot = LC.to_dot(n5)
    assert dot.startswith("digraph") and dot.count("->") == 5
    assert 'label="c"' in dot


def test_generate_sublattice_examples():
    one = LC.generate_sublattice([Composite()])
    assert one.n == 1
    sq = LC.generate_sublattice([Composite(2, 0, V.TRIVIAL), Composite(3, 0, V.TRIVIAL)])
    assert sq.n == 4
    assert sorted(v.d for v in sq.labels) == [1, 2, 3, 6]
    assert LC.find_isomorphism(sq, LC.product(LC.chain(2), LC.chain(2))) is not None
    lat = LC.generate_sublattice([V.SL, Composite(1, 2, V.TRIVIAL), Composite(1, 0, V.CatalogElement("K", 3))])
    assert V.equal(lat.labels[lat.bottom], Composite())
    assert lat.n <= V.DEFAULT_CAPS.lattice_cap


def test_generate_sublattice_errors():
    with pytest.raises(CapExceeded):
        LC.generate_sublattice([Composite(d, 0, V.TRIVIAL) for d in (2, 3, 5)], cap=4)
    with pytest.raises(NonCanonical):
        LC.generate_sublattice([Composite(2, 1, V.I_TOP)])


def test_generate_sublattice_dedups_semantically():
    from varlat.nilcalc import NilBasis
    from varlat.commwords import CommWord, ZeroEq

    based = Composite(1, 0, NilBasis.of(3, ZeroEq(CommWord.of({0: 2, 1: 1}))))
    lat = LC.generate_sublattice([based, Composite(1, 0, V.K_TOP)])
    assert lat.n == 1


implications = [
    (K.NEUTRAL, K.STANDARD), (K.NEUTRAL, K.COSTANDARD),
    (K.STANDARD, K.MODULAR), (K.COSTANDARD, K.MODULAR),
    (K.STANDARD, K.DISTRIBUTIVE), (K.COSTANDARD, K.CODISTRIBUTIVE),
    (K.DISTRIBUTIVE, K.LOWER_MODULAR), (K.CODISTRIBUTIVE, K.UPPER_MODULAR),
]


@given(st.integers(0, 2**32 - 1))
def test_random_lattices_obey_implications(seed):
    lat = LC.random_lattice(np.random.default_rng(seed), max_n=8)
    dl = LC.dual(lat)
    for x in range(lat.n):
        holds = {k: LC.has_property(lat, x, k) for k in K}
        for a, b in implications:
            assert not holds[a] or holds[b]
        for k in K:
            assert holds[k] == LC.has_property(dl, x, k.dual)
        assert holds[K.NEUTRAL] == LC.is_neutral_median(lat, x)


@given(st.integers(0, 2**32 - 1))
def test_random_lattice_is_valid_and_seeded(seed):
    a = LC.random_lattice(np.random.default_rng(seed), max_n=8)
    b = LC.random_lattice(np.random.default_rng(seed), max_n=8)
    assert a == b and 1 <= a.n <= 8
    assert a.join[a.bottom, a.top] == a.top
