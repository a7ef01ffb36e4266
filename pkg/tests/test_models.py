import numpy as np
import pytest
from hypothesis import given, strategies as st

from varlat.commwords import CommWord, Equal, ZeroEq
from varlat.errors import CapExceeded, NoZeroElement, NotAssociative
from varlat.config import Caps
from varlat.models import (
    CayleyTable, check_associative, counterexample_in_table, cyclic_group_table,
    cyclic_monoid_table, left_zero_table, quotient_to_table, satisfies_in_table, semilattice_table,
)
from varlat.nilcalc import NilBasis, free_quotient

X, Y = 0, 1
x = CommWord.power(X, 1)


def xp(n):
    return CommWord.power(X, n)


def test_associativity_examples():
    assert check_associative(semilattice_table())
    assert check_associative(left_zero_table())
    bad = np.array([[1, 0], [0, 0]])  # (0*0)*1 = 0 but 0*(0*1) = 1
    assert not check_associative(bad)
    with pytest.raises(NotAssociative):
        CayleyTable(bad)


def test_satisfies_examples():
    assert satisfies_in_table(semilattice_table(), Equal(xp(2), x))
    t = quotient_to_table(free_quotient(NilBasis.of(3, ZeroEq(CommWord.of({X: 2, Y: 1}))), 1))
    assert t.n == 3
    assert not satisfies_in_table(t, ZeroEq(xp(2)))
    assert satisfies_in_table(cyclic_group_table(2), Equal(xp(3), x))


def test_quotient_tables():
    assert quotient_to_table(free_quotient(NilBasis.of(2), 2)).n == 4
    assert quotient_to_table(free_quotient(NilBasis.of(1), 1)).n == 1
    with pytest.raises(CapExceeded):
        quotient_to_table(free_quotient(NilBasis.of(2), 2), Caps(max_carrier=3))


def test_cyclic_monoid_tables():
    assert cyclic_monoid_table(0).n == 1
    t1 = cyclic_monoid_table(1)
    assert t1.n == 2 and t1.table[1, 1] == 1
    t2 = cyclic_monoid_table(2)
    assert t2.n == 3 and t2.table[2, 1] == 2
    for m in range(1, 6):
        t = cyclic_monoid_table(m)
        assert satisfies_in_table(t, Equal(xp(m), xp(m + 1)))
        if m > 1:  # x^0 is not a word
            assert not satisfies_in_table(t, Equal(xp(m - 1), xp(m)))


def test_counterexample_and_zero():
    cex = counterexample_in_table(cyclic_group_table(3), Equal(x, xp(2)))
    assert cex is not None and cex != (0,)
    with pytest.raises(NoZeroElement):
        counterexample_in_table(cyclic_group_table(2), ZeroEq(x))
    assert semilattice_table().zero == 0
    assert cyclic_group_table(2).zero is None


def test_text_round_trip():
    t = cyclic_monoid_table(3)
    again = CayleyTable.loads(t.dumps())
    assert again == t and again.zero == t.zero
    assert "# zero = 3" in t.dumps()


@given(st.integers(1, 6))
def test_group_tables_satisfy_their_exponent(d):
    t = cyclic_group_table(d)
    assert satisfies_in_table(t, Equal(x, xp(d + 1)))
    assert satisfies_in_table(t, Equal(CommWord.of({X: 1, Y: 1}), CommWord.of({Y: 1, X: 1})))
