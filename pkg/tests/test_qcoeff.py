from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from seminormal_hecke.qcoeff import (
    ONE,
    Q,
    ZERO,
    CyclotomicFactorization,
    CyclotomicFieldElement,
    LaurentPoly,
    NotProductOfCyclotomics,
    PoleAtZeta,
    RationalFunction,
    cyclotomic_poly,
    factor_cyclotomic,
    quantum_factorial,
    quantum_int,
    reduce_mod_cyclotomic,
)

laurent = st.dictionaries(st.integers(-4, 4), st.integers(-6, 6), max_size=4).map(LaurentPoly)
nonzero_laurent = laurent.filter(lambda p: not p.is_zero())
rfs = st.builds(RationalFunction.from_laurent, laurent, nonzero_laurent)
nonzero_rfs = rfs.filter(lambda f: not f.is_zero())


@settings(max_examples=60, deadline=None)
@given(rfs, rfs, rfs)
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == ZERO
    assert a * ONE == a


@settings(max_examples=60, deadline=None)
@given(nonzero_rfs)
def test_inverse(a):
    assert a * a.inverse() == ONE
    assert a / a == ONE


@settings(max_examples=60, deadline=None)
@given(rfs)
def test_json_roundtrip_and_hash(a):
    b = RationalFunction.from_json(a.to_json())
    assert a == b and hash(a) == hash(b)
    assert b.to_json() == a.to_json()


@settings(max_examples=40, deadline=None)
@given(rfs, st.integers(2, 5))
def test_evaluation_is_a_homomorphism(a, x):
    try:
        va = a.evaluate(x)
    except ZeroDivisionError:
        return
    assert (a * a).evaluate(x) == va * va


def test_canonical_form_is_unique():
    # (q^2 - 1)/(q - 1) and q + 1 are the same element
    a = RationalFunction.from_laurent(LaurentPoly({2: 1, 0: -1}), LaurentPoly({1: 1, 0: -1}))
    assert a == Q + 1
    assert a.is_laurent()
    assert RationalFunction.from_laurent(LaurentPoly({0: 2}), LaurentPoly({0: 4})) == RationalFunction.from_fraction(Fraction(1, 2))
    assert (Q.inverse() * Q).to_json() == ONE.to_json()


def test_json_format():
    assert (Q + 3).to_json() == {"shift": 0, "num": [[0, "3"], [1, "1"]], "den": [[0, "1"]]}
    assert Q.inverse().to_json()["shift"] == -1


def test_quantum_integers():
    assert quantum_int(0) == ZERO
    assert quantum_int(1) == ONE
    assert quantum_int(3) == 1 + Q + Q * Q
    assert quantum_int(-2) == -(Q**-2) * quantum_int(2)
    assert quantum_factorial(3) == quantum_int(2) * quantum_int(3)
    for k in range(1, 8):
        assert quantum_int(k).evaluate(1) == k


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == LaurentPoly({1: 1, 0: -1})
    assert cyclotomic_poly(6) == LaurentPoly({2: 1, 1: -1, 0: 1})
    # q^12 - 1 is the product of Phi_d over d | 12
    prod = ONE
    for d in (1, 2, 3, 4, 6, 12):
        prod = prod * RationalFunction.from_laurent(cyclotomic_poly(d))
    assert prod == Q**12 - 1


def test_factor_cyclotomic():
    f = factor_cyclotomic(quantum_int(6) * quantum_int(4) * Q**3 * 5)
    assert f.unit == 5 and f.qpower == 3
    assert f.factors == {2: 2, 3: 1, 4: 1, 6: 1}
    assert f.expand() == quantum_int(6) * quantum_int(4) * Q**3 * 5
    assert CyclotomicFactorization.from_json(f.to_json()) == f
    assert factor_cyclotomic(quantum_int(2)).divides(f)
    with pytest.raises(NotProductOfCyclotomics):
        factor_cyclotomic(Q + 2)


def test_reduce_mod_cyclotomic():
    # [3] vanishes at a primitive cube root of unity, [2] does not
    assert reduce_mod_cyclotomic(quantum_int(3), 3).is_zero()
    assert not reduce_mod_cyclotomic(quantum_int(2), 3).is_zero()
    assert reduce_mod_cyclotomic(quantum_int(6), 2).is_zero()
    with pytest.raises(PoleAtZeta):
        reduce_mod_cyclotomic(quantum_int(4).inverse(), 4)
    # q^-1 reduces to the inverse of q
    z = reduce_mod_cyclotomic(Q, 5)
    assert reduce_mod_cyclotomic(Q.inverse(), 5) == z.inverse()
    assert reduce_mod_cyclotomic(Q**5, 5) == CyclotomicFieldElement.from_int(5, 1)


@settings(max_examples=40, deadline=None)
@given(rfs, rfs, st.sampled_from([2, 3, 4, 5, 6]))
def test_reduction_is_a_ring_map(a, b, e):
    try:
        ra, rb = reduce_mod_cyclotomic(a, e), reduce_mod_cyclotomic(b, e)
    except PoleAtZeta:
        return
    assert reduce_mod_cyclotomic(a + b, e) == ra + rb
    assert reduce_mod_cyclotomic(a * b, e) == ra * rb
