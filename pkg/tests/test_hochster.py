import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from irredlab import hochster as hs
from irredlab.fields import F2, F3, QQ
from irredlab.hochster import (
    ONE, Cut, FiniteChain, MonoidAlgebra, Pair, RationalLine, RingElement, monoid_mul,
)

QLINE = RationalLine()
CHAIN2 = MonoidAlgebra(QQ, FiniteChain(2))


# -- index sets ------------------------------------------------------------------


def test_gapfree():
    assert QLINE.is_gapfree and not FiniteChain(3).is_gapfree
    z = QLINE.between(Fraction(1, 3), Fraction(1, 2))
    assert Fraction(1, 3) < z < Fraction(1, 2)
    assert FiniteChain(3).between(0, 1) is None
    assert FiniteChain(3).between(0, 2) == 1


def test_parse_index():
    assert hs.parse_index("chain:5") == FiniteChain(5)
    assert hs.parse_index("rationals") == QLINE
    with pytest.raises(ValueError):
        hs.parse_index("reals")
    with pytest.raises(ValueError):
        FiniteChain(0)


# -- monoid ---------------------------------------------------------------------


def test_monoid_mul_cases():
    assert monoid_mul(Pair(0, 2), Pair(1, 3)) == Pair(0, 2)
    assert monoid_mul(Pair(1, 3), Pair(0, 2)) == Pair(0, 2)
    assert monoid_mul(Pair(4, 2), Pair(4, 3)) == Pair(4, 5)
    assert monoid_mul(ONE, Pair(3, 7)) == Pair(3, 7)
    assert monoid_mul(ONE, ONE) is ONE
    with pytest.raises(ValueError):
        Pair(0, 0)


@pytest.mark.parametrize("index", [FiniteChain(4), QLINE], ids=lambda i: i.name)
def test_monoid_axioms_exhaustive(index):
    win = hs.monoid_window(index, width=4, max_level=3)
    for a, b in itertools.product(win, repeat=2):
        assert monoid_mul(a, b) == monoid_mul(b, a)
    for a, b, c in itertools.product(win, repeat=3):
        assert monoid_mul(monoid_mul(a, b), c) == monoid_mul(a, monoid_mul(b, c))


monoid_elems = st.one_of(
    st.just(ONE),
    st.builds(Pair, st.fractions(max_denominator=20), st.integers(1, 50)),
)


@settings(max_examples=300)
@given(monoid_elems, monoid_elems, monoid_elems)
def test_monoid_axioms_random(a, b, c):
    assert monoid_mul(a, b) == monoid_mul(b, a)
    assert monoid_mul(monoid_mul(a, b), c) == monoid_mul(a, monoid_mul(b, c))


def test_monoid_power_formula():
    for x, m, n in itertools.product(range(3), range(1, 5), range(1, 5)):
        acc = ONE
        for _ in range(n):
            acc = monoid_mul(acc, Pair(x, m))
        assert acc == hs.monoid_pow(Pair(x, m), n) == Pair(x, m * n)


@pytest.mark.parametrize("index", [FiniteChain(5), QLINE], ids=lambda i: i.name)
def test_monoid_properties(index):
    rep = hs.monoid_property_witnesses(index)
    assert rep.torsionfree and rep.aperiodic
    assert not rep.cancellable
    a, b, c = rep.cancellation_witness
    assert a != b and monoid_mul(a, c) == monoid_mul(b, c)
    assert rep.one_cancellable and rep.associative and rep.commutative


def test_noncancellation_witness_explicit():
    x, y = 0, 1
    assert monoid_mul(Pair(x, 1), Pair(y, 1)) == Pair(x, 1) == monoid_mul(Pair(x, 1), Pair(y, 2))
    assert Pair(y, 1) != Pair(y, 2)


def test_monoid_properties_need_two_points():
    with pytest.raises(ValueError):
        hs.monoid_property_witnesses(FiniteChain(1))


# -- ring arithmetic -------------------------------------------------------------


def test_zero_divisor_example():
    assert (CHAIN2.e(0) * (1 - CHAIN2.e(1))).is_zero()


def test_square_example():
    r = CHAIN2.e(0) + CHAIN2.e(1)
    # (0,1)(0,1) = (0,2), (0,1)(1,1) = (1,1)(0,1) = (0,1), (1,1)(1,1) = (1,2)
    want = CHAIN2.element({Pair(0, 2): 1, Pair(0, 1): 2, Pair(1, 2): 1})
    assert r * r == want
    assert r * CHAIN2.one == r


@pytest.mark.parametrize("field", [QQ, F2, F3], ids=str)
@pytest.mark.parametrize("index", [FiniteChain(5), QLINE], ids=lambda i: i.name)
def test_ring_axioms_random(field, index):
    alg = MonoidAlgebra(field, index)
    rng = random.Random(11)
    for _ in range(150):
        r, s, t = (alg.random(rng, max_terms=4) for _ in range(3))
        assert r * s == s * r
        assert (r * s) * t == r * (s * t)
        assert r * (s + t) == r * s + r * t
        assert r + s == s + r
        assert (r - r).is_zero()


def test_no_zero_coefficients_stored():
    alg = MonoidAlgebra(F2, FiniteChain(3))
    r = alg.e(0) + alg.e(0)
    assert r.terms == {}
    assert alg.element({Pair(1, 1): 0}).is_zero()


def test_ring_element_json_round_trip():
    rng = random.Random(3)
    for field, index in itertools.product([QQ, F2], [FiniteChain(5), QLINE]):
        alg = MonoidAlgebra(field, index)
        for _ in range(20):
            r = alg.random(rng)
            data = json.loads(json.dumps(r.to_json()))
            assert RingElement.from_json(data) == r
    r = MonoidAlgebra(QQ, FiniteChain(2)).e(1, 3) * Fraction(1, 2) + 5
    assert r.to_json()["terms"] == [[None, "5"], [[1, 3], "1/2"]]


# -- reducedness -----------------------------------------------------------------


def test_leading_data_examples():
    assert hs.leading_data(CHAIN2.e(0) + CHAIN2.e(1)) == hs.LeadingData(1, 1, 1)
    assert hs.leading_data(CHAIN2.scalar(5)) is None
    r = 2 * CHAIN2.e(0, 3) + CHAIN2.e(1, 2)
    assert hs.leading_data(r) == hs.LeadingData(3, 0, 2)


def test_reducedness_examples():
    r = CHAIN2.e(0)
    cert = hs.reducedness_witness(r)
    assert r * r == CHAIN2.e(0, 2) and hs.certificate_valid(cert)
    r = CHAIN2.e(0) + CHAIN2.e(1)
    cert = hs.reducedness_witness(r)
    assert cert.square_term == Pair(1, 2) and cert.square_coeff == 1
    with pytest.raises(hs.InBaseField):
        hs.reducedness_witness(CHAIN2.one)


def test_idempotent_examples():
    assert hs.idempotent_check(CHAIN2.zero)
    assert hs.idempotent_check(CHAIN2.one)
    assert not hs.idempotent_check(CHAIN2.e(1))


@pytest.mark.parametrize("field", [QQ, F2], ids=str)
@pytest.mark.parametrize("index", [FiniteChain(5), QLINE], ids=lambda i: i.name)
def test_reduced_and_no_idempotents_random(field, index):
    alg = MonoidAlgebra(field, index)
    rng = random.Random(2024)
    for _ in range(1000):
        r = alg.random(rng)
        if r.in_base_field():
            assert hs.idempotent_check(r) == (r in (alg.zero, alg.one))
            continue
        cert = hs.reducedness_witness(r)
        sq = r * r
        assert hs.certificate_valid(cert)
        assert not sq.is_zero() and sq != r
        assert not hs.idempotent_check(r)


def test_no_idempotents_among_small_f2_elements():
    # every F2-combination of a small set of basis elements
    alg = MonoidAlgebra(F2, FiniteChain(2))
    basis = [ONE] + [Pair(x, m) for x in range(2) for m in range(1, 3)]
    for bits in range(1 << len(basis)):
        r = alg.element({u: 1 for i, u in enumerate(basis) if bits >> i & 1})
        assert hs.idempotent_check(r) == (r in (alg.zero, alg.one))


# -- cuts -----------------------------------------------------------------------


def test_cut_parse():
    assert Cut.parse("sqrt2").kind == "gap"
    assert Cut.parse("lowerEmpty") == Cut.lower_empty()
    assert Cut.parse("upperEmpty") == Cut.upper_empty()
    c = Cut.parse("at:1/2:upper")
    assert c.z == Fraction(1, 2) and c.side == "upper"
    assert Cut.parse("between:1:2") == Cut.between(1)
    for bad in ("at:1", "between:1:3", "nowhere", "at:0:middle"):
        with pytest.raises(ValueError):
            Cut.parse(bad)


def test_gap_rejected_on_chain():
    with pytest.raises(ValueError):
        hs.cut_evaluation(Cut.sqrt2(), MonoidAlgebra(QQ, FiniteChain(3)))
    with pytest.raises(ValueError):
        hs.cut_evaluation(Cut.between(2), MonoidAlgebra(QQ, FiniteChain(3)))


def test_sqrt2_cut_is_a_partition():
    cut = Cut.sqrt2()
    for q in hs.sqrt2_neighbours(8):
        assert cut.in_lower(q) == (q * q < 2)
    pts = QLINE.window()
    lower = [x for x in pts if cut.in_lower(x)]
    upper = [x for x in pts if not cut.in_lower(x)]
    assert max(lower) < min(upper)


def test_sqrt2_evaluation():
    alg = MonoidAlgebra(QQ, QLINE)
    ev = hs.cut_evaluation(Cut.sqrt2(), alg)
    assert ev.stalk.tag == "TrivialField"
    assert ev(alg.e(1, 5)).is_zero()
    assert ev(alg.e(2, 3)) == ev.codomain.constant(1)


def test_single_pivot_evaluation():
    alg = MonoidAlgebra(QQ, QLINE)
    ev = hs.cut_evaluation(Cut.at(0, "upper"), alg)
    assert ev.stalk.tag == "LocalizedPolynomial" and ev.pivots == (0,)
    for m in range(1, 5):
        assert ev(alg.e(0, m)) == ev.codomain.monomial(m)


def test_double_pivot_evaluation():
    alg = MonoidAlgebra(QQ, FiniteChain(2))
    ev = hs.cut_evaluation(Cut.between(0), alg)
    assert ev.stalk.tag == "DoublePivot" and ev.pivots == (0, 1)
    C = ev.codomain
    a, b = C.monomial(1, 0), C.monomial(0, 1)
    assert ev(alg.e(0)) == a and ev(alg.e(1)) == b
    assert (a * (b - C.constant(1))).is_zero()
    assert ev(alg.e(0) * (1 - alg.e(1))).is_zero()
    x, y = hs.zero_divisor_pair(ev)
    assert not x.is_zero() and not y.is_zero() and (x * y).is_zero()
    assert not C.is_integral


@pytest.mark.parametrize(
    "index,cut,tag",
    [
        (QLINE, Cut.lower_empty(), "TrivialField"),
        (QLINE, Cut.upper_empty(), "TrivialField"),
        (QLINE, Cut.at(Fraction(1, 3), "lower"), "LocalizedPolynomial"),
        (QLINE, Cut.sqrt2(), "TrivialField"),
        (FiniteChain(3), Cut.between(0), "DoublePivot"),
        (FiniteChain(3), Cut.lower_empty(), "LocalizedPolynomial"),
        (FiniteChain(3), Cut.upper_empty(), "LocalizedPolynomial"),
        (FiniteChain(1), Cut.at(0, "lower"), "LocalizedPolynomial"),
    ],
)
def test_stalk_classify(index, cut, tag):
    assert hs.stalk_classify(cut, index).tag == tag


def test_stalk_pivots():
    assert hs.stalk_classify(Cut.at(Fraction(1, 3), "lower"), QLINE).pivots == (Fraction(1, 3),)
    assert hs.stalk_classify(Cut.between(0), FiniteChain(3)).pivots == (0, 1)


def test_rational_cuts_never_double_pivot():
    rng = random.Random(5)
    for _ in range(500):
        cut = hs.random_cut(QLINE, rng)
        assert hs.stalk_classify(cut, QLINE).tag != "DoublePivot"
        assert hs.cut_evaluation(cut, MonoidAlgebra(QQ, QLINE)).codomain.is_integral


@pytest.mark.parametrize("n", [2, 3, 5])
def test_chains_have_double_pivot(n):
    chain = FiniteChain(n)
    tags = [hs.stalk_classify(Cut.between(i), chain).tag for i in range(n - 1)]
    assert tags == ["DoublePivot"] * (n - 1)


CUT_CASES = [
    (QLINE, Cut.sqrt2()),
    (QLINE, Cut.lower_empty()),
    (QLINE, Cut.at(Fraction(1, 2), "lower")),
    (QLINE, Cut.at(-1, "upper")),
    (FiniteChain(5), Cut.between(2)),
    (FiniteChain(5), Cut.lower_empty()),
    (FiniteChain(5), Cut.upper_empty()),
]


def _points(index, ev):
    return sorted(set(index.window(8)) | set(ev.pivots) | set(hs.sqrt2_neighbours(3) if index.is_gapfree else ()))


@pytest.mark.parametrize("index,cut", CUT_CASES, ids=lambda v: getattr(v, "label", None) or getattr(v, "name", None))
@pytest.mark.parametrize("field", [QQ, F2], ids=str)
def test_evaluation_is_homomorphism(index, cut, field):
    alg = MonoidAlgebra(field, index)
    ev = hs.cut_evaluation(cut, alg)
    pts = _points(index, ev)
    # on basis pairs first, then on random elements
    win = [ONE] + [Pair(x, m) for x in pts for m in range(1, 4)]
    for u, v in itertools.product(win, repeat=2):
        assert ev.image_of_basis(monoid_mul(u, v)) == ev.image_of_basis(u) * ev.image_of_basis(v)
    rng = random.Random(99)
    for _ in range(500):
        r, s = alg.random(rng, points=pts), alg.random(rng, points=pts)
        assert ev(r + s) == ev(r) + ev(s)
        assert ev(r * s) == ev(r) * ev(s)
    assert ev(alg.one) == ev.codomain.constant(1)


@pytest.mark.parametrize("index,cut", CUT_CASES, ids=lambda v: getattr(v, "label", None) or getattr(v, "name", None))
def test_exhibited_prime(index, cut):
    alg = MonoidAlgebra(QQ, index)
    ev = hs.cut_evaluation(cut, alg)
    pts = _points(index, ev)
    # the prime induces exactly the given cut
    assert ev.exhibited_cut(pts) == {x: cut.in_lower(x) for x in pts}
    assert not ev.prime_contains(alg.one)
    rng = random.Random(4)
    for _ in range(300):
        r, s = alg.random(rng, points=pts, max_terms=3), alg.random(rng, points=pts, max_terms=3)
        if ev.prime_contains(r):
            assert ev.prime_contains(r * s)
            if ev.prime_contains(s):
                assert ev.prime_contains(r + s)
        if ev.prime_contains(r * s):
            assert ev.prime_contains(r) or ev.prime_contains(s)
