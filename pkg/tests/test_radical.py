import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cuntzfock.radical import (
    ONE,
    ZERO,
    RadicalScalar,
    _square_split,
    promote,
    sqrt_of_nat,
)

SQUAREFREE_100 = [d for d in range(1, 101) if _square_split(d)[0] == 1]


def test_like_terms_merge():
    r2 = sqrt_of_nat(2)
    assert r2 + r2 == RadicalScalar({2: 2})


def test_additive_inverse():
    r2 = sqrt_of_nat(2)
    assert r2 + (-r2) == ZERO
    assert (r2 - r2).is_zero()


def test_distinct_radicands_stay_separate():
    assert ONE + sqrt_of_nat(2) == RadicalScalar({1: 1, 2: 1})


def test_mul_perfect_square():
    assert sqrt_of_nat(2) * sqrt_of_nat(2) == promote(2)


def test_mul_coprime_radicands():
    assert sqrt_of_nat(2) * sqrt_of_nat(3) == sqrt_of_nat(6)


def test_mul_extracts_square_part():
    # sqrt(6)*sqrt(2) = 2*sqrt(3): check by squaring both sides in integers
    prod = sqrt_of_nat(6) * sqrt_of_nat(2)
    claimed = RadicalScalar({3: 2})
    assert (prod * prod).rational_value() == 6 * 2
    assert (claimed * claimed).rational_value() == 2 * 2 * 3
    assert prod.to_float() > 0 and claimed.to_float() > 0
    assert prod == claimed


def test_sqrt_of_nat_examples():
    assert sqrt_of_nat(8) == RadicalScalar({2: 2})
    assert sqrt_of_nat(1) == ONE
    assert sqrt_of_nat(math.factorial(3)) == RadicalScalar({6: 1})


def test_sqrt_rejects_nonpositive():
    with pytest.raises(ValueError):
        sqrt_of_nat(0)


def test_canonical_rejects_non_squarefree_radicand():
    with pytest.raises(ValueError):
        RadicalScalar({4: 1})


def test_zero_coefficients_dropped():
    assert RadicalScalar({2: 0, 3: 1}) == sqrt_of_nat(3)


def test_division_by_rational_and_radical():
    x = sqrt_of_nat(2) + promote(3)
    assert (x / 2) * 2 == x
    assert (x / sqrt_of_nat(2)) * sqrt_of_nat(2) == x
    assert ONE / sqrt_of_nat(2) == RadicalScalar({2: Fraction(1, 2)})
    with pytest.raises(ValueError):
        x / (ONE + sqrt_of_nat(2))


def test_json_round_trip():
    x = RadicalScalar({1: Fraction(-3, 4), 10: Fraction(7, 2)})
    data = x.to_json()
    assert data == {
        "terms": [
            {"radicand": 1, "num": -3, "den": 4},
            {"radicand": 10, "num": 7, "den": 2},
        ]
    }
    assert RadicalScalar.from_json(data) == x


def test_render():
    assert (promote(1) + sqrt_of_nat(2)).render() == "1 + sqrt(2)"
    assert (-sqrt_of_nat(2)).render() == "-sqrt(2)"
    assert ZERO.render() == "0"
    assert RadicalScalar({3: 2}).render() == "2*sqrt(3)"


def _scalars(max_terms=3, coeff_bound=10**6):
    return st.builds(
        lambda pairs: RadicalScalar(
            {d: Fraction(n, m) for d, n, m in pairs}
        ),
        st.lists(
            st.tuples(
                st.sampled_from(SQUAREFREE_100),
                st.integers(-coeff_bound, coeff_bound),
                st.integers(1, coeff_bound),
            ),
            max_size=max_terms,
        ),
    )


@settings(max_examples=200)
@given(_scalars(), _scalars(), _scalars())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)


@settings(max_examples=200)
@given(_scalars())
def test_canonical_invariants(a):
    for d, q in a.terms.items():
        assert d >= 1 and _square_split(d)[0] == 1
        assert q != 0


def test_to_float_matches_termwise_double():
    rng = random.Random(3)
    for _ in range(500):
        terms = {
            d: Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**6))
            for d in rng.sample(SQUAREFREE_100, rng.randint(1, 3))
        }
        x = RadicalScalar(terms)
        direct = sum(float(q) * math.sqrt(d) for d, q in terms.items() if q)
        assert abs(x.to_float() - direct) <= 1e-12 * max(1.0, abs(direct))


def test_sqrt_square_law_small():
    for n in range(1, 2001):
        assert sqrt_of_nat(n) * sqrt_of_nat(n) == promote(n)
