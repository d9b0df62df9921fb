import itertools

import pytest

from cuntzfock.correspondence import (
    Block,
    block_decompose,
    enumerate_grade,
    forward,
    forward_operational,
    grade_table_tsv,
    inverse,
    particle_number,
)
from cuntzfock.ladder import BosonMonomial, FermionSubset
from cuntzfock.radical import ONE, sqrt_of_nat


def bm(*pairs):
    return BosonMonomial(tuple(pairs))


def fs(*elems):
    return FermionSubset(tuple(elems))


def test_block_decompose():
    assert block_decompose(fs(1, 2, 4)) == [Block(1, 2), Block(4, 1)]
    assert block_decompose(fs(7)) == [Block(7, 1)]
    assert block_decompose(fs(3, 4, 5, 9, 10)) == [Block(3, 3), Block(9, 2)]
    assert block_decompose(fs()) == []


def test_forward_single_mode():
    for n in range(1, 7):
        pair = forward(bm((n, 1)))
        assert pair.fermion == fs(n)
        assert pair.coeff == ONE


def test_forward_known_values():
    pair = forward(bm((3, 2)))
    assert pair.fermion == fs(3, 4) and pair.coeff == sqrt_of_nat(2)
    pair = forward(bm((2, 2), (5, 1)))
    assert pair.fermion == fs(2, 3, 7) and pair.coeff == sqrt_of_nat(2)
    # a run of simple modes spreads out with gaps of two
    for n in range(1, 4):
        for l in range(1, 5):
            M = BosonMonomial.from_modes(range(n, n + l))
            assert forward(M).fermion == fs(*(n + 2 * j for j in range(l)))
    # vacuum
    pair = forward(bm())
    assert pair.fermion == fs() and pair.coeff == ONE


def test_forward_operational_matches():
    for modes in itertools.combinations_with_replacement(range(1, 5), 4):
        M = BosonMonomial.from_modes(modes)
        assert forward_operational(M) == forward(M)


def test_inverse_examples():
    pair = inverse(fs(1, 2, 4))
    assert pair.boson == bm((1, 2), (2, 1))
    assert pair.coeff == ONE / sqrt_of_nat(2)
    assert inverse(fs(7)).boson == bm((7, 1))
    assert inverse(fs(1, 3, 5)).boson == bm((1, 1), (2, 1), (3, 1))


def test_round_trip_subsets():
    for r in range(1, 9):
        for elements in itertools.combinations(range(1, 9), r):
            S = fs(*elements)
            pair = inverse(S)
            back = forward(pair.boson)
            assert back.fermion == S
            assert back.coeff * pair.coeff == ONE


def test_round_trip_monomials():
    for n in range(5):
        for modes in itertools.combinations_with_replacement(range(1, 5), n):
            M = BosonMonomial.from_modes(modes)
            pair = forward(M)
            assert particle_number(pair.fermion) == particle_number(M)
            if n:
                assert inverse(pair.fermion).boson == M


def test_particle_number():
    assert particle_number(bm((1, 2), (3, 1))) == 3
    assert particle_number(fs(2, 5, 6)) == 3
    assert particle_number(bm()) == 0
    with pytest.raises(TypeError):
        particle_number([1, 2])


def test_enumerate_grade():
    pairs = enumerate_grade(1, 3)
    assert [(p.boson, p.fermion) for p in pairs] == [
        (bm((1, 1)), fs(1)),
        (bm((2, 1)), fs(2)),
        (bm((3, 1)), fs(3)),
    ]
    pairs = enumerate_grade(0, 5)
    assert len(pairs) == 1 and pairs[0].fermion == fs()
    pairs = enumerate_grade(2, 2)
    assert [(p.boson, p.fermion, p.coeff) for p in pairs] == [
        (bm((1, 2)), fs(1, 2), sqrt_of_nat(2)),
        (bm((1, 1), (2, 1)), fs(1, 3), ONE),
        (bm((2, 2)), fs(2, 3), sqrt_of_nat(2)),
    ]
    images = [p.fermion for p in enumerate_grade(3, 3)]
    assert len(images) == 10 and len(set(images)) == 10


def test_coefficient_is_sqrt_of_integer():
    import math

    for modes in itertools.combinations_with_replacement(range(1, 5), 5):
        M = BosonMonomial.from_modes(modes)
        c = forward(M).coeff
        expected = math.prod(math.factorial(k) for _, k in M.factors)
        assert (c * c).rational_value() == expected


def test_tsv_rendering():
    text = grade_table_tsv(enumerate_grade(1, 2))
    lines = text.strip().split("\n")
    assert lines[0] == "boson\tfermion\tcoeff\tcoeff_decimal"
    assert lines[1] == "1\t1\t1\t1"


def test_pair_json():
    pair = forward(bm((1, 2)))
    data = pair.to_json()
    assert data["fermion"] == [1, 2]
    assert data["boson"] == {"factors": [{"mode": 1, "mult": 2}]}
    assert data["coeff"]["terms"] == [{"radicand": 2, "num": 1, "den": 1}]
