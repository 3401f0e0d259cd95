"""Crisp ideal lattice, primeness oracles, radical, prime-avoiding."""
import itertools

import pytest
import sympy

from fuzzideal import (CrispIdeal, crisp_radical, enumerate_ideals,
                       ideal_generate, is_completely_prime_ideal,
                       is_prime_ideal, is_semiprime_ideal, minimal_primes,
                       parse_element, parse_ring, prime_avoiding,
                       whole_ideal, zero_ideal)
from fuzzideal.crisp import (completely_prime_witness, is_ideal, prime_witness,
                             semiprime_witness)
from fuzzideal.errors import NotProperIdealError, ResourceLimitError


@pytest.mark.parametrize("spec", ["Zn(6)", "Zn(8)", "Tri(2, Zn(2))",
                                  "Prod(Zn(2), Zn(3))"])
def test_lattice_matches_subset_oracle(spec, rings):
    """Every subset of a ring of size <= 8 that passes the axiom check is
    in the enumerated lattice, and vice versa."""
    R = rings.get(spec) or parse_ring(spec)
    assert R.size <= 8
    oracle = set()
    for r in range(1, R.size + 1):
        for combo in itertools.combinations(range(R.size), r):
            subset = frozenset(combo)
            if is_ideal(R, subset):
                oracle.add(subset)
    enumerated = {I.elems for I in enumerate_ideals(R)}
    assert enumerated == oracle


def test_zn6_lattice(rings):
    R = rings["Zn(6)"]
    ideals = enumerate_ideals(R)
    assert [sorted(I.elems) for I in ideals] == \
        [[0], [0, 3], [0, 2, 4], [0, 1, 2, 3, 4, 5]]


def test_z_ideal_arithmetic(rings):
    Z = rings["Z"]
    a = CrispIdeal(Z, gen=4)
    b = CrispIdeal(Z, gen=6)
    assert a.intersect(b).gen == 12  # lcm
    assert a.join(b).gen == 2        # gcd
    assert CrispIdeal(Z, gen=8).subset(a)
    assert not a.subset(CrispIdeal(Z, gen=8))
    assert zero_ideal(Z).subset(a)
    assert ideal_generate(Z, {6, -4}).gen == 2
    assert ideal_generate(Z, set()).gen == 0


@pytest.mark.parametrize("n", range(2, 60))
def test_z_primeness_oracles(rings, n):
    Z = rings["Z"]
    I = CrispIdeal(Z, gen=n)
    assert is_prime_ideal(Z, I) == sympy.isprime(n)
    assert is_completely_prime_ideal(Z, I) == sympy.isprime(n)
    squarefree = all(e == 1 for e in sympy.factorint(n).values())
    assert is_semiprime_ideal(Z, I) == squarefree
    w = semiprime_witness(Z, I)
    if w is not None:
        assert (w * w) % n == 0 and w % n != 0
    assert crisp_radical(Z, I).gen == sympy.prod(sympy.primefactors(n))


def test_zero_ideal_of_z_is_prime(rings):
    Z = rings["Z"]
    assert is_prime_ideal(Z, zero_ideal(Z))
    assert is_semiprime_ideal(Z, zero_ideal(Z))


def test_matrix_zero_ideal_prime_not_completely_prime(rings):
    """The zero ideal of a full matrix ring is prime, but E12^2 = 0
    certifies it is not completely prime."""
    R = rings["Mat(2, Zn(2))"]
    zero = zero_ideal(R)
    assert is_prime_ideal(R, zero)
    assert not is_completely_prime_ideal(R, zero)
    e12 = parse_element(R, "[[0,1],[0,0]]")
    assert R.mul(e12, e12) == R.zero
    x, y = completely_prime_witness(R, zero)
    assert R.mul(x, y) == R.zero and x != R.zero and y != R.zero


def test_completely_prime_implies_prime(rings):
    for spec, R in rings.items():
        if not R.is_table:
            continue
        for I in enumerate_ideals(R):
            if I.is_whole:
                continue
            if is_completely_prime_ideal(R, I):
                assert is_prime_ideal(R, I), spec


def test_prime_iff_no_ideal_product_inside(rings):
    """(*) ideal-product primeness agrees with (***) elementwise primeness."""
    for spec in ("Zn(6)", "Zn(12)", "Mat(2, Zn(2))", "Tri(2, Zn(2))",
                 "Prod(Zn(2), Zn(3))"):
        R = rings[spec]
        lattice = enumerate_ideals(R)
        for P in lattice:
            if P.is_whole:
                continue
            product_form = True
            for I, J in itertools.product(lattice, repeat=2):
                if I.subset(P) or J.subset(P):
                    continue
                prod = ideal_generate(
                    R, {R.mul(a, b) for a in I.elems for b in J.elems})
                if prod.subset(P):
                    product_form = False
                    break
            assert product_form == is_prime_ideal(R, P), (spec, P)


def test_radical_is_smallest_semiprime_above(rings):
    for spec in ("Zn(6)", "Zn(12)", "Tri(2, Zn(2))"):
        R = rings[spec]
        lattice = enumerate_ideals(R)
        for I in lattice:
            if I.is_whole:
                continue
            rad = crisp_radical(R, I)
            assert I.subset(rad) and is_semiprime_ideal(R, rad)
            for J in lattice:
                if J.is_whole or not I.subset(J):
                    continue
                if is_semiprime_ideal(R, J):
                    assert rad.subset(J)


def test_whole_ring_rejected():
    R = parse_ring("Zn(6)")
    with pytest.raises(NotProperIdealError):
        is_prime_ideal(R, whole_ideal(R))
    assert crisp_radical(R, whole_ideal(R)).is_whole


def test_minimal_primes_zn6(rings):
    R = rings["Zn(6)"]
    gens = sorted(min(P.elems - {0}) for P in minimal_primes(R))
    assert gens == [2, 3]


def test_prime_avoiding_postconditions(rings):
    for spec in ("Zn(6)", "Zn(12)", "Mat(2, Zn(2))", "Tri(2, Zn(2))"):
        R = rings[spec]
        for P in enumerate_ideals(R):
            if P.is_whole or not is_semiprime_ideal(R, P):
                continue
            for x in range(R.size):
                if P.contains(x):
                    continue
                M = prime_avoiding(R, P, x)
                assert is_prime_ideal(R, M)
                assert P.subset(M) and not M.contains(x)


def test_prime_avoiding_over_z(rings):
    Z = rings["Z"]
    M = prime_avoiding(Z, CrispIdeal(Z, gen=6), 4)
    assert M.gen == 3  # smallest prime factor of 6 not dividing 4
    M0 = prime_avoiding(Z, zero_ideal(Z), 6)
    assert M0.gen == 5  # smallest prime not dividing 6


def test_z_enumeration_requires_bound(rings):
    with pytest.raises(ResourceLimitError):
        enumerate_ideals(rings["Z"])
    assert [I.gen for I in enumerate_ideals(rings["Z"], 5)] == [0, 1, 2, 3, 4, 5]


def test_prime_witness_revalidates(rings):
    R = rings["Zn(12)"]
    I = ideal_generate(R, {4})
    w = prime_witness(R, I)
    assert w is not None
    x, y = w
    assert not I.contains(x) and not I.contains(y)
    assert all(I.contains(R.mul(R.mul(x, r), y)) for r in range(R.size))
