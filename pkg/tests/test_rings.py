"""Ring construction: canonical element order, axiom checks, quotients."""
import pytest

from fuzzideal import (RingConstructionError, build_ring, parse_ring,
                       quotient_ring)
from fuzzideal.crisp import ideal_generate
from fuzzideal.dsl import parse_ring_spec
from fuzzideal.rings import Backend, Ring, SpecZn, _verify


def test_zn_canonical_order():
    R = parse_ring("Zn(6)")
    assert R.size == 6
    assert list(R.labels) == [str(i) for i in range(6)]
    assert R.zero == 0 and R.one == 1
    assert R.add(4, 5) == 3 and R.mul(4, 5) == 2 and R.neg(2) == 4


def test_mat_row_major_order():
    R = parse_ring("Mat(2, Zn(2))")
    assert R.size == 16
    # first element all zeros, last all ones, row-major lexicographic
    assert R.labels[0] == "[[0,0],[0,0]]"
    assert R.labels[-1] == "[[1,1],[1,1]]"
    assert R.labels[R.one] == "[[1,0],[0,1]]"


def test_tri_upper_triangular():
    R = parse_ring("Tri(2, Zn(2))")
    assert R.size == 8
    # below-diagonal entry is forced to zero in every element
    for lab in R.labels:
        rows = lab  # "[[a,b],[c,d]]"
        assert lab[8] == "0", lab  # the (1,0) entry


def test_prod_componentwise():
    R = parse_ring("Prod(Zn(2), Zn(3))")
    assert R.size == 6
    assert R.commutative
    one = R.one
    assert R.labels[one] == "(1, 1)"


@pytest.mark.parametrize("n", range(2, 25))
def test_quotient_of_z_matches_zn(n):
    Q = parse_ring(f"Quot(Z, <{n}>)")
    Zn = parse_ring(f"Zn({n})")
    assert Q.same_tables(Zn)
    assert Q.project(n + 3) == 3 % n


def test_mat_commutative_iff_k1():
    assert parse_ring("Mat(1, Zn(4))").commutative
    assert not parse_ring("Mat(2, Zn(2))").commutative
    assert not parse_ring("Tri(2, Zn(2))").commutative


def test_axiom_verification_rejects_broken_table():
    R = parse_ring("Zn(6)")
    bad_mul = [list(row) for row in R._mul]
    bad_mul[2][3] = 5  # breaks associativity/distributivity
    broken = Ring(Backend.TABLE, SpecZn(6), size=6, add=R._add,
                  mul=tuple(tuple(r) for r in bad_mul), neg=R._neg,
                  zero=0, one=1, labels=R.labels, elems=R.elems)
    with pytest.raises(RingConstructionError):
        _verify(broken)


def test_invalid_specs():
    with pytest.raises(RingConstructionError):
        build_ring(parse_ring_spec("Mat(2, Z)"))
    with pytest.raises(RingConstructionError):
        build_ring(parse_ring_spec("Quot(Z, <0>)"))  # Z/0Z infinite
    with pytest.raises(RingConstructionError):
        build_ring(parse_ring_spec("Quot(Zn(6), <*>)"))  # zero ring


def test_quotient_projection_is_homomorphism():
    R = parse_ring("Zn(12)")
    I = ideal_generate(R, {4})
    Q = quotient_ring(R, I)
    assert Q.size == 4
    for a in range(R.size):
        for b in range(R.size):
            assert Q.project(R.add(a, b)) == Q.add(Q.project(a), Q.project(b))
            assert Q.project(R.mul(a, b)) == Q.mul(Q.project(a), Q.project(b))


def test_quotient_of_matrix_ring():
    R = parse_ring("Mat(2, Zn(2))")
    Q = quotient_ring(R, ideal_generate(R, {R.zero}))
    assert Q.size == R.size  # quotient by {0} is a copy
    assert Q.project(5) == 5
