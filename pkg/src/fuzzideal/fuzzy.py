"""Finite-valued fuzzy sets and fuzzy ideals with exact rational values.

The canonical representation of a fuzzy ideal is its cut chain
``[(C1, v1), ..., (Cm, vm)]`` with strictly increasing ideals ending at
the whole ring and strictly decreasing values; evaluation returns the
value of the least cut containing the element.  This makes the cut
criterion structural and works uniformly for table rings and Z.

No floating point anywhere: all membership values are Fractions in [0,1].
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import sympy

from .crisp import CrispIdeal, ideal_generate, is_ideal, whole_ideal, zero_ideal
from .errors import (BackendError, ConstantIdealError, InvalidFuzzyIdealError)
from .rings import Ring

ZERO = Fraction(0)
ONE = Fraction(1)


def _check_value(v):
    v = Fraction(v)
    if not (ZERO <= v <= ONE):
        raise InvalidFuzzyIdealError(f"membership value {v} outside [0,1]")
    return v


@dataclass(frozen=True)
class FuzzyIdeal:
    ring: Ring
    chain: tuple[tuple[CrispIdeal, Fraction], ...]

    def __call__(self, x) -> Fraction:
        for ideal, value in self.chain:
            if ideal.contains(x):
                return value
        raise AssertionError("chain must end at the whole ring")

    @property
    def values(self) -> tuple[Fraction, ...]:
        return tuple(v for _, v in self.chain)

    @property
    def ideals(self) -> tuple[CrispIdeal, ...]:
        return tuple(c for c, _ in self.chain)

    @property
    def top(self) -> Fraction:
        """The value at 0, the maximum of the image."""
        return self.chain[0][1]

    @property
    def bottom(self) -> Fraction:
        """The value at 1, the minimum of the image."""
        return self.chain[-1][1]

    @property
    def is_constant(self) -> bool:
        return len(self.chain) == 1

    def require_non_constant(self):
        if self.is_constant:
            raise ConstantIdealError("predicate requires a non-constant fuzzy ideal")

    def to_map(self) -> dict:
        if not self.ring.is_table:
            raise BackendError("total maps require a table ring")
        return {x: self(x) for x in range(self.ring.size)}

    def le(self, other: "FuzzyIdeal") -> bool:
        """Pointwise order F <= G."""
        if self.ring is not other.ring:
            raise ValueError("fuzzy ideals over different rings")
        return all(self(x) <= other(x) for x in probe_elements(self, other))

    def __repr__(self):
        from .dsl import format_fuzzy
        return f"FuzzyIdeal({format_fuzzy(self)})"


@dataclass(frozen=True)
class FuzzySet:
    """Arbitrary finite-image fuzzy set over a table ring (total array)."""
    ring: Ring
    table: tuple[Fraction, ...]

    def __call__(self, x) -> Fraction:
        return self.table[x]


def probe_elements(*fuzzies):
    """Finite element set distinguishing all value strata of the arguments.

    For a table ring this is every element.  Over Z the value of x only
    depends on which chain ideals nZ contain it, i.e. on gcd(x, L) with
    L the lcm of the nonzero generators, so 0 plus the divisors of L
    realize every membership profile.
    """
    ring = fuzzies[0].ring
    if ring.is_table:
        return range(ring.size)
    L = 1
    for f in fuzzies:
        for ideal, _ in f.chain:
            if ideal.gen:
                L = L * ideal.gen // gcd(L, ideal.gen)
    return [0] + [int(d) for d in sympy.divisors(L)]


# --------------------------------------------------------------------------
# Constructors
# --------------------------------------------------------------------------

def fuzzy_from_chain(R: Ring, chain) -> FuzzyIdeal:
    """Canonical constructor: validates the chain invariants."""
    if not chain:
        raise InvalidFuzzyIdealError("empty chain")
    cleaned = []
    prev_ideal, prev_value = None, None
    for ideal, value in chain:
        value = _check_value(value)
        if ideal.ring is not R:
            raise InvalidFuzzyIdealError("chain ideal over a different ring")
        if prev_ideal is not None:
            if not (prev_ideal.subset(ideal) and prev_ideal != ideal):
                raise InvalidFuzzyIdealError(
                    "chain ideals must be strictly increasing",
                    witness={"level": len(cleaned)})
            if not value < prev_value:
                raise InvalidFuzzyIdealError(
                    "chain values must be strictly decreasing",
                    witness={"level": len(cleaned)})
        cleaned.append((ideal, value))
        prev_ideal, prev_value = ideal, value
    if not prev_ideal.is_whole:
        raise InvalidFuzzyIdealError("chain must end at the whole ring")
    return FuzzyIdeal(R, tuple(cleaned))


def fuzzy_from_map(R: Ring, assignment) -> FuzzyIdeal:
    """Validate a total value map and convert it to canonical chain form.

    Both the pointwise axioms and the cut criterion are checked; they
    must agree, and axiom failures report a witnessing pair.
    """
    if not R.is_table:
        raise BackendError("fuzzy_from_map requires a table ring")
    table = [_check_value(assignment[x]) for x in range(R.size)]

    witness = _axiom_witness(R, table)
    chain_or_none = _chain_from_table(R, table)
    if witness is not None:
        assert chain_or_none is None, "axiom check and cut criterion disagree"
        x, y, axiom = witness
        raise InvalidFuzzyIdealError(
            f"not a fuzzy ideal: {axiom} fails at "
            f"x={R.label(x)}, y={R.label(y)}",
            witness={"x": R.label(x), "y": R.label(y), "axiom": axiom})
    assert chain_or_none is not None, "axiom check and cut criterion disagree"
    return FuzzyIdeal(R, chain_or_none)


def _axiom_witness(R, table):
    for x in range(R.size):
        for y in range(R.size):
            if table[R.sub(x, y)] < min(table[x], table[y]):
                return (x, y, "I(x-y) >= I(x) ^ I(y)")
            if table[R.mul(x, y)] < max(table[x], table[y]):
                return (x, y, "I(xy) >= I(x) v I(y)")
    return None


def _chain_from_table(R, table):
    values = sorted(set(table), reverse=True)
    chain = []
    cut = set()
    for v in values:
        cut |= {x for x in range(R.size) if table[x] == v}
        if not is_ideal(R, frozenset(cut)):
            return None
        chain.append((CrispIdeal(R, elems=frozenset(cut)), v))
    return tuple(chain)


def zero_type(R: Ring, t, s) -> FuzzyIdeal:
    """Value t at 0 and s elsewhere, s < t."""
    t, s = _check_value(t), _check_value(s)
    if not s < t:
        raise InvalidFuzzyIdealError("zero-type requires s < t")
    return FuzzyIdeal(R, ((zero_ideal(R), t), (whole_ideal(R), s)))


def characteristic(I: CrispIdeal, top=ONE, bottom=ZERO) -> FuzzyIdeal:
    """Two-valued fuzzy ideal: ``top`` on I, ``bottom`` outside."""
    R = I.ring
    if I.is_whole:
        return FuzzyIdeal(R, ((I, _check_value(top)),))
    return fuzzy_from_chain(R, [(I, top), (whole_ideal(R), bottom)])


def constant(R: Ring, v) -> FuzzyIdeal:
    return FuzzyIdeal(R, ((whole_ideal(R), _check_value(v)),))


def singleton(R: Ring, x, t) -> FuzzySet:
    """The fuzzy point x_t (t > 0)."""
    t = _check_value(t)
    if t == ZERO:
        raise InvalidFuzzyIdealError("singleton value must be positive")
    if not R.is_table:
        raise BackendError("singletons as fuzzy sets require a table ring")
    return FuzzySet(R, tuple(t if e == x else ZERO for e in range(R.size)))


def to_set(F: FuzzyIdeal) -> FuzzySet:
    return FuzzySet(F.ring, tuple(F(x) for x in range(F.ring.size)))


# --------------------------------------------------------------------------
# Cuts
# --------------------------------------------------------------------------

def cut(F: FuzzyIdeal, alpha) -> CrispIdeal:
    """The alpha-cut; defined for alpha <= F(0)."""
    alpha = Fraction(alpha)
    if alpha > F.top:
        raise InvalidFuzzyIdealError(f"cut at {alpha} above the top value is empty")
    out = None
    for ideal, value in F.chain:  # values decrease: keep the last cut >= alpha
        if value < alpha:
            break
        out = ideal
    return out


def star_ideal(F: FuzzyIdeal) -> CrispIdeal:
    """The top cut (at F(0))."""
    return F.chain[0][0]


def strict_support(F: FuzzyIdeal) -> CrispIdeal:
    """{x : F(x) > F(1)}, the largest cut below the whole ring."""
    F.require_non_constant()
    return F.chain[-2][0]


# --------------------------------------------------------------------------
# Operations
# --------------------------------------------------------------------------

def compose(A: FuzzySet, B: FuzzySet) -> FuzzySet:
    """(A o B)(x) = sup over x = ab of A(a) ^ B(b).

    With unity every element factors trivially, so the sup is over a
    nonempty set.  Unsupported over Z (unbounded factorization search).
    """
    R = A.ring
    if not R.is_table:
        raise BackendError("compose requires a table ring")
    out = [ZERO] * R.size
    for a in range(R.size):
        va = A(a)
        for b in range(R.size):
            v = min(va, B(b))
            x = R.mul(a, b)
            if v > out[x]:
                out[x] = v
    return FuzzySet(R, tuple(out))


def generate(F: FuzzySet) -> FuzzyIdeal:
    """Least fuzzy ideal above F: value sup{a in im(F) : x in <F_a>}."""
    R = F.ring
    values = sorted(set(F.table), reverse=True)
    chain = []
    prev = None
    for v in values:
        if v == ZERO:
            break
        level = {x for x in range(R.size) if F(x) >= v}
        ideal = ideal_generate(R, level)
        if prev is None or prev != ideal:
            chain.append((ideal, v))
            prev = ideal
    if prev is None or not prev.is_whole:
        chain.append((whole_ideal(R), ZERO))
    return FuzzyIdeal(R, tuple(chain))


def fuzzy_product(I: FuzzyIdeal, J: FuzzyIdeal) -> FuzzyIdeal:
    """IJ = <I o J>, the fuzzy ideal generated by the composite."""
    return generate(compose(to_set(I), to_set(J)))


def intersect(family) -> FuzzyIdeal:
    """Pointwise infimum of a nonempty family, renormalized to a chain."""
    family = list(family)
    if not family:
        raise ValueError("empty family")
    R = family[0].ring
    if any(f.ring is not R for f in family):
        raise ValueError("mixed rings in intersection")
    out = family[0]
    for f in family[1:]:
        out = _intersect2(out, f)
    return out


def _intersect2(F: FuzzyIdeal, G: FuzzyIdeal) -> FuzzyIdeal:
    R = F.ring
    top = min(F.top, G.top)
    candidates = sorted({v for v in F.values + G.values if v <= top},
                        reverse=True)
    chain = []
    prev = None
    for alpha in candidates:
        c = cut(F, alpha).intersect(cut(G, alpha))
        if prev is None or prev != c:
            chain.append((c, alpha))
            prev = c
    assert prev.is_whole
    return FuzzyIdeal(R, tuple(chain))


def value_equivalent(I: FuzzyIdeal, J: FuzzyIdeal) -> bool:
    """Same strict order comparisons everywhere = identical cut sequences."""
    if I.ring is not J.ring:
        raise ValueError("fuzzy ideals over different rings")
    return I.ideals == J.ideals
