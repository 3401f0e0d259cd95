import pytest

from fuzzideal import build_corpus, parse_ring

TABLE_SPECS = ("Zn(6)", "Zn(12)", "Mat(2, Zn(2))", "Tri(2, Zn(2))",
               "Prod(Zn(2), Zn(3))")
Z_BOUND = 12


@pytest.fixture(scope="session")
def rings():
    """Session-shared ring objects (their internal caches are the point)."""
    out = {spec: parse_ring(spec) for spec in TABLE_SPECS}
    out["Z"] = parse_ring("Z")
    return out


@pytest.fixture(scope="session")
def corpora(rings):
    """Exhaustive default-palette corpora over every table ring."""
    return {spec: build_corpus(rings[spec]) for spec in TABLE_SPECS}


@pytest.fixture(scope="session")
def z_corpus(rings):
    return build_corpus(rings["Z"], bound=Z_BOUND)
