"""fuzzideal: primeness of fuzzy ideals over finite rings and Z.

Exact-arithmetic decision procedures for every D-style fuzzy primeness
and semiprimeness notion, the fuzzy prime radical, and machine checks of
the implication diagrams and characterization theorems relating them.
"""

from .corpus import DEFAULT_PALETTE, build_corpus, enumerate_fuzzy_ideals
from .crisp import (CrispIdeal, crisp_radical, enumerate_ideals,
                    ideal_generate, is_completely_prime_ideal, is_prime_ideal,
                    is_semiprime_ideal, minimal_primes, prime_avoiding,
                    principal_ideal, whole_ideal, zero_ideal)
from .dsl import (ParseError, format, format_element, format_fuzzy,
                  format_ring_spec, parse_element, parse_fuzzy_spec,
                  parse_ring, parse_ring_spec, to_json)
from .errors import (BackendError, ConstantIdealError, FuzzidealError,
                     InvalidFuzzyIdealError, NotProperIdealError,
                     ResourceLimitError, RingConstructionError,
                     TheoremViolationError)
from .fuzzy import (FuzzyIdeal, FuzzySet, characteristic, compose, constant,
                    cut, fuzzy_from_chain, fuzzy_from_map, fuzzy_product,
                    generate, intersect, singleton, star_ideal,
                    strict_support, to_set, value_equivalent, zero_type)
from .primeness import (charprime_equivalence_check, classify,
                        count_minimal_prime_classes, diagram_check, is_D0,
                        is_D0prime, is_D1, is_D2, is_D3, is_D4, is_prime_new,
                        is_SD1, is_SD2, is_SD4, is_SD0prime,
                        is_semiprime_new, minimal_prime_below, value_grid)
from .radical import (frad, frad_intersection_check, radical_properties_check,
                      radical_report, semiprime_intersection_check,
                      witness_prime_excluding)
from .rings import Ring, build_ring, quotient_ring

__version__ = "0.1.0"
