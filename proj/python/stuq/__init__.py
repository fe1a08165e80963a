"""Three-qubit analysis of four-charge extremal black holes.

Thin wrapper over the compiled core. Charge order is (q0, p1, p2, p3)
everywhere, matching the CLI.
"""

from stuq._core import (
    analyze,
    analyze_json,
    cayley_hyperdet,
    classify_family,
    delta,
    entropy,
    enumerate_dictionaries,
    run_batch,
    schmidt_decompose,
    three_tangle,
    verify_swap,
)

__all__ = [
    "analyze",
    "analyze_json",
    "cayley_hyperdet",
    "classify_family",
    "delta",
    "entropy",
    "enumerate_dictionaries",
    "run_batch",
    "schmidt_decompose",
    "three_tangle",
    "verify_swap",
]
