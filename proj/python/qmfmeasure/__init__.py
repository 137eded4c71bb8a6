"""Python bindings for the qmfmeasure C++ library.

Polynomials and signals are dicts mapping integer degree to complex
coefficient; words are lists of digits, most significant first.
"""

from ._core import (
    FilterSystem,
    analyze,
    apply_S,
    apply_S_star,
    builtin,
    daubechies,
    load_filters,
    m_word,
    measure_table,
    mu,
    packet_measure_table,
    packet_sweep,
    product_check,
    reconstruction_defect,
    run_cli,
    synthesize,
    validate,
)

__all__ = [
    "FilterSystem",
    "analyze",
    "apply_S",
    "apply_S_star",
    "builtin",
    "daubechies",
    "load_filters",
    "m_word",
    "measure_table",
    "mu",
    "packet_measure_table",
    "packet_sweep",
    "product_check",
    "reconstruction_defect",
    "run_cli",
    "synthesize",
    "validate",
]
