"""Exact combinatorics of gap-constrained partitions.

The package provides:

* ``partitions``: integer partitions in the parts encoding and the
  multiplicity (frequency) encoding, with gap and gap-parity predicates
  computed on both encodings.
* ``sets``: the catalog of frequency-side and pair-side families used
  throughout, with membership tests, exhaustive enumerators and
  per-weight counting.
* ``bijection``: the weight- and length-preserving insertion bijection
  between pairs (staircase, insertion sequence) and gap-constrained
  frequency sequences, with full step traces and invariant checks.
* ``series``: truncated q-series over exact integers (Pochhammer
  products, unit inversion, triple products, multisums).
* ``identities``: a registry of coefficient identities and a
  verification harness.
* ``cli``: a command line front end.
"""

from qbiject.partitions import (
    parts_to_freq,
    freq_to_parts,
    weight,
    length,
    check_gap_condition,
    check_gap_parity_condition,
)
from qbiject.sets import Shape, SetId, mu_of_shape, mu_weight
from qbiject.bijection import lambda_forward, gamma_backward

__all__ = [
    "parts_to_freq",
    "freq_to_parts",
    "weight",
    "length",
    "check_gap_condition",
    "check_gap_parity_condition",
    "Shape",
    "SetId",
    "mu_of_shape",
    "mu_weight",
    "lambda_forward",
    "gamma_backward",
]
