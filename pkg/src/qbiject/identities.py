"""Registry of coefficient identities and the verification harness.

Every identity relates two ways of computing the same coefficient
sequence: multisums, products of infinite Pochhammer symbols divided by
(q; q)_infinity, and exhaustive per-weight counts of the families from
:mod:`qbiject.sets`.  Verification compares the two sides degree by
degree with exact integers.

Entries are tagged with a kind:

* ``series``: both sides are closed-form series; cheap, verified to a
  higher default degree.
* ``enum``: at least one side is an exhaustive enumeration; verified to
  a lower default degree.

Conventions baked into the helpers: counts of an empty family are zero;
the family F at index 0 has the zero series, at index r it is defined
by its product series, and at index r+1 it repeats index r-1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable, Sequence

from qbiject.series import (
    TruncatedSeries,
    multisum,
    MultisumSpec,
    poch_inf,
    triple_product,
)
from qbiject.sets import SetId, count_by_weight

DEFAULT_N_SERIES = 40
DEFAULT_N_ENUM = 25


class Cache:
    """Shared memo for counts and series, keyed by exact parameters."""

    def __init__(self) -> None:
        self._counts: dict[tuple, list[int]] = {}
        self._series: dict[tuple, list[int]] = {}

    def counts(self, family: str, r: int, i: int, n: int) -> list[int]:
        key = (family, r, i, n)
        if key not in self._counts:
            self._counts[key] = count_by_weight(SetId(family, r, i), n)
        return self._counts[key]

    def eta_inv(self, n: int) -> TruncatedSeries:
        key = ("eta_inv", n)
        if key not in self._series:
            self._series[key] = poch_inf(1, 1, n).invert_unit()
        return self._series[key]

    def product(self, a: int, m: int, n: int) -> list[int]:
        """Coefficients of the triple product over (q; q)_infinity."""
        key = ("product", a, m, n)
        if key not in self._series:
            s = triple_product(a, m, n) * self.eta_inv(n)
            self._series[key] = list(s.coeffs)
        return self._series[key]

    def msum(self, form: str, r: int, i: int, n: int) -> list[int]:
        key = ("msum", form, r, i, n)
        if key not in self._series:
            self._series[key] = list(multisum(MultisumSpec(form, r, i), n).coeffs)
        return self._series[key]

    def f_counts(self, i: int, r: int, n: int) -> list[int]:
        """Counting sequence of family F with the index conventions."""
        if i == 0:
            return [0] * (n + 1)
        if i == r + 1:
            i = r - 1
        return self.product(i, 2 * r, n)


Side = Callable[[int, int, int, Cache], list[int]]


@dataclass(frozen=True)
class IdentityEntry:
    key: str
    kind: str  # "series" or "enum"
    description: str
    i_range: Callable[[int], range]
    lhs: Side
    rhs: Side


@dataclass
class VerificationReport:
    key: str
    r: int
    i: int
    n: int
    ok: bool
    mismatch_degree: int | None = None
    lhs_at_mismatch: int | None = None
    rhs_at_mismatch: int | None = None
    lhs: list[int] = field(default_factory=list)
    rhs: list[int] = field(default_factory=list)
    elapsed: float = 0.0


def _shifted(xs: Sequence[int]) -> list[int]:
    """Multiply a coefficient list by q (degree 0 becomes 0)."""
    return [0] + list(xs[:-1])


def _add(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x + y for x, y in zip(a, b)]


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x - y for x, y in zip(a, b)]


def _sum_products(c: Cache, terms, m: int, n: int) -> list[int]:
    out = [0] * (n + 1)
    for a in terms:
        out = _add(out, c.product(a, m, n))
    return out


def _plus_q_times_self(xs: Sequence[int]) -> list[int]:
    return _add(xs, _shifted(xs))


def _entry_table() -> list[IdentityEntry]:
    E = IdentityEntry
    entries = [
        # --- closed series against closed series -------------------------
        E(
            "AG",
            "series",
            "odd-modulus multisum equals the modulus 2r+1 product",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.msum("AG", r, i, n),
            lambda r, i, n, c: c.product(i, 2 * r + 1, n),
        ),
        E(
            "BR",
            "series",
            "even-modulus multisum equals the modulus 2r product",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.msum("B", r, i, n),
            lambda r, i, n, c: c.product(i, 2 * r, n),
        ),
        E(
            "FIJ_SUMPROD",
            "series",
            "(1+q) times the doubled-tail multisum equals a two-product sum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: _plus_q_times_self(c.msum("FIJ", r, i, n)),
            lambda r, i, n, c: _add(
                c.product(i + 1, 2 * r, n), _shifted(c.product(i - 1, 2 * r, n))
            ),
        ),
        E(
            "BR33_FORM",
            "series",
            "subtractive multisum equals a k-sum of odd-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.msum("P", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + k for k in range(i + 1)), 2 * r + 1, n
            ),
        ),
        E(
            "BR35_FORM",
            "series",
            "subtractive even-tail multisum equals a k-sum of even-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.msum("R", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + 2 * k for k in range(i + 1)), 2 * r, n
            ),
        ),
        E(
            "FIJ_FORM",
            "series",
            "shifted subtractive multisum equals a k-sum of even-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.msum("RTILDE", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + 2 * k - 1 for k in range(i + 1)), 2 * r, n
            ),
        ),
        E(
            "AGP_FORM",
            "series",
            "numerator-pruned multisum equals a single odd-modulus product",
            lambda r: range(1, r),
            lambda r, i, n, c: c.msum("AGP", r, i, n),
            lambda r, i, n, c: c.product(r - i, 2 * r + 1, n),
        ),
        E(
            "BP_FORM",
            "series",
            "paired-numerator multisum equals twice an even-modulus product",
            lambda r: range(2, r),
            lambda r, i, n, c: c.msum("BP", r, i, n),
            lambda r, i, n, c: [2 * x for x in c.product(r - i, 2 * r, n)],
        ),
        E(
            "ISAAC_FORM",
            "series",
            "tail-paired multisum equals a single even-modulus product",
            lambda r: range(1, r),
            lambda r, i, n, c: c.msum("ISAAC", r, i, n),
            lambda r, i, n, c: c.product(r - i, 2 * r, n),
        ),
        E(
            "FIJ_FORM2",
            "series",
            "difference-numerator multisum equals a single even-modulus product",
            lambda r: range(1, r),
            lambda r, i, n, c: c.msum("FIJ2", r, i, n),
            lambda r, i, n, c: c.product(r - i - 1, 2 * r, n),
        ),
        E(
            "FIJ_FORM3",
            "series",
            "shifted paired-numerator multisum equals a two-product sum",
            lambda r: range(2, r),
            lambda r, i, n, c: c.msum("FIJ3", r, i, n),
            lambda r, i, n, c: _add(
                c.product(r - i - 1, 2 * r, n), c.product(r - i + 1, 2 * r, n)
            ),
        ),
        # --- enumeration against multisum --------------------------------
        E(
            "AGW",
            "enum",
            "counts of family T equal the odd-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("T", r, i, n),
            lambda r, i, n, c: c.msum("AG", r, i, n),
        ),
        E(
            "BRIW",
            "enum",
            "counts of family U equal the even-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("U", r, i, n),
            lambda r, i, n, c: c.msum("B", r, i, n),
        ),
        E(
            "FIJW",
            "enum",
            "counts of family UT equal the doubled-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("UT", r, i, n),
            lambda r, i, n, c: c.msum("FIJ", r, i, n),
        ),
        # --- classical count equalities -----------------------------------
        E(
            "GORDON_TE",
            "enum",
            "counts of family T equal counts of the odd-modulus congruence family",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("T", r, i, n),
            lambda r, i, n, c: c.counts("E", r, i, n),
        ),
        E(
            "BRESSOUD_UF",
            "enum",
            "counts of family U equal counts of the even-modulus congruence family",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("U", r, i, n),
            lambda r, i, n, c: (
                c.counts("F", r, i, n) if i < r else c.f_counts(i, r, n)
            ),
        ),
        E(
            "KUR_COUNT",
            "enum",
            "two-term recurrence tying counts of UT to the congruence family F",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: _plus_q_times_self(c.counts("UT", r, i, n)),
            lambda r, i, n, c: _add(
                c.f_counts(i + 1, r, n), _shifted(c.f_counts(i - 1, r, n))
            ),
        ),
        E(
            "UTILDE_RR",
            "enum",
            "family UT at the top index coincides with family U one index below",
            lambda r: range(r, r + 1),
            lambda r, i, n, c: c.counts("UT", r, i, n),
            lambda r, i, n, c: c.counts("U", r, i - 1, n),
        ),
        # --- enumeration against products ---------------------------------
        E(
            "AGRI_BIS",
            "enum",
            "counts of family T equal the modulus 2r+1 product",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("T", r, i, n),
            lambda r, i, n, c: c.product(i, 2 * r + 1, n),
        ),
        E(
            "BRI_BIS",
            "enum",
            "counts of family U equal the modulus 2r product",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("U", r, i, n),
            lambda r, i, n, c: c.product(i, 2 * r, n),
        ),
        E(
            "BRI2_BIS",
            "enum",
            "(1+q) times counts of family UT equals a two-product sum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: _plus_q_times_self(c.counts("UT", r, i, n)),
            lambda r, i, n, c: _add(
                c.product(i + 1, 2 * r, n), _shifted(c.product(i - 1, 2 * r, n))
            ),
        ),
        E(
            "BR33_BIS",
            "enum",
            "counts of family A equal a k-sum of odd-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("A", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + k for k in range(i + 1)), 2 * r + 1, n
            ),
        ),
        E(
            "BR35_BIS",
            "enum",
            "counts of family B equal a k-sum of even-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("B", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + 2 * k for k in range(i + 1)), 2 * r, n
            ),
        ),
        E(
            "FIJ_BIS",
            "enum",
            "counts of family BT equal a k-sum of even-modulus products",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("BT", r, i, n),
            lambda r, i, n, c: _sum_products(
                c, (r - i + 2 * k - 1 for k in range(i + 1)), 2 * r, n
            ),
        ),
        E(
            "AGP_BIS",
            "enum",
            "layer counts of family A equal a single odd-modulus product",
            lambda r: range(0, r),
            lambda r, i, n, c: _sub(
                c.counts("A", r, i, n), c.counts("A", r, i - 1, n)
            ),
            lambda r, i, n, c: c.product(r - i, 2 * r + 1, n),
        ),
        E(
            "BP_BIS",
            "enum",
            "two-step layer counts of family B equal twice an even-modulus product",
            lambda r: range(1, r),
            lambda r, i, n, c: _sub(
                c.counts("B", r, i, n), c.counts("B", r, i - 2, n)
            ),
            lambda r, i, n, c: [2 * x for x in c.product(r - i, 2 * r, n)],
        ),
        E(
            "ISAAC_BIS",
            "enum",
            "counts of B minus BT one index below equal an even-modulus product",
            lambda r: range(0, r),
            lambda r, i, n, c: _sub(
                c.counts("B", r, i, n), c.counts("BT", r, i - 1, n)
            ),
            lambda r, i, n, c: c.product(r - i, 2 * r, n),
        ),
        E(
            "ISAACBIS_BIS",
            "enum",
            "counts of BT minus B one index below equal an even-modulus product",
            lambda r: range(0, r),
            lambda r, i, n, c: _sub(
                c.counts("BT", r, i, n), c.counts("B", r, i - 1, n)
            ),
            lambda r, i, n, c: c.product(r - i - 1, 2 * r, n),
        ),
        E(
            "BP_BISBIS",
            "enum",
            "two-step layer counts of family BT equal a two-product sum",
            lambda r: range(1, r),
            lambda r, i, n, c: _sub(
                c.counts("BT", r, i, n), c.counts("BT", r, i - 2, n)
            ),
            lambda r, i, n, c: _add(
                c.product(r - i - 1, 2 * r, n), c.product(r - i + 1, 2 * r, n)
            ),
        ),
        # --- pair-side enumeration against multisum ------------------------
        E(
            "AGRI_TER",
            "enum",
            "pair counts of family Q one index below equal the odd-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("Q", r, i - 1, n),
            lambda r, i, n, c: c.msum("AG", r, i, n),
        ),
        E(
            "BRI_TER",
            "enum",
            "pair counts of family S one index below equal the even-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("S", r, i - 1, n),
            lambda r, i, n, c: c.msum("B", r, i, n),
        ),
        E(
            "BRI2_TER",
            "enum",
            "pair counts of family ST one index below equal the doubled-tail multisum",
            lambda r: range(1, r + 1),
            lambda r, i, n, c: c.counts("ST", r, i - 1, n),
            lambda r, i, n, c: c.msum("FIJ", r, i, n),
        ),
        E(
            "BR33_TER",
            "enum",
            "pair counts of family P equal the subtractive multisum",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("P", r, i, n),
            lambda r, i, n, c: c.msum("P", r, i, n),
        ),
        E(
            "BR35_TER",
            "enum",
            "pair counts of family R equal the subtractive even-tail multisum",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("R", r, i, n),
            lambda r, i, n, c: c.msum("R", r, i, n),
        ),
        E(
            "FIJ_TER",
            "enum",
            "pair counts of family RT equal the shifted subtractive multisum",
            lambda r: range(0, r),
            lambda r, i, n, c: c.counts("RT", r, i, n),
            lambda r, i, n, c: c.msum("RTILDE", r, i, n),
        ),
        E(
            "AGP_TER",
            "enum",
            "layer counts of family P equal the numerator-pruned multisum",
            lambda r: range(1, r),
            lambda r, i, n, c: _sub(
                c.counts("P", r, i, n), c.counts("P", r, i - 1, n)
            ),
            lambda r, i, n, c: c.msum("AGP", r, i, n),
        ),
        E(
            "BP_TER",
            "enum",
            "two-step layer counts of family R equal the paired-numerator multisum",
            lambda r: range(2, r),
            lambda r, i, n, c: _sub(
                c.counts("R", r, i, n), c.counts("R", r, i - 2, n)
            ),
            lambda r, i, n, c: c.msum("BP", r, i, n),
        ),
        E(
            "ISAAC_TER",
            "enum",
            "counts of R minus RT one index below equal the tail-paired multisum",
            lambda r: range(1, r),
            lambda r, i, n, c: _sub(
                c.counts("R", r, i, n), c.counts("RT", r, i - 1, n)
            ),
            lambda r, i, n, c: c.msum("ISAAC", r, i, n),
        ),
        E(
            "FIJ_TER2",
            "enum",
            "counts of RT minus R one index below equal the difference multisum",
            lambda r: range(1, r),
            lambda r, i, n, c: _sub(
                c.counts("RT", r, i, n), c.counts("R", r, i - 1, n)
            ),
            lambda r, i, n, c: c.msum("FIJ2", r, i, n),
        ),
        E(
            "FIJ_TER4",
            "enum",
            "two-step layer counts of family RT equal the shifted paired multisum",
            lambda r: range(2, r),
            lambda r, i, n, c: _sub(
                c.counts("RT", r, i, n), c.counts("RT", r, i - 2, n)
            ),
            lambda r, i, n, c: c.msum("FIJ3", r, i, n),
        ),
    ]
    return entries


_REGISTRY: dict[str, IdentityEntry] | None = None


def registry() -> dict[str, IdentityEntry]:
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = {e.key: e for e in _entry_table()}
    return _REGISTRY


def default_bound(entry: IdentityEntry) -> int:
    return DEFAULT_N_SERIES if entry.kind == "series" else DEFAULT_N_ENUM


def coefficients(
    key: str, side: str, r: int, i: int, n: int, cache: Cache | None = None
) -> list[int]:
    """Coefficient vector of one side of an identity at (r, i), degrees 0..n."""
    entry = registry()[key]
    if i not in entry.i_range(r):
        raise ValueError("index %d not legal for %s at rank %d" % (i, key, r))
    if side not in ("lhs", "rhs"):
        raise ValueError("side must be 'lhs' or 'rhs'")
    cache = cache or Cache()
    fn = entry.lhs if side == "lhs" else entry.rhs
    return fn(r, i, n, cache)


def verify(
    key: str, r: int, i: int, n: int | None = None, cache: Cache | None = None
) -> VerificationReport:
    """Compare both sides of one identity coefficient by coefficient.

    Reports the first mismatching degree (comparison stops there) but
    always carries the full vectors of both sides.
    """
    entry = registry()[key]
    if i not in entry.i_range(r):
        raise ValueError("index %d not legal for %s at rank %d" % (i, key, r))
    if n is None:
        n = default_bound(entry)
    cache = cache or Cache()
    t0 = time.perf_counter()
    lhs = entry.lhs(r, i, n, cache)
    rhs = entry.rhs(r, i, n, cache)
    elapsed = time.perf_counter() - t0
    rep = VerificationReport(key, r, i, n, True, lhs=lhs, rhs=rhs, elapsed=elapsed)
    for d in range(n + 1):
        if lhs[d] != rhs[d]:
            rep.ok = False
            rep.mismatch_degree = d
            rep.lhs_at_mismatch = lhs[d]
            rep.rhs_at_mismatch = rhs[d]
            break
    return rep


def sweep(
    keys: Sequence[str] | None = None,
    r_values: Sequence[int] = (2, 3, 4),
    n_series: int = DEFAULT_N_SERIES,
    n_enum: int = DEFAULT_N_ENUM,
    cache: Cache | None = None,
) -> list[VerificationReport]:
    """Verify every registered identity over all legal (r, i) pairs."""
    reg = registry()
    if keys is None:
        keys = sorted(reg)
    cache = cache or Cache()
    reports = []
    for key in keys:
        entry = reg[key]
        n = n_series if entry.kind == "series" else n_enum
        for r in r_values:
            for i in entry.i_range(r):
                reports.append(verify(key, r, i, n, cache))
    return reports
