"""Truncated formal power series in q with exact integer coefficients.

Everything is truncated at an inclusive degree bound N: a series stores
the coefficients of q^0 .. q^N as plain Python ints, so there is no
rounding anywhere.  Binary operations truncate to the smaller bound of
the two operands.

The module also builds the standard blocks used by the identity
verifier: Pochhammer products, inversion of unit series, Jacobi triple
products, and the eleven multisum shapes evaluated over staircase
shapes.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence


class TruncatedSeries:
    """Polynomial truncation of a formal power series in q."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], n: int | None = None):
        cs = list(coeffs)
        if n is not None:
            if n < 0:
                raise ValueError("degree bound must be >= 0")
            cs = cs[: n + 1] + [0] * (n + 1 - len(cs))
        if not cs:
            raise ValueError("a truncated series needs at least the q^0 term")
        self.coeffs = tuple(int(c) for c in cs)

    @property
    def bound(self) -> int:
        """Inclusive truncation degree N."""
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, n: int) -> "TruncatedSeries":
        return cls([0], n)

    @classmethod
    def one(cls, n: int) -> "TruncatedSeries":
        return cls([1], n)

    @classmethod
    def monomial(cls, k: int, n: int, c: int = 1) -> "TruncatedSeries":
        """The series c * q^k truncated at degree n (zero if k > n)."""
        if k < 0:
            raise ValueError("monomial exponent must be >= 0")
        cs = [0] * (n + 1)
        if k <= n:
            cs[k] = c
        return cls(cs, n)

    def coefficient(self, k: int) -> int:
        if not 0 <= k <= self.bound:
            raise IndexError("degree %d outside truncation bound %d" % (k, self.bound))
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.bound >= 8 else ""
        return "TruncatedSeries([%s%s], N=%d)" % (head, tail, self.bound)

    def _common(self, other: "TruncatedSeries") -> int:
        return min(self.bound, other.bound)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries(
            [self.coeffs[k] + other.coeffs[k] for k in range(n + 1)]
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        return TruncatedSeries(
            [self.coeffs[k] - other.coeffs[k] for k in range(n + 1)]
        )

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-c for c in self.coeffs])

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        n = self._common(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (n + 1)
        for k, ak in enumerate(a[: n + 1]):
            if ak == 0:
                continue
            for j in range(n + 1 - k):
                bj = b[j]
                if bj:
                    out[k + j] += ak * bj
        return TruncatedSeries(out)

    def scale(self, c: int) -> "TruncatedSeries":
        return TruncatedSeries([c * x for x in self.coeffs])

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by q^k (k may be negative if the low coefficients vanish)."""
        n = self.bound
        if k >= 0:
            return TruncatedSeries([0] * k + list(self.coeffs), n)
        if any(self.coeffs[j] != 0 for j in range(-k)):
            raise ValueError("shift by %d would drop nonzero coefficients" % k)
        return TruncatedSeries(list(self.coeffs[-k:]) + [0] * (-k), n)

    def invert_unit(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires constant coefficient +1 or -1."""
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("constant coefficient must be a unit (+1 or -1)")
        n = self.bound
        a = self.coeffs
        b = [0] * (n + 1)
        b[0] = c0
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                if a[j]:
                    acc += a[j] * b[k - j]
            b[k] = -c0 * acc
        return TruncatedSeries(b)


def poch_inf(offset: int, modulus: int, n: int) -> TruncatedSeries:
    """(q^offset; q^modulus)_infinity truncated at degree n."""
    if offset < 1 or modulus < 1:
        raise ValueError("need offset >= 1 and modulus >= 1")
    out = TruncatedSeries.one(n)
    e = offset
    while e <= n:
        out = out * (TruncatedSeries.one(n) - TruncatedSeries.monomial(e, n))
        e += modulus
    return out


def poch_finite(offset: int, modulus: int, count: int, n: int) -> TruncatedSeries:
    """(q^offset; q^modulus)_count, a product of ``count`` factors."""
    if offset < 1 or modulus < 1 or count < 0:
        raise ValueError("need offset >= 1, modulus >= 1, count >= 0")
    out = TruncatedSeries.one(n)
    for j in range(count):
        e = offset + j * modulus
        if e > n:
            break
        out = out * (TruncatedSeries.one(n) - TruncatedSeries.monomial(e, n))
    return out


def triple_product(a: int, m: int, n: int) -> TruncatedSeries:
    """(q^m; q^m)_inf (q^a; q^m)_inf (q^{m-a}; q^m)_inf truncated at n.

    For a in {0, m} one factor starts at q^0 - 1 = 0, so the product is
    the zero series.
    """
    if m < 1 or a < 0 or a > m:
        raise ValueError("need 0 <= a <= m with m >= 1")
    if a == 0 or a == m:
        return TruncatedSeries.zero(n)
    return poch_inf(m, m, n) * poch_inf(a, m, n) * poch_inf(m - a, m, n)


# ---------------------------------------------------------------------------
# Multisums over staircase shapes.

#: Legal multisum shapes, with the legal index range as (lo, hi) in terms
#: of r.  hi is given as an offset from r.
MULTISUM_FORMS = {
    "AG": (1, 0),
    "B": (1, 0),
    "FIJ": (1, 0),
    "P": (0, -1),
    "R": (0, -1),
    "RTILDE": (0, -1),
    "AGP": (1, -1),
    "BP": (2, -1),
    "ISAAC": (1, -1),
    "FIJ2": (1, -1),
    "FIJ3": (2, -1),
}


@dataclass(frozen=True)
class MultisumSpec:
    """One multisum shape: a form name with its rank r and index i."""

    form: str
    r: int
    i: int

    def __post_init__(self) -> None:
        if self.form not in MULTISUM_FORMS:
            raise ValueError("unknown multisum form %r" % (self.form,))
        if self.r < 2:
            raise ValueError("rank must be >= 2")
        lo, hi = MULTISUM_FORMS[self.form]
        if not lo <= self.i <= self.r + hi:
            raise ValueError(
                "index %d outside legal range [%d, %d] for form %s at rank %d"
                % (self.i, lo, self.r + hi, self.form, self.r)
            )


def staircase_shapes(r: int, budget: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing (s_1, ..., s_{r-1}) with sum of s_k^2 - s_k <= budget."""

    def rec(pos: int, cap: int, rem: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if pos == r - 1:
            yield tuple(acc)
            return
        s = 0
        while s <= cap and s * s - s <= rem:
            acc.append(s)
            yield from rec(pos + 1, s, rem - (s * s - s), acc)
            acc.pop()
            s += 1

    cap0 = 0
    while (cap0 + 1) * (cap0 + 1) - (cap0 + 1) <= budget:
        cap0 += 1
    yield from rec(0, cap0, budget, [])


@lru_cache(maxsize=None)
def _inv_poch(base: int, count: int, n: int) -> TruncatedSeries:
    return poch_finite(base, base, count, n).invert_unit()


def _exponent(spec: MultisumSpec, s: tuple[int, ...]) -> int:
    r, i = spec.r, spec.i
    sq = sum(x * x for x in s)
    last = s[r - 2]
    if spec.form in ("AG", "B"):
        return sq + sum(s[k - 1] for k in range(i, r))
    if spec.form == "FIJ":
        return sq + sum(s[k - 1] for k in range(i, r)) + last
    if spec.form in ("P", "R", "AGP", "BP", "ISAAC", "FIJ2"):
        return sq - sum(s[k - 1] for k in range(1, i + 1))
    if spec.form in ("RTILDE", "FIJ3"):
        return sq - sum(s[k - 1] for k in range(1, i + 1)) + last
    raise AssertionError(spec.form)


def _numerator(spec: MultisumSpec, s: tuple[int, ...], n: int) -> TruncatedSeries | None:
    """Shape-dependent numerator factor, or None when it is just 1."""
    r, i = spec.r, spec.i
    one = TruncatedSeries.one(n)
    if spec.form == "AGP":
        return one - TruncatedSeries.monomial(s[i - 1], n)
    if spec.form in ("BP", "FIJ3"):
        return one - TruncatedSeries.monomial(s[i - 1] + s[i - 2], n)
    if spec.form == "ISAAC":
        return one - TruncatedSeries.monomial(s[i - 1] + s[r - 2], n)
    if spec.form == "FIJ2":
        return TruncatedSeries.monomial(s[r - 2], n) - TruncatedSeries.monomial(
            s[i - 1], n
        )
    return None


def multisum(spec: MultisumSpec, n: int) -> TruncatedSeries:
    """Evaluate one multisum shape, truncated at degree n.

    Every summand has lowest degree at least sum(s_k^2 - s_k), so shapes
    beyond that budget cannot contribute and the sum is finite.
    """
    r = spec.r
    base = 2 if spec.form not in ("AG", "P", "AGP") else 1
    total = TruncatedSeries.zero(n)
    for s in staircase_shapes(r, n):
        e = _exponent(spec, s)
        if e > n:
            continue
        term = TruncatedSeries.monomial(e, n)
        num = _numerator(spec, s, n)
        if num is not None:
            term = term * num
        for j in range(1, r - 1):
            nxt = s[j] if j < r - 1 else 0
            term = term * _inv_poch(1, s[j - 1] - nxt, n)
        term = term * _inv_poch(base, s[r - 2], n)
        total = total + term
    return total


# ---------------------------------------------------------------------------
# Coefficient dumps.


def to_csv(series: TruncatedSeries) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["degree", "coefficient"])
    for k, c in enumerate(series.coeffs):
        w.writerow([k, str(c)])
    return buf.getvalue()


def from_csv(text: str) -> TruncatedSeries:
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or rows[0] != ["degree", "coefficient"]:
        raise ValueError("missing degree,coefficient header")
    coeffs = []
    for k, (deg, c) in enumerate(rows[1:]):
        if int(deg) != k:
            raise ValueError("degrees must be contiguous from 0")
        coeffs.append(int(c))
    return TruncatedSeries(coeffs)


def to_json_array(series: TruncatedSeries) -> str:
    return json.dumps(
        [{"degree": k, "value": str(c)} for k, c in enumerate(series.coeffs)]
    )


def from_json_array(text: str) -> TruncatedSeries:
    data = json.loads(text)
    coeffs = []
    for k, item in enumerate(data):
        if item["degree"] != k:
            raise ValueError("degrees must be contiguous from 0")
        coeffs.append(int(item["value"]))
    return TruncatedSeries(coeffs)
