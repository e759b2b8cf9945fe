"""Catalog of the partition families the bijection connects.

Frequency-side families (members are normalized frequency sequences),
all at rank r >= 2 with window sums f_u + f_{u+1}:

* ``A``  (0 <= i <= r-1): f_0 <= i and every window sums to <= r-1.
* ``B``  (0 <= i <= r-1): A plus, for every saturated window (sum equal
  to r-1), the weighted sum u*f_u + (u+1)*f_{u+1} is congruent to
  r-1-i mod 2.
* ``BT`` (0 <= i <= r-1): like B with parity r-i mod 2.
* ``T``  (1 <= i <= r): f_0 = 0, f_1 <= i-1, windows at u >= 1 sum to
  <= r-1.
* ``U``  (1 <= i <= r): T plus parity i-1 mod 2 on saturated windows at
  u >= 1.
* ``UT`` (1 <= i <= r): like U with parity i mod 2.
* ``E``  (1 <= i <= r): partitions with no part congruent to 0, i or
  -i mod 2r+1 (no zero parts).
* ``F``  (1 <= i <= r-1 for membership): same with modulus 2r.

Index conventions: i = -1 for A/B/BT and i = 0 for T/U/UT denote empty
families; F at i = 0 is empty, F at i = r+1 coincides with F at i = r-1,
and F at i = r has no membership predicate (its counting sequence is
defined only through a product series; see ``qbiject.identities``).

Pair-side families (members are (Shape, insertion sequence) pairs).  A
shape is a non-increasing tuple (s_1, ..., s_{r-1}) of non-negative
integers; it encodes a staircase partition mu whose frequency sequence
has (f_{2u}, f_{2u+1}) = (j, 0) exactly when s_{j+1} <= u < s_j (with
s_0 infinite and s_r = 0).  An insertion sequence has s_1 entries split
into segments: segment j occupies indices s_{j+1} <= t < s_j and is
non-decreasing read left to right.  The constraint "entries of segment
j are at least b" is imposed per nonempty segment.

* ``P``  (0 <= i <= r-1): segment j entries >= max(j-i, 0).
* ``Q``  (0 <= i <= r-1): segment j entries >= j + max(j-i, 0).
* ``R``  (0 <= i <= r-1): P plus all entries of segment r-1 congruent
  to r-1-i mod 2.
* ``RT`` (0 <= i <= r-1): P with parity r-i mod 2 on segment r-1.
* ``S``  (0 <= i <= r-1): Q with parity i mod 2 on segment r-1.
* ``ST`` (0 <= i <= r-1): Q with parity i-1 mod 2 on segment r-1.

i = -1 denotes the empty family on the pair side as well.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from qbiject.partitions import FreqSeq, normalize_freq, weight

FREQ_FAMILIES = ("A", "B", "BT", "T", "U", "UT", "E", "F")
PAIR_FAMILIES = ("P", "Q", "R", "RT", "S", "ST")

#: Hard cap on enumeration weight, to keep exhaustive walks bounded.
MAX_ENUMERATION_WEIGHT = 80


class CapacityError(RuntimeError):
    """Raised when an enumeration request exceeds the configured cap."""


@dataclass(frozen=True)
class Shape:
    """A staircase shape: rank r and the tuple (s_1, ..., s_{r-1})."""

    r: int
    s: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.r < 2:
            raise ValueError("rank must be >= 2")
        if len(self.s) != self.r - 1:
            raise ValueError("shape needs exactly r-1 entries")
        if any(x < 0 for x in self.s):
            raise ValueError("shape entries must be >= 0")
        if any(self.s[k] < self.s[k + 1] for k in range(len(self.s) - 1)):
            raise ValueError("shape entries must be non-increasing")

    @property
    def s1(self) -> int:
        return self.s[0]

    def s_at(self, j: int) -> int:
        """s_j with the conventions s_0 = infinity (unused) and s_r = 0."""
        if j == self.r:
            return 0
        return self.s[j - 1]

    def segments(self) -> list[tuple[int, int, int]]:
        """(j, start, stop) index ranges, one per segment, j = r-1 .. 1."""
        out = []
        for j in range(self.r - 1, 0, -1):
            out.append((j, self.s_at(j + 1), self.s_at(j)))
        return out


def mu_of_shape(shape: Shape) -> FreqSeq:
    """Frequency sequence of the staircase partition of a shape."""
    f = [0] * (2 * shape.s1)
    for j, start, stop in shape.segments():
        for u in range(start, stop):
            f[2 * u] = j
    return normalize_freq(f)


def mu_weight(shape: Shape) -> int:
    """Weight of the staircase partition: sum of s_k^2 - s_k."""
    return sum(x * x - x for x in shape.s)


def is_insertion_sequence(shape: Shape, lam: Sequence[int]) -> bool:
    """True if lam has s_1 non-negative entries, non-decreasing per segment."""
    if len(lam) != shape.s1 or any(x < 0 for x in lam):
        return False
    for _, start, stop in shape.segments():
        for t in range(start, stop - 1):
            if lam[t] > lam[t + 1]:
                return False
    return True


def pair_weight(shape: Shape, lam: Sequence[int]) -> int:
    return mu_weight(shape) + sum(lam)


# ---------------------------------------------------------------------------
# Set identifiers and membership.


@dataclass(frozen=True)
class SetId:
    """One family instance: family name, rank r and index i."""

    family: str
    r: int
    i: int

    def __post_init__(self) -> None:
        fam, r, i = self.family, self.r, self.i
        if r < 2:
            raise ValueError("rank must be >= 2")
        if fam in ("A", "B", "BT") or fam in PAIR_FAMILIES:
            lo, hi = -1, r - 1
        elif fam in ("T", "U", "UT"):
            lo, hi = 0, r
        elif fam == "E":
            lo, hi = 1, r
        elif fam == "F":
            lo, hi = 0, r + 1
        else:
            raise ValueError("unknown family %r" % (fam,))
        if not lo <= i <= hi:
            raise ValueError(
                "index %d outside legal range [%d, %d] for %s at rank %d"
                % (i, lo, hi, fam, r)
            )

    @property
    def is_pair_side(self) -> bool:
        return self.family in PAIR_FAMILIES

    @property
    def is_empty_family(self) -> bool:
        if self.family in ("T", "U", "UT"):
            return self.i == 0
        if self.family == "F":
            return self.i == 0
        return self.i == -1


def _freq_member(sid: SetId, f: FreqSeq) -> bool:
    fam, r, i = sid.family, sid.r, sid.i
    if fam in ("E", "F"):
        if fam == "F" and i == r:
            raise ValueError(
                "family F at index r has no membership predicate; "
                "its counts come from a product series"
            )
        if fam == "F" and i == r + 1:
            i = r - 1
        mod = 2 * r + 1 if fam == "E" else 2 * r
        banned = {0, i % mod, (mod - i) % mod}
        return all(f[u] == 0 or u % mod not in banned for u in range(len(f)))

    if fam in ("T", "U", "UT"):
        if f and f[0] != 0:
            return False
        if len(f) > 1 and f[1] > i - 1:
            return False
        first_u = 1
        parity = None
        if fam == "U":
            parity = (i - 1) % 2
        elif fam == "UT":
            parity = i % 2
    else:
        if f and f[0] > i:
            return False
        first_u = 0
        parity = None
        if fam == "B":
            parity = (r - 1 - i) % 2
        elif fam == "BT":
            parity = (r - i) % 2

    for u in range(len(f)):
        a = f[u]
        b = f[u + 1] if u + 1 < len(f) else 0
        if a + b > r - 1:
            return False
        if parity is not None and u >= first_u and a + b == r - 1:
            if (u * a + (u + 1) * b) % 2 != parity:
                return False
    return True


def _segment_bound(fam: str, j: int, i: int) -> int:
    if fam in ("P", "R", "RT"):
        return max(j - i, 0)
    return j + max(j - i, 0)


_PAIR_PARITY = {
    "P": None,
    "Q": None,
    "R": lambda r, i: (r - 1 - i) % 2,
    "RT": lambda r, i: (r - i) % 2,
    "S": lambda r, i: i % 2,
    "ST": lambda r, i: (i - 1) % 2,
}


def _pair_member(sid: SetId, shape: Shape, lam: Sequence[int]) -> bool:
    fam, r, i = sid.family, sid.r, sid.i
    if shape.r != r:
        return False
    if not is_insertion_sequence(shape, lam):
        return False
    parity_fn = _PAIR_PARITY[fam]
    parity = parity_fn(r, i) if parity_fn else None
    for j, start, stop in shape.segments():
        if start >= stop:
            continue
        bound = _segment_bound(fam, j, i)
        for t in range(start, stop):
            if lam[t] < bound:
                return False
            if parity is not None and j == r - 1 and lam[t] % 2 != parity:
                return False
    return True


def member(sid: SetId, obj) -> bool:
    """Membership test; obj is a frequency sequence or a (Shape, lam) pair."""
    if sid.is_empty_family:
        return False
    if sid.is_pair_side:
        shape, lam = obj
        return _pair_member(sid, shape, tuple(lam))
    f = normalize_freq(obj)
    return _freq_member(sid, f)


# ---------------------------------------------------------------------------
# Exhaustive enumeration by weight.


def _enum_window_family(
    r: int,
    f0_max: int,
    f1_max: int | None,
    parity: int | None,
    parity_from: int,
    max_weight: int,
) -> Iterator[FreqSeq]:
    """All freq sequences with window sums <= r-1 and weight <= max_weight.

    Saturated windows (u, u+1) with u >= parity_from must, when parity is
    given, have weighted sum congruent to parity mod 2.  Windows with the
    implicit zero tail are checked too.
    """
    wmax = r - 1

    def rec(u: int, prev: int, rem: int, acc: list[int]) -> Iterator[FreqSeq]:
        if u > max_weight or rem < u:
            # Everything from u on is zero; check the last window (u-1, u).
            if prev == wmax and parity is not None and u - 1 >= parity_from:
                if ((u - 1) * prev) % 2 != parity:
                    return
            yield normalize_freq(acc)
            return
        cap = min(rem // u, wmax - prev)
        if u == 1 and f1_max is not None:
            cap = min(cap, f1_max)
        for f in range(cap + 1):
            if prev + f == wmax and parity is not None and u - 1 >= parity_from:
                if ((u - 1) * prev + u * f) % 2 != parity:
                    continue
            acc.append(f)
            yield from rec(u + 1, f, rem - u * f, acc)
            acc.pop()

    for f0 in range(min(f0_max, wmax) + 1):
        yield from rec(1, f0, max_weight, [f0])


def _enum_congruence_family(
    mod: int, banned: set[int], max_weight: int
) -> Iterator[FreqSeq]:
    """Partitions (no zero parts) avoiding banned residues mod ``mod``."""
    allowed = [p for p in range(1, max_weight + 1) if p % mod not in banned]

    def rec(idx: int, rem: int, acc: dict[int, int]) -> Iterator[FreqSeq]:
        if idx == len(allowed):
            top = max(acc) if acc else -1
            yield tuple(acc.get(u, 0) for u in range(top + 1))
            return
        p = allowed[idx]
        mult = 0
        while mult * p <= rem:
            if mult:
                acc[p] = mult
            yield from rec(idx + 1, rem - mult * p, acc)
            mult += 1
        acc.pop(p, None)

    yield from rec(0, max_weight, {})


def enumerate_shapes(r: int, max_weight: int) -> Iterator[Shape]:
    """All shapes of rank r whose staircase weight is <= max_weight."""

    def rec(pos: int, cap: int, rem: int, acc: list[int]) -> Iterator[Shape]:
        if pos == r - 1:
            yield Shape(r, tuple(acc))
            return
        s = 0
        while s <= cap and s * s - s <= rem:
            acc.append(s)
            yield from rec(pos + 1, s, rem - (s * s - s), acc)
            acc.pop()
            s += 1

    cap0 = 0
    while (cap0 + 1) * cap0 <= max_weight:
        cap0 += 1
    yield from rec(0, cap0, max_weight, [])


def _enum_segment(
    size: int, bound: int, parity: int | None, budget: int
) -> Iterator[tuple[int, ...]]:
    """Non-decreasing tuples of the given size, entries >= bound, sum <= budget."""
    if size == 0:
        yield ()
        return
    lo = bound
    if parity is not None and lo % 2 != parity:
        lo += 1
    step = 1 if parity is None else 2

    def rec(pos: int, minval: int, rem: int, acc: list[int]) -> Iterator[tuple[int, ...]]:
        if pos == size:
            yield tuple(acc)
            return
        v = minval
        while v * (size - pos) <= rem:
            acc.append(v)
            yield from rec(pos + 1, v, rem - v, acc)
            acc.pop()
            v += step

    yield from rec(0, lo, budget, [])


def _enum_pair_family(sid: SetId, max_weight: int) -> Iterator[tuple[Shape, tuple[int, ...]]]:
    fam, r, i = sid.family, sid.r, sid.i
    parity_fn = _PAIR_PARITY[fam]
    parity = parity_fn(r, i) if parity_fn else None
    for shape in enumerate_shapes(r, max_weight):
        budget0 = max_weight - mu_weight(shape)
        segs = shape.segments()  # j = r-1 first, covering indices ascending

        def rec(k: int, rem: int, acc: list[int]) -> Iterator[tuple[Shape, tuple[int, ...]]]:
            if k == len(segs):
                yield (shape, tuple(acc))
                return
            j, start, stop = segs[k]
            bound = _segment_bound(fam, j, i)
            par = parity if j == r - 1 else None
            for seg in _enum_segment(stop - start, bound, par, rem):
                acc.extend(seg)
                yield from rec(k + 1, rem - sum(seg), acc)
                del acc[len(acc) - (stop - start) :]

        yield from rec(0, budget0, [])


def enumerate_members(sid: SetId, max_weight: int) -> Iterator:
    """Every member of weight <= max_weight, each exactly once.

    Frequency-side members are normalized frequency sequences; pair-side
    members are (Shape, insertion sequence) pairs.
    """
    if max_weight < 0:
        return
    if max_weight > MAX_ENUMERATION_WEIGHT:
        raise CapacityError(
            "enumeration weight %d exceeds cap %d"
            % (max_weight, MAX_ENUMERATION_WEIGHT)
        )
    if sid.is_empty_family:
        return
    fam, r, i = sid.family, sid.r, sid.i
    if sid.is_pair_side:
        yield from _enum_pair_family(sid, max_weight)
    elif fam in ("E", "F"):
        if fam == "F" and i == r:
            raise ValueError("family F at index r cannot be enumerated")
        j = r - 1 if (fam == "F" and i == r + 1) else i
        mod = 2 * r + 1 if fam == "E" else 2 * r
        banned = {0, j % mod, (mod - j) % mod}
        yield from _enum_congruence_family(mod, banned, max_weight)
    elif fam in ("T", "U", "UT"):
        parity = None
        if fam == "U":
            parity = (i - 1) % 2
        elif fam == "UT":
            parity = i % 2
        yield from _enum_window_family(r, 0, i - 1, parity, 1, max_weight)
    else:
        parity = None
        if fam == "B":
            parity = (r - 1 - i) % 2
        elif fam == "BT":
            parity = (r - i) % 2
        yield from _enum_window_family(r, i, None, parity, 0, max_weight)


def count_by_weight(sid: SetId, n: int) -> list[int]:
    """Counts of members at each weight 0..n (inclusive)."""
    out = [0] * (n + 1)
    if sid.is_empty_family:
        return out
    for obj in enumerate_members(sid, n):
        if sid.is_pair_side:
            shape, lam = obj
            out[pair_weight(shape, lam)] += 1
        else:
            out[weight(obj)] += 1
    return out


# ---------------------------------------------------------------------------
# Three elementary maps between adjacent family layers.


def strip_leading_freq(f: Sequence[int]) -> FreqSeq:
    """Forget the zero parts: f_0 becomes 0, everything else stays.

    Weight is preserved and length drops by f_0.
    """
    t = tuple(f)
    if not t:
        return ()
    return normalize_freq((0,) + t[1:])


def prepend_freq(f: Sequence[int], i: int) -> FreqSeq:
    """Set f_0 = i on a sequence that currently has no zero parts."""
    if i < 0:
        raise ValueError("multiplicity must be >= 0")
    t = tuple(f)
    if t and t[0] != 0:
        raise ValueError("input already has zero parts")
    if not t:
        t = (0,)
    return normalize_freq((i,) + t[1:])


def decrement_ones(f: Sequence[int]) -> FreqSeq:
    """Remove one part equal to 1 (f_1 decreases by one)."""
    t = tuple(f)
    if len(t) < 2 or t[1] < 1:
        raise ValueError("no part equal to 1 to remove")
    return normalize_freq(t[:1] + (t[1] - 1,) + t[2:])
