"""Integer partitions in two equivalent encodings.

A partition is a finite non-increasing tuple of non-negative integers.
Parts equal to zero are allowed; they do not change the weight (the sum
of the parts) but they do count towards the length (the number of
parts).  The same object can be encoded as a frequency sequence
``(f_0, f_1, ...)`` where ``f_u`` is the number of parts equal to
``u``.  Frequency sequences are kept normalized: no trailing zeros, so
the empty partition is the empty tuple in both encodings.

Example: the partition ``(4, 4, 3, 1, 0)`` has frequency sequence
``(1, 1, 0, 1, 2)``, weight 12 and length 5.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Partition = tuple[int, ...]
FreqSeq = tuple[int, ...]

PARITIES = ("even", "odd", "any")


def normalize_freq(freqs: Iterable[int]) -> FreqSeq:
    """Drop trailing zeros from a frequency sequence."""
    out = list(freqs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def is_partition(parts: Sequence[int]) -> bool:
    """True if ``parts`` is non-increasing with non-negative entries."""
    return all(p >= 0 for p in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def is_freq(freqs: Sequence[int]) -> bool:
    """True if ``freqs`` is a normalized frequency sequence."""
    if any(f < 0 for f in freqs):
        return False
    return not freqs or freqs[-1] != 0


def parts_to_freq(parts: Sequence[int]) -> FreqSeq:
    """Convert a partition given by its parts to frequency form."""
    if not is_partition(parts):
        raise ValueError("not a partition: %r" % (tuple(parts),))
    if not parts:
        return ()
    out = [0] * (parts[0] + 1)
    for p in parts:
        out[p] += 1
    return normalize_freq(out)


def freq_to_parts(freqs: Sequence[int]) -> Partition:
    """Convert a frequency sequence to the parts encoding."""
    if any(f < 0 for f in freqs):
        raise ValueError("negative multiplicity in %r" % (tuple(freqs),))
    parts = []
    for u in range(len(freqs) - 1, -1, -1):
        parts.extend([u] * freqs[u])
    return tuple(parts)


def weight(freqs: Sequence[int]) -> int:
    """Weight (sum of parts) of a frequency sequence."""
    return sum(u * f for u, f in enumerate(freqs))


def length(freqs: Sequence[int]) -> int:
    """Length (number of parts, zero parts included) of a frequency sequence."""
    return sum(freqs)


def _window(freqs: Sequence[int], u: int, d: int) -> int:
    """Sum of ``d`` consecutive multiplicities starting at value ``u``."""
    return sum(freqs[v] for v in range(u, u + d) if v < len(freqs))


def _weighted_window(freqs: Sequence[int], u: int, d: int) -> int:
    return sum(v * freqs[v] for v in range(u, u + d) if v < len(freqs))


def _gap_on_freq(freqs: Sequence[int], d: int, m: int) -> bool:
    for u in range(len(freqs)):
        if _window(freqs, u, d) > m:
            return False
    return True


def _gap_on_parts(parts: Sequence[int], d: int, m: int) -> bool:
    ell = len(parts)
    for k in range(ell - m):
        if parts[k] - parts[k + m] < d:
            return False
    return True


def _gap_parity_on_freq(freqs: Sequence[int], d: int, m: int, parity: str) -> bool:
    if not _gap_on_freq(freqs, d, m):
        return False
    if parity == "any":
        return True
    want = 1 if parity == "odd" else 0
    for u in range(len(freqs)):
        if _window(freqs, u, d) == m:
            if _weighted_window(freqs, u, d) % 2 != want:
                return False
    return True


def _gap_parity_on_parts(parts: Sequence[int], d: int, m: int, parity: str) -> bool:
    if not _gap_on_parts(parts, d, m):
        return False
    if parity == "any":
        return True
    want = 1 if parity == "odd" else 0
    ell = len(parts)
    for k in range(ell - m + 1):
        if parts[k] - parts[k + m - 1] <= d - 1:
            if sum(parts[k : k + m]) % 2 != want:
                return False
    return True


def check_gap_condition(parts: Sequence[int], d: int, m: int) -> bool:
    """Difference-at-distance condition.

    In the parts encoding: ``parts[k] - parts[k + m] >= d`` for every
    window of ``m + 1`` consecutive parts.  Equivalently, every ``d``
    consecutive multiplicities sum to at most ``m``.  Both formulations
    are evaluated and must agree.
    """
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    if not is_partition(parts):
        raise ValueError("not a partition: %r" % (tuple(parts),))
    on_parts = _gap_on_parts(parts, d, m)
    assert on_parts == _gap_on_freq(parts_to_freq(parts), d, m)
    return on_parts


def check_gap_parity_condition(
    parts: Sequence[int], d: int, m: int, parity: str
) -> bool:
    """Gap condition with a parity constraint on saturated windows.

    On top of :func:`check_gap_condition`, whenever ``d`` consecutive
    multiplicities sum to exactly ``m`` (equivalently, ``m`` consecutive
    parts span less than ``d``), the sum of those ``m`` parts must have
    the requested parity.  ``parity`` is ``"even"``, ``"odd"`` or
    ``"any"`` (the latter reduces to the plain gap condition).
    """
    if parity not in PARITIES:
        raise ValueError("parity must be one of %r" % (PARITIES,))
    if d < 1 or m < 0:
        raise ValueError("need d >= 1 and m >= 0")
    if not is_partition(parts):
        raise ValueError("not a partition: %r" % (tuple(parts),))
    on_parts = _gap_parity_on_parts(parts, d, m, parity)
    assert on_parts == _gap_parity_on_freq(parts_to_freq(parts), d, m, parity)
    return on_parts
