"""The staircase insertion bijection and its inverse.

The forward map takes a shape (staircase) together with an insertion
sequence and folds the insertion values one index at a time into the
staircase frequency sequence, producing a window-constrained frequency
sequence of the same total weight and length.  The backward map peels
the largest window value off repeatedly, recovering the shape and the
insertion values.

Both directions record a full trace: one step record per index, with
the gauge (the window ceiling at that step), the pivot column where the
rewrite stops, the inserted or extracted amount, and a snapshot of the
whole frequency sequence after the step.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from qbiject.partitions import FreqSeq, length, normalize_freq, weight
from qbiject.sets import (
    SetId,
    Shape,
    is_insertion_sequence,
    mu_of_shape,
    enumerate_members,
    member,
    pair_weight,
)


class NotInDomainError(ValueError):
    """Input outside the domain of the map; ``index`` locates the violation."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


@dataclass(frozen=True)
class StepRecord:
    """One rewrite step.

    ``gauge`` is the window ceiling g_u (forward) or the extracted window
    value h_u (backward); ``pivot`` is the column n_u (forward) or m_u
    (backward) where the rewrite stops; ``delta`` is the amount inserted
    (lambda_u) or extracted (kappa_u); ``snapshot`` is the normalized
    frequency sequence after the step.
    """

    u: int
    gauge: int
    pivot: int
    delta: int
    snapshot: FreqSeq


@dataclass(frozen=True)
class BijectionTrace:
    direction: str  # "forward" or "backward"
    steps: tuple[StepRecord, ...]
    initial: FreqSeq
    final: FreqSeq


def _fmt_freq(f: Sequence[int]) -> str:
    return " ".join(str(x) for x in f) if f else "-"


def trace_to_text(trace: BijectionTrace) -> str:
    """Plain text rendering: one header and one snapshot line per step.

    The last line is always the final frequency sequence on its own
    ("-" for the empty sequence).
    """
    keys = ("g", "n", "lam") if trace.direction == "forward" else ("h", "m", "kappa")
    lines = ["initial " + _fmt_freq(trace.initial)]
    for st in trace.steps:
        lines.append(
            "u=%d %s=%d %s=%d %s=%d"
            % (st.u, keys[0], st.gauge, keys[1], st.pivot, keys[2], st.delta)
        )
        lines.append(_fmt_freq(st.snapshot))
    if not trace.steps or trace.steps[-1].snapshot != trace.final:
        lines.append(_fmt_freq(trace.final))
    return "\n".join(lines)


def gauge_forward(shape: Shape, u: int) -> int:
    """Largest j with s_j > u (0 when even s_1 <= u)."""
    for j in range(shape.r - 1, 0, -1):
        if shape.s[j - 1] > u:
            return j
    return 0


def lambda_forward(shape: Shape, lam: Sequence[int]) -> tuple[FreqSeq, BijectionTrace]:
    """Forward map: fold an insertion sequence into the staircase.

    Returns the resulting frequency sequence and the full trace.  The
    insertion values are consumed from the highest index s_1 - 1 down
    to 0.
    """
    lam = tuple(lam)
    if not is_insertion_sequence(shape, lam):
        raise NotInDomainError("not an insertion sequence for this shape")
    s1 = shape.s1
    initial = mu_of_shape(shape)
    size = 2 * s1 + sum(lam) + 8
    theta = list(initial) + [0] * (size - len(initial))
    steps = []
    for u in range(s1 - 1, -1, -1):
        g = gauge_forward(shape, u)
        # pivot: first column where the accumulated slack covers lam[u]
        t = 2 * u + 2
        if t + 1 >= len(theta):
            theta.extend([0] * 16)
        acc = g - (theta[t] + theta[t - 1])
        while acc < lam[u]:
            t += 1
            if t >= len(theta):
                theta.extend([0] * 16)
            acc += g - (theta[t] + theta[t - 1])
        n = t
        prev_acc = acc - (g - (theta[n] + theta[n - 1]))
        new_last = theta[n - 1] + lam[u] - prev_acc
        for j in range(2 * u, n - 2):
            theta[j] = theta[j + 2]
        theta[n - 1] = new_last
        theta[n - 2] = g - new_last
        steps.append(StepRecord(u, g, n, lam[u], normalize_freq(theta)))
    final = normalize_freq(theta)
    trace = BijectionTrace("forward", tuple(steps), initial, final)
    return final, trace


def gamma_backward(freqs: Sequence[int], r: int) -> tuple[Shape, tuple[int, ...], BijectionTrace]:
    """Backward map: peel insertion values off a window-constrained sequence.

    The input must satisfy the rank-r window condition (every two
    consecutive multiplicities sum to at most r-1); otherwise
    NotInDomainError reports the first violated window index.
    """
    if r < 2:
        raise ValueError("rank must be >= 2")
    f = normalize_freq(freqs)
    for u in range(len(f)):
        a = f[u]
        b = f[u + 1] if u + 1 < len(f) else 0
        if a + b > r - 1:
            raise NotInDomainError(
                "window at %d sums to %d > %d" % (u, a + b, r - 1), index=u
            )
    eta = list(f)
    steps = []
    hs = []
    kappas = []
    u = 0
    while True:
        if len(eta) < 2 * u + 2:
            eta.extend([0] * (2 * u + 2 - len(eta)))
        h = 0
        for j in range(2 * u, len(eta)):
            w = eta[j] + (eta[j + 1] if j + 1 < len(eta) else 0)
            if w > h:
                h = w
        if h == 0:
            break
        m = 2 * u + 2
        while eta[m - 2] + (eta[m - 1] if m - 1 < len(eta) else 0) != h:
            m += 1
        kappa = h - eta[2 * u]
        for j in range(2 * u, m - 2):
            kappa += h - (eta[j] + (eta[j + 1] if j + 1 < len(eta) else 0))
        if len(eta) < m:
            eta.extend([0] * (m - len(eta)))
        for j in range(m - 1, 2 * u + 1, -1):
            eta[j] = eta[j - 2]
        eta[2 * u] = h
        eta[2 * u + 1] = 0
        steps.append(StepRecord(u, h, m, kappa, normalize_freq(eta)))
        hs.append(h)
        kappas.append(kappa)
        u += 1
    big_u = u
    hs.append(0)  # sentinel: h is 0 from step big_u on
    s = tuple(
        next(v for v in range(big_u + 1) if hs[v] <= j - 1) for j in range(1, r)
    )
    shape = Shape(r, s)
    final = normalize_freq(eta)
    trace = BijectionTrace("backward", tuple(steps), f, final)
    return shape, tuple(kappas), trace


def _at(f: Sequence[int], j: int) -> int:
    return f[j] if 0 <= j < len(f) else 0


def _max_window_from(f: Sequence[int], start: int) -> int:
    h = 0
    for j in range(start, len(f)):
        w = f[j] + _at(f, j + 1)
        if w > h:
            h = w
    return h


def check_step_invariants(trace: BijectionTrace, shape_or_r) -> list[str]:
    """Check every per-step invariant; returns a list of violations.

    For a forward trace pass the shape; for a backward trace pass the
    rank r.  An empty list means the trace is clean.
    """
    bad = []
    if trace.direction == "forward":
        shape: Shape = shape_or_r
        mu = mu_of_shape(shape)
        if trace.initial != mu:
            bad.append("initial snapshot is not the staircase of the shape")
        expect_u = shape.s1 - 1
        prev = trace.initial
        for st in trace.steps:
            tag = "forward step u=%d" % st.u
            if st.u != expect_u:
                bad.append("%s: expected index %d" % (tag, expect_u))
            expect_u -= 1
            if any(x < 0 for x in st.snapshot):
                bad.append("%s: negative multiplicity" % tag)
            g = gauge_forward(shape, st.u)
            if st.gauge != g:
                bad.append("%s: recorded gauge %d, shape gives %d" % (tag, st.gauge, g))
            if _max_window_from(st.snapshot, 2 * st.u) != st.gauge:
                bad.append("%s: max window after step differs from gauge" % tag)
            if (_at(prev, 2 * st.u), _at(prev, 2 * st.u + 1)) != (st.gauge, 0):
                bad.append("%s: columns (2u, 2u+1) before step are not (g, 0)" % tag)
            for j in range(2 * st.u):
                if _at(st.snapshot, j) != _at(mu, j):
                    bad.append("%s: frozen prefix changed at column %d" % (tag, j))
                    break
            if length(st.snapshot) != length(trace.initial):
                bad.append("%s: length changed" % tag)
            if weight(st.snapshot) != weight(prev) + st.delta:
                bad.append("%s: weight did not grow by the inserted amount" % tag)
            par = (
                (st.pivot - 2) * _at(st.snapshot, st.pivot - 2)
                + (st.pivot - 1) * _at(st.snapshot, st.pivot - 1)
            ) % 2
            if par != st.delta % 2:
                bad.append("%s: pivot columns do not carry the inserted parity" % tag)
            prev = st.snapshot
        if (trace.steps and trace.steps[-1].snapshot != trace.final) or (
            not trace.steps and trace.initial != trace.final
        ):
            bad.append("final snapshot mismatch")
    elif trace.direction == "backward":
        r: int = shape_or_r
        prev = trace.initial
        last = None
        for st in trace.steps:
            tag = "backward step u=%d" % st.u
            if st.u != (0 if last is None else last.u + 1):
                bad.append("%s: step indices must ascend from 0" % tag)
            if any(x < 0 for x in st.snapshot):
                bad.append("%s: negative multiplicity" % tag)
            if not 1 <= st.gauge <= r - 1:
                bad.append("%s: extracted window %d outside [1, r-1]" % (tag, st.gauge))
            if _max_window_from(prev, 2 * st.u) != st.gauge:
                bad.append("%s: recorded window differs from max window" % tag)
            if (_at(st.snapshot, 2 * st.u), _at(st.snapshot, 2 * st.u + 1)) != (
                st.gauge,
                0,
            ):
                bad.append("%s: columns (2u, 2u+1) after step are not (h, 0)" % tag)
            if last is not None:
                if st.gauge > last.gauge:
                    bad.append("%s: extracted windows must be non-increasing" % tag)
                if st.gauge == last.gauge:
                    if st.pivot < last.pivot + 2:
                        bad.append("%s: pivot must advance by 2 at equal windows" % tag)
                    if st.delta < last.delta:
                        bad.append(
                            "%s: extracted amounts must be non-decreasing "
                            "at equal windows" % tag
                        )
            for j in range(2 * st.u):
                if _at(st.snapshot, j) != _at(trace.final, j):
                    bad.append("%s: frozen prefix changed at column %d" % (tag, j))
                    break
            if length(st.snapshot) != length(trace.initial):
                bad.append("%s: length changed" % tag)
            if weight(st.snapshot) != weight(prev) - st.delta:
                bad.append("%s: weight did not drop by the extracted amount" % tag)
            par = (
                (st.pivot - 2) * _at(prev, st.pivot - 2)
                + (st.pivot - 1) * _at(prev, st.pivot - 1)
            ) % 2
            if par != st.delta % 2:
                bad.append("%s: pivot columns do not carry the extracted parity" % tag)
            prev = st.snapshot
            last = st
        if (trace.steps and trace.steps[-1].snapshot != trace.final) or (
            not trace.steps and trace.initial != trace.final
        ):
            bad.append("final snapshot mismatch")
    else:
        bad.append("unknown trace direction %r" % (trace.direction,))
    return bad


#: Pair-side family -> (frequency-side family, index shift) under the map.
INDUCED = {
    "P": ("A", 0),
    "Q": ("T", 1),
    "R": ("B", 0),
    "RT": ("BT", 0),
    "S": ("U", 1),
    "ST": ("UT", 1),
}


def verify_induced_membership(pair_family: str, r: int, i: int, max_weight: int) -> dict:
    """Check that the maps restrict to the matched families.

    Applies the forward map to every pair-side member of weight up to
    max_weight and checks the image lands in the matched frequency-side
    family (and conversely with the backward map), then compares the
    per-weight counts.  Returns a report dict with keys ``ok``,
    ``checked`` and ``counterexample``.
    """
    freq_family, shift = INDUCED[pair_family]
    pair_sid = SetId(pair_family, r, i)
    freq_sid = SetId(freq_family, r, i + shift)
    pair_counts = [0] * (max_weight + 1)
    freq_counts = [0] * (max_weight + 1)
    checked = 0
    for shape, lam in enumerate_members(pair_sid, max_weight):
        w = pair_weight(shape, lam)
        pair_counts[w] += 1
        img, _ = lambda_forward(shape, lam)
        checked += 1
        if weight(img) != w or not member(freq_sid, img):
            return {
                "ok": False,
                "checked": checked,
                "counterexample": ("forward", shape.s, lam, img),
            }
    for f in enumerate_members(freq_sid, max_weight):
        freq_counts[weight(f)] += 1
        shape, lam, _ = gamma_backward(f, r)
        checked += 1
        if pair_weight(shape, lam) != weight(f) or not member(pair_sid, (shape, lam)):
            return {
                "ok": False,
                "checked": checked,
                "counterexample": ("backward", f, shape.s, lam),
            }
    if pair_counts != freq_counts:
        return {
            "ok": False,
            "checked": checked,
            "counterexample": ("counts", pair_counts, freq_counts),
        }
    return {"ok": True, "checked": checked, "counterexample": None}
