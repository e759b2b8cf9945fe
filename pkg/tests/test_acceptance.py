"""Acceptance suite: one test per criterion, one pass/fail line each.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the
status lines as they happen)."""

import time

from qbiject.partitions import length, weight
from qbiject.series import MultisumSpec, multisum, poch_finite, poch_inf, TruncatedSeries
from qbiject.sets import SetId, enumerate_members, pair_weight, Shape
from qbiject.bijection import (
    check_step_invariants,
    gamma_backward,
    lambda_forward,
    verify_induced_membership,
)
from qbiject.identities import sweep

GOLDEN_SHAPE = Shape(4, (4, 2, 2))
GOLDEN_LAM = (5, 6, 1, 3)
GOLDEN_FREQ = (0, 1, 2, 1, 1, 2, 0, 0, 0, 1)

_collected_traces = []


def _report(num, name, ok, extra=""):
    status = "PASS" if ok else "FAIL"
    print("ACCEPTANCE %d (%s): %s %s" % (num, name, status, extra))
    assert ok, "criterion %d (%s) failed %s" % (num, name, extra)


def test_criterion_1_golden_forward():
    elapsed = float("inf")
    for _ in range(3):
        t0 = time.perf_counter()
        freq, trace = lambda_forward(GOLDEN_SHAPE, GOLDEN_LAM)
        elapsed = min(elapsed, time.perf_counter() - t0)
    ok = (
        freq == GOLDEN_FREQ
        and [st.snapshot for st in trace.steps]
        == [
            (3, 0, 3, 0, 1, 0, 0, 0, 0, 1),
            (3, 0, 3, 0, 0, 1, 0, 0, 0, 1),
            (3, 0, 0, 1, 1, 2, 0, 0, 0, 1),
            (0, 1, 2, 1, 1, 2, 0, 0, 0, 1),
        ]
        and [st.gauge for st in trace.steps] == [1, 1, 3, 3]
        and [st.pivot for st in trace.steps] == [10, 6, 6, 3]
        and elapsed < 0.001
    )
    _collected_traces.append(("forward", trace, GOLDEN_SHAPE))
    _report(1, "golden forward trace", ok, "(%.3f ms)" % (elapsed * 1000))


def test_criterion_2_golden_backward():
    shape, kappa, trace = gamma_backward(GOLDEN_FREQ, 4)
    ok = (
        shape == GOLDEN_SHAPE
        and kappa == GOLDEN_LAM
        and [st.gauge for st in trace.steps] == [3, 3, 1, 1]
        and [st.pivot for st in trace.steps] == [3, 6, 6, 10]
        and [st.delta for st in trace.steps] == [5, 6, 1, 3]
        and len(trace.steps) == 4
    )
    _collected_traces.append(("backward", trace, 4))
    _report(2, "golden backward trace", ok)


def test_criterion_3_round_trip_exhaustion():
    t0 = time.perf_counter()
    failures = 0
    cases = 0
    for r in (2, 3, 4, 5):
        for shape, lam in enumerate_members(SetId("P", r, r - 1), 18):
            cases += 1
            freq, fwd = lambda_forward(shape, lam)
            shape2, lam2, bwd = gamma_backward(freq, r)
            if (shape2, lam2) != (shape, lam):
                failures += 1
            if weight(freq) != pair_weight(shape, lam) or length(freq) != sum(
                shape.s
            ):
                failures += 1
            _collected_traces.append(("forward", fwd, shape))
            _collected_traces.append(("backward", bwd, r))
        for freq in enumerate_members(SetId("A", r, r - 1), 18):
            cases += 1
            shape, lam, bwd = gamma_backward(freq, r)
            freq2, fwd = lambda_forward(shape, lam)
            if freq2 != freq:
                failures += 1
            _collected_traces.append(("forward", fwd, shape))
            _collected_traces.append(("backward", bwd, r))
    elapsed = time.perf_counter() - t0
    _report(
        3,
        "round-trip exhaustion",
        failures == 0 and elapsed < 60,
        "(%d cases, %.1f s)" % (cases, elapsed),
    )


def test_criterion_4_identity_sweep():
    t0 = time.perf_counter()
    reports = sweep(r_values=(2, 3, 4), n_series=40, n_enum=25)
    elapsed = time.perf_counter() - t0
    bad = [rep for rep in reports if not rep.ok]
    _report(
        4,
        "identity sweep",
        not bad and elapsed < 300,
        "(%d cases, %.1f s)" % (len(reports), elapsed),
    )


def test_criterion_5_induced_counts():
    failures = []
    for r in (2, 3, 4):
        for family in ("P", "Q", "R", "RT", "S", "ST"):
            for i in range(0, r):
                rep = verify_induced_membership(family, r, i, 20)
                if not rep["ok"]:
                    failures.append((family, r, i))
    _report(5, "induced sub-bijection counts", not failures, str(failures or ""))


def test_criterion_6_step_invariants_on_all_traces():
    assert _collected_traces, "criteria 1-3 must run first"
    bad = 0
    for direction, trace, arg in _collected_traces:
        if check_step_invariants(trace, arg):
            bad += 1
    _report(
        6,
        "step invariants on all traces",
        bad == 0,
        "(%d traces)" % len(_collected_traces),
    )


def test_criterion_7_oracle_cross_checks():
    n = 40

    # independent partition-count oracle: recursion on the largest part
    def count_parts(rem, cap):
        if rem == 0:
            return 1
        return sum(count_parts(rem - p, p) for p in range(min(rem, cap), 0, -1))

    oracle = [count_parts(m, m) for m in range(n + 1)]
    inv = poch_inf(1, 1, n).invert_unit()
    ok = list(inv.coeffs) == oracle

    for i in (1, 2):
        total = TruncatedSeries.zero(n)
        s = 0
        while s * s + (2 - i) * s <= n:
            total = total + (
                TruncatedSeries.monomial(s * s + (2 - i) * s, n)
                * poch_finite(1, 1, s, n).invert_unit()
            )
            s += 1
        ok = ok and multisum(MultisumSpec("AG", 2, i), n) == total
    _report(7, "oracle cross-checks", ok)
