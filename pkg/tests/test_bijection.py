import pytest

from qbiject.partitions import length, parts_to_freq, weight
from qbiject.sets import (
    SetId,
    Shape,
    enumerate_members,
    member,
    mu_of_shape,
    pair_weight,
)
from qbiject.bijection import (
    BijectionTrace,
    NotInDomainError,
    StepRecord,
    check_step_invariants,
    gamma_backward,
    gauge_forward,
    lambda_forward,
    trace_to_text,
    verify_induced_membership,
)

GOLDEN_SHAPE = Shape(4, (4, 2, 2))
GOLDEN_LAM = (5, 6, 1, 3)
GOLDEN_FREQ = (0, 1, 2, 1, 1, 2, 0, 0, 0, 1)


def test_gauge_forward():
    sh = GOLDEN_SHAPE
    assert [gauge_forward(sh, u) for u in range(5)] == [3, 3, 1, 1, 0]
    assert gauge_forward(Shape(2, (0,)), 0) == 0


def test_forward_golden_trace():
    freq, trace = lambda_forward(GOLDEN_SHAPE, GOLDEN_LAM)
    assert freq == GOLDEN_FREQ
    assert trace.initial == mu_of_shape(GOLDEN_SHAPE)
    assert [st.u for st in trace.steps] == [3, 2, 1, 0]
    assert [st.gauge for st in trace.steps] == [1, 1, 3, 3]
    assert [st.pivot for st in trace.steps] == [10, 6, 6, 3]
    assert [st.delta for st in trace.steps] == [3, 1, 6, 5]
    assert [st.snapshot for st in trace.steps] == [
        (3, 0, 3, 0, 1, 0, 0, 0, 0, 1),
        (3, 0, 3, 0, 0, 1, 0, 0, 0, 1),
        (3, 0, 0, 1, 1, 2, 0, 0, 0, 1),
        (0, 1, 2, 1, 1, 2, 0, 0, 0, 1),
    ]
    assert check_step_invariants(trace, GOLDEN_SHAPE) == []


def test_backward_golden_trace():
    shape, kappa, trace = gamma_backward(GOLDEN_FREQ, 4)
    assert shape == GOLDEN_SHAPE
    assert kappa == GOLDEN_LAM
    assert [st.gauge for st in trace.steps] == [3, 3, 1, 1]
    assert [st.pivot for st in trace.steps] == [3, 6, 6, 10]
    assert [st.delta for st in trace.steps] == [5, 6, 1, 3]
    assert trace.final == mu_of_shape(GOLDEN_SHAPE)
    assert check_step_invariants(trace, 4) == []


def test_forward_backward_traces_mirror():
    _, fwd = lambda_forward(GOLDEN_SHAPE, GOLDEN_LAM)
    _, _, bwd = gamma_backward(GOLDEN_FREQ, 4)
    fwd_by_u = {st.u: (st.gauge, st.pivot, st.delta) for st in fwd.steps}
    bwd_by_u = {st.u: (st.gauge, st.pivot, st.delta) for st in bwd.steps}
    assert fwd_by_u == bwd_by_u


def test_rank2_worked_example():
    # inserting (0,2,2,3) into the rank-2 staircase of height 4
    # gives the partition (9,6,4,0)
    freq, _ = lambda_forward(Shape(2, (4,)), (0, 2, 2, 3))
    assert freq == parts_to_freq((9, 6, 4, 0))


def test_empty_inputs():
    sh = Shape(3, (0, 0))
    freq, trace = lambda_forward(sh, ())
    assert freq == () and trace.steps == ()
    shape, kappa, trace = gamma_backward((), 3)
    assert shape == sh and kappa == () and trace.steps == ()
    assert check_step_invariants(trace, 3) == []


def test_forward_domain_errors():
    with pytest.raises(NotInDomainError):
        lambda_forward(GOLDEN_SHAPE, (5, 6, 3, 1))  # segment not monotone
    with pytest.raises(NotInDomainError):
        lambda_forward(GOLDEN_SHAPE, (5, 6, 1))  # wrong arity


def test_backward_rejects_window_violation():
    # (2,2) has window sum 4 > 2 at index 0 for rank 3
    with pytest.raises(NotInDomainError) as exc:
        gamma_backward((2, 2), 3)
    assert exc.value.index == 0
    with pytest.raises(NotInDomainError) as exc:
        gamma_backward((0, 1, 2, 3), 4)
    assert exc.value.index == 2


def test_trace_text_format():
    freq, trace = lambda_forward(GOLDEN_SHAPE, GOLDEN_LAM)
    text = trace_to_text(trace)
    lines = text.splitlines()
    assert lines[0] == "initial 3 0 3 0 1 0 1"
    assert lines[1] == "u=3 g=1 n=10 lam=3"
    assert lines[-1] == "0 1 2 1 1 2 0 0 0 1"


def test_weight_and_length_preserved_exhaustively():
    for r in (2, 3):
        for shape, lam in enumerate_members(SetId("P", r, r - 1), 12):
            freq, _ = lambda_forward(shape, lam)
            assert weight(freq) == pair_weight(shape, lam)
            assert length(freq) == sum(shape.s)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_round_trip_exhaustive(r):
    max_w = 12
    for shape, lam in enumerate_members(SetId("P", r, r - 1), max_w):
        freq, fwd = lambda_forward(shape, lam)
        shape2, lam2, bwd = gamma_backward(freq, r)
        assert (shape2, lam2) == (shape, lam)
        assert check_step_invariants(fwd, shape) == []
        assert check_step_invariants(bwd, r) == []
    for freq in enumerate_members(SetId("A", r, r - 1), max_w):
        shape, lam, _ = gamma_backward(freq, r)
        freq2, _ = lambda_forward(shape, lam)
        assert freq2 == freq


def test_check_step_invariants_catches_corruption():
    _, trace = lambda_forward(GOLDEN_SHAPE, GOLDEN_LAM)
    st = trace.steps[1]
    broken = BijectionTrace(
        trace.direction,
        (
            trace.steps[0],
            StepRecord(st.u, st.gauge + 1, st.pivot, st.delta, st.snapshot),
        )
        + trace.steps[2:],
        trace.initial,
        trace.final,
    )
    assert check_step_invariants(broken, GOLDEN_SHAPE) != []
    tampered = BijectionTrace(
        trace.direction,
        trace.steps[:-1]
        + (
            StepRecord(
                trace.steps[-1].u,
                trace.steps[-1].gauge,
                trace.steps[-1].pivot,
                trace.steps[-1].delta,
                (9,) + trace.steps[-1].snapshot[1:],
            ),
        ),
        trace.initial,
        trace.final,
    )
    assert check_step_invariants(tampered, GOLDEN_SHAPE) != []


@pytest.mark.parametrize("family", ["P", "Q", "R", "RT", "S", "ST"])
def test_induced_membership_small(family):
    for r in (2, 3):
        for i in range(0, r):
            rep = verify_induced_membership(family, r, i, 12)
            assert rep["ok"], (family, r, i, rep["counterexample"])
