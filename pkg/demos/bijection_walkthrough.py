"""Walk the staircase-insertion bijection through its worked example.

Runs the forward map on the rank-4 staircase with shape (4, 2, 2) and
insertion sequence (5, 6, 1, 3), prints every intermediate state, then
inverts the result and checks the round trip.
"""

from qbiject import Shape, gamma_backward, lambda_forward, mu_of_shape, weight, length
from qbiject.bijection import check_step_invariants, trace_to_text

shape = Shape(4, (4, 2, 2))
lam = (5, 6, 1, 3)

print("shape:", shape.s, "(rank", str(shape.r) + ")")
print("staircase frequencies:", mu_of_shape(shape))
print("insertion sequence:", lam)
print()

freq, trace = lambda_forward(shape, lam)
print("forward trace:")
print(trace_to_text(trace))
print()
print("result:", freq)
print("weight:", weight(freq), " length:", length(freq))

violations = check_step_invariants(trace, shape)
print("step invariant violations:", violations or "none")
print()

shape2, kappa, back = gamma_backward(freq, shape.r)
print("backward trace:")
print(trace_to_text(back))
print()
print("recovered shape:", shape2.s, " recovered sequence:", kappa)
assert (shape2, kappa) == (shape, lam)
print("round trip OK")
