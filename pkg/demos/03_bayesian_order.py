"""The information order on classical states, by worked example.

A state sits below another when every way of reading off its ranking agrees
that the second is a sharpening of the first.  Uniform ignorance is the
least element, point masses are the maximal ones, and mixing toward a state
walks a monotone path up to it.
"""

import numpy as np

from orderctx import (
    ClassicalState,
    bayesian_leq,
    eliminate,
    mixed,
    mixing_path,
    philox_generator,
    pure,
    sample_ordered_pair,
    shannon_bits,
)


def show(tag, x, y):
    rel = "below" if bayesian_leq(x, y) else ("above" if bayesian_leq(y, x) else "incomparable with")
    print(f"{tag}: {np.round(x.probs, 4)} is {rel} {np.round(y.probs, 4)}")


print("-- anchors")
show("ignorance", mixed(3), ClassicalState([0.6, 0.1, 0.3]))
show("certainty", ClassicalState([0.2, 0.5, 0.3]), pure(3, 1))
show("wrong peak", ClassicalState([0.2, 0.5, 0.3]), pure(3, 0))
show("crossing", ClassicalState([0.9, 0.1]), ClassicalState([0.5, 0.5]))

print()
print("-- mixing walks upward")
target = ClassicalState([0.7, 0.2, 0.1])
previous = mixed(3)
for t in (0.25, 0.5, 0.75, 1.0):
    here = mixing_path(mixed(3), target, t)
    assert bayesian_leq(previous, here)
    print(f"t={t:4.2f}  state={np.round(here.probs, 4)}  H={shannon_bits(here):.4f} bits")
    previous = here

print()
print("-- ruling outcomes out")
state = mixed(4)
for box in (2, 0, 3):
    refined = eliminate(state, box)
    ordered = bayesian_leq(state, refined)
    print(f"drop outcome {box}: {np.round(refined.probs, 4)}  refines: {ordered}")
    state = refined

# dropping the current favorite is not a refinement, and the order says so
lopsided = ClassicalState([0.5, 0.3, 0.2])
show("dropping the favorite", lopsided, eliminate(lopsided, 0))

print()
print("-- entropy respects the order (sampled)")
rng = philox_generator(2)
worst = 0.0
for _ in range(2000):
    x, y = sample_ordered_pair(4, rng)
    worst = max(worst, shannon_bits(y) - shannon_bits(x))
print("largest H(y) - H(x) over 2000 ordered pairs:", worst, "(never positive)")
