"""One ball, n boxes, opened one at a time.

Each miss conditions the state on the opened box being empty; a hit
collapses it.  The entropy column drops from log2(n) to zero no matter
which order the boxes are opened in, which is the executable version of
the claim that classical measurement order does not matter.
"""

import math

from orderctx import boxes_experiment, determinism_check

n = 5

print(f"searching {n} boxes, ball hidden in the last one opened")
trace = boxes_experiment(n, ball_index=n - 1)
print(f"{'step':>4} {'box':>4} {'result':>7} {'entropy':>10}")
print(f"{0:>4} {'':>4} {'':>7} {trace.entropies[0]:>10.6f}")
for k, step in enumerate(trace.steps, start=1):
    result = "found" if step.found else "empty"
    print(f"{k:>4} {step.box:>4} {result:>7} {step.entropy_bits:>10.6f}")

verdict = determinism_check(trace)
print("physically deterministic:", verdict.physically_deterministic)
print("observations to certainty:", verdict.steps_to_certainty)
print("note: the last box was never opened; elimination already settled it")
print()

# the entropy after k misses is log2(n-k) no matter which boxes they were;
# the order only moves the step at which the hit arrives
orders = [(0, 1, 2, 3, 4), (3, 1, 4, 0, 2), (4, 3, 2, 1, 0)]
print("ball in box 2, three different opening orders:")
for order in orders:
    t = boxes_experiment(n, 2, order)
    opened = [s.box for s in t.steps]
    print(f"  order {order} -> opened {opened}, entropies {[round(e, 4) for e in t.entropies]}")

print()
print("reference column for a miss-only run:", [round(math.log2(n - k), 4) for k in range(n - 1)] + [0.0])
