"""
Checking the adjunction
=======================

dilate(F, G) <= E  holds exactly when  F <= erode(E, G).  The checker
samples random triples; a deliberately wrong residual is caught.
"""

from semimorph import adjunction_holds, make_semiring
from semimorph.laws import run_suite
from semimorph.morph import corrupt_residual

for name in ("boolean", "maxplus", "minmax"):
    print(adjunction_holds(trials=500, semiring=make_semiring(name), seed=1).line(), name)

bad = corrupt_residual(make_semiring("maxplus"), 1)  # residual(a, b) + 1
report = adjunction_holds(trials=500, semiring=bad, seed=1)
print(report.line(), "<- residual off by one")
print("first counterexample F:", report.counterexample["F"])

print()
for r in run_suite("minmax", trials=200, seed=7):
    print(r.line())
