#!/usr/bin/env python3
"""Smoke tests for the python bindings."""

import math

import applf

# genus and point counts
assert applf.genus(3, 2, 1, [1, 1]) == 3
assert applf.count_points(3, 2, 1, 1, [1], [2]) == 4
assert applf.count_points(3, 2, 1, 1, [1], [2], naive=True) == 4
assert applf.trace(3, 2, 1, 1, [1], [2]) == 0

# the classical genus-3 curve at p = 7: formula equals enumeration, Weil bound
count = applf.count_points(7, 3, 2, 1, [1, 1], [2, 3])
assert count == applf.count_points(7, 3, 2, 1, [1, 1], [2, 3], naive=True)
assert abs(applf.trace(7, 3, 2, 1, [1, 1], [2, 3])) <= 6 * math.sqrt(7)

# exact period values: cubic characters with zero arguments give -1 in Z[w]
value = applf.eval_pd(7, 2, [2, 2], 0, [0, 0])
assert value == {"level": 3, "coeffs": [-1, 0]}

fd = applf.eval_fd(7, 2, [2, 2], 0, [2, 3])
assert fd["den"] == {"level": 3, "coeffs": [-1, 0]}

# other scalar helpers
assert applf.hasse_invariant(7, 1, 1) == 1
assert applf.zeta_pair(7, 0, 0) == (1, 1)

# verification harness
assert len(applf.list_identities()) == 36
report = applf.verify("hasse-cong", 7, mode="exhaustive")
assert report["pass"] and report["cases_checked"] == 49

# the cubic transformation genuinely fails at degenerate argument tuples,
# and the harness pinpoints them
report = applf.verify("cubic-f1", 7, mode="exhaustive")
assert not report["pass"]
assert report["cases_checked"] == 42 and report["failure_count"] == 12
assert "off {0,1}: 0" in report.get("note", "")

entries = applf.sweep("hasse-cong", 7, 20)
primes = [e["prime"] for e in entries if not e.get("skipped")]
assert primes == [7, 13, 19]

# errors arrive as ValueError subclasses
try:
    applf.count_points(9, 2, 1, 1, [1], [2])
except ValueError:
    pass
else:
    raise AssertionError("expected ValueError for composite modulus")

try:
    applf.verify("cubic-f1", 11)
except ValueError:
    pass
else:
    raise AssertionError("expected ValueError for incompatible prime")

print("python smoke tests passed")
