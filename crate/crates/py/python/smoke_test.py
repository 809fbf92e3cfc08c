"""Quick end-to-end check of the Python bindings."""

import json
import math

import clawtrace as ct

l = ct.construct("l-graph")
m = ct.construct("m-graph")
assert (l.n, l.m) == (7, 8)
assert (m.n, m.m) == (8, 8)
assert abs(l.spectral_radius() - 2.693525202227872) < 1e-9
assert abs(m.spectral_radius() - 2.444234390187247) < 1e-9
assert abs(ct.construct("net").spectral_radius() - (1 + math.sqrt(2))) < 1e-9

g = ct.construct("n-graph", 9)
assert g.is_claw_free() and not g.is_traceable()
assert g.spectral_radius() > g.n - 4
assert ct.Graph.from_graph6(g.to_graph6()) == g

claw = ct.construct("claw")
assert claw.find_claw() is not None and not claw.is_claw_free()

p = ct.Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
assert p.hamilton_path() in ([0, 1, 2, 3, 4], [4, 3, 2, 1, 0])
assert not p.is_hamiltonian()
assert abs(p.hong_bound() - math.sqrt(2 * 4 - 5 + 1)) < 1e-12

b = ct.construct("brousek", "T", "T", "T")
assert b.n == 9 and b.is_two_connected() and not b.is_hamiltonian()
assert b.closure().is_closed()

assert len(ct.enumerate_claw_free(7)) == 191

report = json.loads(ct.verify("main-mu", 7, 8))
assert report["passed"], report
assert [e["matched"] for e in report["exceptions"]] == ["N_4,3", "N_5,3"]

sampled = json.loads(ct.verify("main-complement", 24, 24, seed=5, count=50))
assert sampled["passed"] and sampled["seed"] == 5

try:
    ct.construct("n-graph", 4)
except ValueError:
    pass
else:
    raise AssertionError("expected ValueError")

print("smoke test ok:", len(ct.families()), "families,", len(ct.theorems()), "theorems")
