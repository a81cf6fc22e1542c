"""The two 3-dimensional fans with six common rays: same quantum ideal, different SR ideals."""
from toricqh import cohomology_rings as cr
from toricqh.fixtures import flop_sigma1, flop_sigma2

s1, s2 = flop_sigma1(), flop_sigma2()
for label, fan in (("Sigma1", s1), ("Sigma2", s2)):
    sr = [p.to_str() for p in cr.stanley_reisner_ideal(fan)]
    print(f"{label}: {len(fan.max_cones)} maximal cones, SR = <{', '.join(sr)}>")
    print("  ordinary basis:", cr.ordinary_ring(fan).gb.to_strs())

phi = (1, 1, 2, 1, 1, 1)  # sorted-ray order; strictly convex on Sigma1
ctx = cr.make_context(cr.canonical_fan(s1), phi)
print("quantum basis (grevlex):", cr.quantum_ring(ctx, cr.GREVLEX).gb.to_strs())
r = cr.flop_compare(s1, s2, phi)
print(f"quantum ideals equal: {r.quantum_equal}; ordinary bases equal: {r.ordinary_equal}")
