"""Time the Groebner engine on the quantum ideals of the fixtures under several orders."""
import time

from toricqh import cohomology_rings as cr
from toricqh.fixtures import ample_phi, fixture, names
from toricqh.symbolic_ring import GREVLEX, MonomialOrder, buchberger


def bench(gens, order, ring, reps=5):
    best = float("inf")
    for _ in range(reps):
        t = time.perf_counter()
        gb = buchberger(gens, order, ring)
        best = min(best, time.perf_counter() - t)
    return best, len(gb)


if __name__ == "__main__":
    print(f"{'fixture':8s} {'order':28s} {'best (ms)':>10s} {'|GB|':>5s}")
    for name in names():
        ctx = cr.make_context(fixture(name), ample_phi(name))
        gens = cr.linear_ideal(ctx.fan, ctx.ring) + cr.quantum_generators(ctx)
        for order in (GREVLEX, cr.quantum_order(ctx), MonomialOrder.lex()):
            t, n = bench(gens, order, ctx.ring)
            print(f"{name:8s} {order.describe():28s} {1000 * t:10.2f} {n:5d}")
