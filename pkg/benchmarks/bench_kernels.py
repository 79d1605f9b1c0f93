"""Benchmark the compiled bit kernels against the pure-Python fallback.

Times the three kernel entry points on representative workloads (the order
evaluation and exhaustive scan dominate the acceptance suite's runtime) and
one end-to-end workload, the shift-order lemma scan over all 3^|E| edge
separations of a 10-edge graph.

Run:  python benchmarks/bench_kernels.py
"""

import random
import time

from sepdual._kernels import _pure

try:
    from sepdual._kernels import _fast
except ImportError:
    _fast = None


def _graph_masks(nx, ny, p, seed):
    rng = random.Random(seed)
    adj_y = [0] * ny
    for i in range(nx):
        for j in range(ny):
            if rng.random() < p:
                adj_y[j] |= 1 << i
    return adj_y


def _bench(label, fn, number):
    t0 = time.perf_counter()
    for _ in range(number):
        fn()
    return time.perf_counter() - t0


def _pairs(n, count, seed):
    rng = random.Random(seed)
    full = (1 << n) - 1
    out = []
    for _ in range(count):
        a = rng.randint(0, full)
        b = (full ^ a) | rng.randint(0, full)
        out.append((a, b))
    return out


def main():
    backends = [("pure", _pure)]
    if _fast is not None:
        backends.append(("compiled", _fast))
    else:
        print("compiled extension not available; timing the fallback only")

    masks6 = _graph_masks(6, 6, 0.6, 1)
    pairs6 = _pairs(6, 2000, 2)
    masks10 = _graph_masks(10, 10, 0.5, 3)

    workloads = [
        ("order2 (6x6 graph, 2000 pairs)",
         lambda impl: [impl.order2(masks6, a, b) for a, b in pairs6], 20),
        ("shift2 (6x6 graph, 2000 pairs)",
         lambda impl: [impl.shift2(masks6, a, b) for a, b in pairs6], 20),
        ("scan_members (3^10 separations)",
         lambda impl: impl.scan_members(masks10, 10), 5),
        ("scan_members partitions (2^16)",
         lambda impl: impl.scan_members(_graph_masks(16, 8, 0.4, 4), 16, True), 5),
    ]

    print(f"{'workload':42} " + " ".join(f"{n:>10}" for n, _ in backends)
          + "    speedup")
    for label, body, number in workloads:
        times = []
        for _, impl in backends:
            times.append(_bench(label, lambda: body(impl), number) / number)
        cells = " ".join(f"{t * 1e3:9.2f}ms" for t in times)
        speedup = f"{times[0] / times[-1]:9.1f}x" if len(times) > 1 else ""
        print(f"{label:42} {cells} {speedup}")

    # end-to-end: the shift-order lemma over every edge separation
    from sepdual import Sep, edges_to_side, from_edges
    from sepdual.orders import order2_of

    g = from_edges([(f"x{i + 1}", f"y{i + 1}") for i in range(5)]
                   + [(f"x{(i + 1) % 5 + 1}", f"y{i + 1}") for i in range(5)])
    assert g.n_edges == 10

    def lemma_scan(impl):
        inc = g.inc_x + g.inc_y
        violations = 0
        for o2, a, b in impl.scan_members(inc, g.n_edges):
            back = edges_to_side(g, Sep(a, b), "x")
            if order2_of(g, "x", back.a, back.b) > o2:
                violations += 1
        return violations

    print()
    for name, impl in backends:
        t0 = time.perf_counter()
        v = lemma_scan(impl)
        dt = time.perf_counter() - t0
        print(f"lemma scan over 3^10 edge separations [{name}]: "
              f"{dt:.2f}s, violations={v}")


if __name__ == "__main__":
    main()
