"""Wall-clock cost of the brute-force facet search as n and the number of
generators grow. Points are drawn near a simplex so most of them stay minimal."""

import random
import sys
import time

from residua.polyhedron import build_newton_polyhedron


def simplex_points(rng, n, m, degree=12):
    pts = {tuple(degree if j == i else 0 for j in range(n)) for i in range(n)}
    while len(pts) < m:
        cuts = sorted(rng.randint(0, degree) for _ in range(n - 1))
        v = [b - a for a, b in zip([0] + cuts, cuts + [degree])]
        v[rng.randrange(n)] += rng.randint(0, 2)
        pts.add(tuple(v))
    return sorted(pts)


def main(max_n=6):
    rng = random.Random(7)
    print(f"{'n':>2} {'gens':>5} {'facets':>7} {'seconds':>8}")
    for n in range(2, max_n + 1):
        for m in (6, 12, 24):
            pts = simplex_points(rng, n, m)
            t0 = time.perf_counter()
            np = build_newton_polyhedron(pts, n)
            dt = time.perf_counter() - t0
            print(f"{n:>2} {len(pts):>5} {len(np.facets):>7} {dt:8.3f}", flush=True)


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 6)
