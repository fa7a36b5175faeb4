#!/usr/bin/env python3
"""Reference winding computation for polyline arc pairs, used to freeze test constants.

Winding unit is the half-turn: the direction angle of g2(t) - g(t) is atan2(dy, dx)/pi,
unwrapped by nearest lift over a dense common parameter grid. Dense uniform sampling
(plus all original vertex parameters) stands in for the adaptive refinement of the
library implementation; agreement within ~1e-9 is expected for polylines because the
difference path is piecewise linear in t.
"""
import math


def interp(params, verts, t):
    # piecewise-linear interpolation of the polyline by parameter
    if t <= params[0]:
        return verts[0]
    if t >= params[-1]:
        return verts[-1]
    import bisect
    i = bisect.bisect_right(params, t) - 1
    i = min(i, len(params) - 2)
    t0, t1 = params[i], params[i + 1]
    s = 0.0 if t1 == t0 else (t - t0) / (t1 - t0)
    (x0, y0), (x1, y1) = verts[i], verts[i + 1]
    return (x0 + s * (x1 - x0), y0 + s * (y1 - y0))


def dense_winding(g, g2, n=200001):
    pa, va = g
    pb, vb = g2
    ts = sorted(set([i / (n - 1) for i in range(n)] + list(pa) + list(pb)))
    w = 0.0
    prev = None
    for t in ts:
        ax, ay = interp(pa, va, t)
        bx, by = interp(pb, vb, t)
        dx, dy = bx - ax, by - ay
        norm = math.hypot(dx, dy)
        assert norm > 1e-12, f"coincident at t={t}"
        ang = math.atan2(dy, dx) / math.pi  # half-turn units
        if prev is not None:
            d = ang - prev
            d -= 2.0 * round(d / 2.0)  # principal difference in (-1, 1]
            assert abs(d) < 0.5, f"step too large at t={t}: {d}"
            w += d
        prev = ang
    return w


def uniform(verts):
    n = len(verts)
    return ([i / (n - 1) for i in range(n)], verts)


def seg_intersect(p, q, r, s):
    # proper or touching intersection of segments pq and rs
    def orient(a, b, c):
        v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
        return 0 if v == 0 else (1 if v > 0 else -1)

    def on_seg(a, b, c):
        return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
                and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))

    o1, o2 = orient(p, q, r), orient(p, q, s)
    o3, o4 = orient(r, s, p), orient(r, s, q)
    if o1 != o2 and o3 != o4:
        return True
    for (a, b, c) in ((p, q, r), (p, q, s), (r, s, p), (r, s, q)):
        if orient(a, b, c) == 0 and on_seg(a, b, c):
            return True
    return False


def assert_simple(verts):
    n = len(verts) - 1
    for i in range(n):
        for j in range(i + 2, n):
            if i == 0 and j == n - 1 and verts[0] == verts[-1]:
                continue
            assert not seg_intersect(verts[i], verts[i + 1], verts[j], verts[j + 1]), \
                f"segments {i} and {j} intersect"


def main():
    # pair 1: parallel vertical arcs -> w = 0
    g = uniform([(0.0, 0.0), (0.0, -1.0)])
    g2 = uniform([(1.0, 0.0), (1.0, -1.0)])
    print("parallel:", dense_winding(g, g2))

    # pair 2: g descends right, g2 loops left and lands left of all of g
    # (landing order hypothesis (g2(1))_1 < min(g)_1; expect nearest int -1)
    g = uniform([(0.0, 0.0), (1.0, -1.0)])
    g2 = uniform([(2.0, 0.0), (2.0, -2.0), (-2.0, -2.0), (-2.0, -0.5), (-1.0, -0.5)])
    w_under = dense_winding(g, g2)
    print("under:", w_under, "round:", round(w_under))

    # pair 2b: same but g2 makes one extra full negative loop around g before
    # landing; each full loop shifts w by -2 -> expect -3 region.  The polyline
    # spirals inward so it stays simple (verified below) even though it must
    # cross g itself.
    loop_verts = [
        (2.0, 0.0), (2.0, -2.0), (-2.0, -2.0), (-2.0, -0.25), (1.75, -0.25),
        (1.75, -1.75), (-1.5, -1.75), (-1.5, -0.5), (-1.0, -0.5)]
    assert_simple(loop_verts)
    g2b = uniform(loop_verts)
    w_loop = dense_winding(g, g2b)
    print("under+loop:", w_loop, "round:", round(w_loop))

    # pair 3: mirrored hypothesis: max(g2)_1 < (g(1))_1; expect nearest int +1
    g = uniform([(0.0, 0.0), (0.0, -2.0), (2.5, -2.0), (2.5, -0.8)])
    g2 = uniform([(1.0, 0.0), (0.8, -0.5)])
    w_over = dense_winding(g, g2)
    print("over:", w_over, "round:", round(w_over))


if __name__ == "__main__":
    main()
