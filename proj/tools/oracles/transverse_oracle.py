#!/usr/bin/env python3
"""Reference computation for the transverse-oscillation system, used to freeze test constants.

The map is built from (all on the universal cover, angle x, radius r <= 0):
  h:   (x, r) -> (x, r - delta(r) cos(2 pi x)),  delta(r) = 0.2 r^2 / (1 + r^4)
  Phi: (x, r) -> (x + r sin(2 pi r), r)          (radial twist)
  psi: r -> 1/(r^2 + 1) - 2                      (compression onto (-2, -1])
  F = psi Phi h Phi^-1 psi^-1 on the band s in (-2, -1], identity elsewhere.

The two invariant strings are Phi-images of the vertical lines x = 0 and x = 1/2.
On string 0 the radial recurrence is r <- r - delta(r); on string 1/2 it is
r <- r + delta(r) (so its backward orbit descends). The lifted angle of the string
point at radius r is theta + r sin(2 pi r).
"""
import math

TWO_PI = 2.0 * math.pi


def delta(r):
    r2 = r * r
    return 0.2 * r2 / (1.0 + r2 * r2)


def ddelta(r):
    # d/dr [0.2 r^2/(1+r^4)] = 0.4 r (1 - r^4) / (1 + r^4)^2
    r2 = r * r
    r4 = r2 * r2
    return 0.4 * r * (1.0 - r4) / ((1.0 + r4) ** 2)


def psi(r):
    return 1.0 / (r * r + 1.0) - 2.0


def psi_inv(s):
    return -math.sqrt(1.0 / (s + 2.0) - 1.0)


def forward_drift_string0(n_max):
    # forward orbit of q = lift of psi Phi (0, -1); drift = r_n sin(2 pi r_n)
    r = -1.0
    drifts = [r * math.sin(TWO_PI * r)]
    mx, mn, argmx, argmn = drifts[0], drifts[0], 0, 0
    for n in range(1, n_max + 1):
        r = r - delta(r)
        d = r * math.sin(TWO_PI * r)
        if d > mx:
            mx, argmx = d, n
        if d < mn:
            mn, argmn = d, n
    return mx, argmx, mn, argmn, r


def backward_drift_string_half(n_max):
    # backward orbit of p = lift of psi Phi (1/2, -1): solve r_prev + delta(r_prev) = r
    r = -1.0
    mx, mn, argmx, argmn = 0.0, 0.0, 0, 0
    for n in range(1, n_max + 1):
        target = r
        lo, hi = r - 0.11, r  # delta <= 0.1 everywhere
        for _ in range(80):
            mid = 0.5 * (lo + hi)
            if mid + delta(mid) < target:
                lo = mid
            else:
                hi = mid
        r = 0.5 * (lo + hi)
        d = r * math.sin(TWO_PI * r)
        if d > mx:
            mx, argmx = d, n
        if d < mn:
            mn, argmn = d, n
    return mx, argmx, mn, argmn, r


def u_at(x, s):
    # one-step angular displacement of F at lift point (x, s)
    if s <= -2.0 or s > -1.0:
        return 0.0
    r = psi_inv(s)
    y = x - r * math.sin(TWO_PI * r)
    rh = r - delta(r) * math.cos(TWO_PI * y)
    return (y + rh * math.sin(TWO_PI * rh)) - x


def grid_sup(density):
    sup = 0.0
    arg = None
    for i in range(density):
        s = -2.0 + (i + 0.5) / density  # region s in [-2, -1]
        for j in range(density):
            x = j / density
            a = abs(u_at(x, s))
            if a > sup:
                sup, arg = a, (x, s)
    return sup, arg


def main():
    # pointwise displacement at the marked point q = (0, -1.5)
    print("u(q=(0,-1.5)) =", repr(u_at(0.0, -1.5)))

    # fiber monotonicity of h: min over grid of 1 - delta'(r) cos(2 pi x)
    m = min(1.0 - ddelta(-8.0 + 16.0 * i / 4000) * math.cos(TWO_PI * j / 97)
            for i in range(4001) for j in range(97))
    print("min d(phi)/dr on grid =", m)

    for n in (10**4, 10**5):
        mx, amx, mn, amn, r = forward_drift_string0(n)
        print(f"forward q n={n}: max={mx:.6f}@{amx} min={mn:.6f}@{amn} r_end={r:.4f}")
    for n in (10**4, 10**5):
        mx, amx, mn, amn, r = backward_drift_string_half(n)
        print(f"backward p n={n}: max={mx:.6f}@{amx} min={mn:.6f}@{amn} r_end={r:.4f}")

    s512, a512 = grid_sup(512)
    s2048, _ = grid_sup(2048)
    print("grid sup |u| d=512 :", repr(s512), "at", a512, " bound:", repr(1.1 * s512))
    print("grid sup |u| d=2048:", repr(s2048), " ratio:", s512 / s2048)


if __name__ == "__main__":
    main()
