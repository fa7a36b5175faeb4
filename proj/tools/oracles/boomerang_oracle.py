#!/usr/bin/env python3
"""Reference computation for the boomerang-drift string system, used to freeze test constants.

State at step n: (n, r_n, theta_n) with
  r_0 = -1,  r_{n+1} = r_n + r_n / (n (r_n^2 + 1)) for n != 0, r_1 = r_0,
  theta_n = tau_{r_n}^n(1/2) where tau_r(t) = t + c(r) (1 - cos 2 pi t)/2, c(r) = 0.3/(1+r^2)
  (backward indices use the inverse recurrence / inverse circle map).
Lifted angle after the twist x -> x - r:  x1(n) = theta_n - r_n, so with rho = 0
  drift(n) = (theta_n - r_n) - (theta_0 - r_0) = (theta_n - 1/2) + (-1 - r_n).

theta chains are independent across n (each n uses its own c(r_n)), so they are advanced
in lockstep: iteration k applies one circle-map step to every chain with |n| >= k.
"""
import numpy as np

TWO_PI = 2.0 * np.pi


def c_of(r):
    return 0.3 / (1.0 + r * r)


def radii_forward(N):
    r = np.empty(N + 1)
    r[0] = -1.0
    for n in range(N):
        if n == 0:
            r[n + 1] = r[n]
        else:
            r[n + 1] = r[n] + r[n] / (n * (r[n] * r[n] + 1.0))
    return r

def radii_backward(N):
    # r_{-k}: index -(k+1) maps to -k using source index n = -(k+1):
    #   r_{-k} = z + z/(n (z^2+1)), z = r_{-(k+1)}; solve for z by bisection (monotone)
    r = np.empty(N + 1)
    r[0] = -1.0
    for k in range(N):
        n = -(k + 1)
        target = r[k]
        lo, hi = target - 2.0, target  # z < target and the update is monotone in z
        g = lambda z: z + z / (n * (z * z + 1.0))
        while g(lo) > target:
            lo -= 1.0
        for _ in range(100):
            mid = 0.5 * (lo + hi)
            if g(mid) > target:
                hi = mid
            else:
                lo = mid
        r[k + 1] = 0.5 * (lo + hi)
    return r


def thetas_forward(c):
    # chain n gets n applications of tau_{c[n]}
    N = len(c) - 1
    u = np.full(N + 1, 0.5)
    for k in range(1, N + 1):
        v = u[k:]
        v += c[k:] * (1.0 - np.cos(TWO_PI * v)) / 2.0
        u[k:] = v
    return u


def thetas_backward(c):
    # chain n gets n applications of tau_{c[n]}^{-1}; Newton per lockstep iteration
    N = len(c) - 1
    u = np.full(N + 1, 0.5)
    for k in range(1, N + 1):
        v = u[k:]
        cc = c[k:]
        x = v.copy()
        for _ in range(60):
            f = x + cc * (1.0 - np.cos(TWO_PI * x)) / 2.0 - v
            fp = 1.0 + cc * np.pi * np.sin(TWO_PI * x)
            step = f / fp
            x -= step
            if np.max(np.abs(step)) < 1e-15:
                break
        u[k:] = x
    return u


def report(tag, drift, n_lo=100):
    N = len(drift) - 1
    run_max = np.maximum.accumulate(drift)
    dip = np.max(run_max[1:] - drift[1:])  # worst monotonicity violation for n > m >= 1
    print(f"{tag}: drift({n_lo})={drift[n_lo]:.9f} drift({N})={drift[N]:.9f} "
          f"growth={drift[N]-drift[n_lo]:.6f} max_dip={dip:.3e} "
          f"estimate={drift[N]/N:.3e}")
    return dip


def main():
    N = 20000
    rf = radii_forward(N)
    tf = thetas_forward(c_of(rf))
    drift_f = (tf - 0.5) + (-1.0 - rf)
    report("forward ", drift_f)

    rb = radii_backward(N)
    tb = thetas_backward(c_of(rb))
    drift_b = (tb - 0.5) + (-1.0 - rb)
    report("backward", drift_b)

    print("r_f[1,2,100,20000] =", rf[1], rf[2], rf[100], rf[20000])
    print("r_b[1,2,100,20000] =", rb[1], rb[2], rb[100], rb[20000])
    print("theta_f[1,2,20000] =", tf[1], tf[2], tf[20000])
    print("theta_b[1,2,20000] =", tb[1], tb[2], tb[20000])

    # tail slope over the last half (least squares on (n, x1)), forward
    n = np.arange(N // 2, N + 1, dtype=float)
    x1 = tf[N // 2:] - rf[N // 2:]
    A = np.vstack([n, np.ones_like(n)]).T
    slope = np.linalg.lstsq(A, x1, rcond=None)[0][0]
    est = (x1[-1] - (tf[0] - rf[0])) / N
    print(f"forward tail_slope={slope:.6e} estimate={est:.6e} residual={abs(est-slope):.6e}")

    # proxy circle map tau_0 (c = 0.3): rotation estimate from 1/2 over 1e4 iterates
    t = 0.5
    for _ in range(10**4):
        t = t + 0.3 * (1.0 - np.cos(TWO_PI * t)) / 2.0
    print("proxy tau_0: (theta_1e4 - 0.5)/1e4 =", (t - 0.5) / 1e4, " theta_1e4 =", t)


if __name__ == "__main__":
    main()
