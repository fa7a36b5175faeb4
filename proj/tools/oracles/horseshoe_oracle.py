#!/usr/bin/env python3
"""Reference computation for horseshoe code statistics, used to freeze test constants.

Codes are binary sequences; s_k = a_0 + ... + a_{k-1}. The liminf/limsup proxies are the
min/max of the partial densities s_k/k over the tail k in [n/2, n]. The alternating-block
code 0^4 1^16 0^64 1^256 ... (lengths 4^(i+1), symbol = i mod 2) must keep the proxies
separated; periodic codes must concentrate at their density.
"""
from fractions import Fraction


def block_code_symbol(i):
    # block j covers [ (4^(j+1)-4)/3, (4^(j+2)-4)/3 ); symbol = j mod 2
    pos, j, length = 0, 0, 4
    while True:
        if i < pos + length:
            return j % 2
        pos += length
        j += 1
        length *= 4


def tail_density_bounds(symbol_at, n):
    s = 0
    lo, hi = Fraction(2), Fraction(-1)
    for k in range(1, n + 1):
        s += symbol_at(k - 1)
        if k >= n // 2:
            d = Fraction(s, k)
            lo, hi = min(lo, d), max(hi, d)
    return lo, hi


def main():
    for n in (10**3, 10**4):
        lo, hi = tail_density_bounds(block_code_symbol, n)
        print(f"blocks n={n}: lo={float(lo):.10f} hi={float(hi):.10f} gap={float(hi-lo):.10f}")
    for word, name in (((0,), "0"), ((1, 0, 0), "100"), ((1, 0), "10"),
                       ((1, 1, 0), "110"), ((1,), "1")):
        lo, hi = tail_density_bounds(lambda i: word[i % len(word)], 3000)
        print(f"periodic {name}: lo={float(lo):.8f} hi={float(hi):.8f}")
    # 2-cycle x-coordinates of the inverse contractions g0(x)=x/5, g1(x)=(x+3)/5
    # fixed point of g1 o g0: x = (x/5 + 3)/5 -> 24x = 15 -> 5/8
    print("cycle(10): x =", 15 / 24, " check:", (0.625 / 5 + 3) / 5)
    # fixed point of g0 o g1: x = (x+3)/25 -> x = 1/8
    print("cycle(01): x =", 3 / 24, " check:", ((0.125 + 3) / 5) / 5)


if __name__ == "__main__":
    main()
