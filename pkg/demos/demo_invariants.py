"""Walk through the decoration invariant on a single period-15 orbit.

The invariant r^w of an orbit code measures how hard it is to destroy the
orbit while keeping a w-decorated companion alive: lower values mean the
orbit forces more.  It is assembled from three window statistics (mu, nu,
lambda), each an extremal height over rays read off the code next to an
occurrence of the decoration.
"""

from fractions import Fraction as F

from horseshoe import lam, mu, nu, r_star, r_w, scope

CODE = "100010111001010"
W = "1"


def main():
    print(f"orbit code : {CODE}   (period {len(CODE)})")
    print(f"decoration : {W!r}   scope(w) = {scope(W)}")
    print()

    m, n, l = mu(W, CODE), nu(W, CODE), lam(W, CODE)
    print(f"mu     = {m}   (forward rays at each window end)")
    print(f"nu     = {n}   (backward rays at each window start)")
    print(f"lambda = {l}   (two-sided windows)")

    r = r_w(W, CODE)
    print(f"r^w    = min(lambda, max(mu, nu)) = {r}")
    assert r == min(l, max(m, n))
    print()

    # The all-decorations summary: r* is the minimum of r^w over every w,
    # which for this orbit is already reached by the single-letter one.
    print(f"r*({CODE}) = {r_star(CODE)}")
    print()

    # The combination rule holds for every orbit, not just this one.
    for code in ("10010110", "10011010", "10000011100"):
        parts = tuple(f(W, code) for f in (mu, nu, lam))
        print(
            f"{code}: mu={parts[0]} nu={parts[1]} lambda={parts[2]}"
            f"  ->  r^1 = {r_w(W, code)}"
        )


if __name__ == "__main__":
    main()
