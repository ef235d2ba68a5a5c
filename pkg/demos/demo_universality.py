"""How common is a small invariant?  Scan whole periods and dilute a block.

Two experiments:

1. For each period n, compute the exact fraction of primitive orbits whose
   invariant r^1 lies below a threshold q.  The fraction is an exact
   rational (every orbit is enumerated; nothing is sampled).

2. Plant the block 10101 inside a sea of zeros.  Padding with k zeros on
   each side yields explicit codes whose invariant drops like 1/(2k+1), so
   arbitrarily small invariants are reached by concrete orbits.
"""

from fractions import Fraction as F

from horseshoe import canonical_code, r_w, universality_sample, universality_scan


def main():
    print("exact fraction of period-n orbits with r^1 < q")
    print()
    print("  n      q=1/3          q=2/5          q=12/25")
    for n in range(8, 17):
        row = [universality_scan("1", q, n) for q in (F(1, 3), F(2, 5), F(12, 25))]
        cells = "".join(f"{str(p):>9} ={float(p):5.3f}" for p in row)
        print(f" {n:>3} {cells}")
    print()
    print("the fractions creep upward with n; near the scope boundary (1/2)")
    print("they move fastest.  for larger periods, sample instead of scanning:")
    p = universality_sample("1", F(2, 5), 24, 4000, seed=7)
    print(f"  n=24, 4000 sampled codes, q=2/5: p ~ {float(p):.3f}")
    print()

    print("diluting the block 10101 with k zeros on each side:")
    for k in range(1, 7):
        code = canonical_code("10101" + "0" * (2 * k))
        r = r_w("1", code)
        print(f"  k={k}  code={code:<20} r^1 = {r}")


if __name__ == "__main__":
    main()
