"""Print the full decoration-invariant table for period-8 orbits.

Every primitive period-8 orbit of the horseshoe appears as one row; columns
are decorations w, entries are the invariant r^w.  A dot means the value
equals the orbit's own height (so the decoration tells you nothing new);
the star column is r*, the minimum over all decorations.

Orbits related by the left-right symmetry of the horseshoe share a row.
"""

from horseshoe import classify, decinv_table


def main():
    table = decinv_table(8)

    header = ["orbit".ljust(12)] + [d.center(6) for d in table.decorations]
    print("".join(header))
    print("scope".ljust(12) + "".join(str(s).center(6) for s in table.scope_row))
    print("-" * len("".join(header)))

    for row in table.rows:
        cells = [str(v).center(6) for v in row.values]
        print(row.label.ljust(12) + "".join(cells))

    print()
    print("row membership (symmetry classes):")
    for row in table.rows:
        kinds = {classify(m).kind for m in row.members}
        print(f"  {row.label:<12} {sorted(row.members)}  [{'/'.join(sorted(kinds))}]")


if __name__ == "__main__":
    main()
