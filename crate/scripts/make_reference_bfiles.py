#!/usr/bin/env python3
"""Write local reference b-files for the OEIS sequences used by `gridfree oeis-check`.

The OEIS site is not always reachable from build machines, so these files are
generated from each sequence's own combinatorial definition rather than from the
grid enumeration they are meant to cross-check:

  A035607  points of L1 norm m in Z^d, read by antidiagonals
           (coefficient of x^m in ((1+x)/(1-x))^d)
  A110110  symmetric Schroeder paths of length 2n
  A006318  large Schroeder numbers (Schroeder paths of length 2n)

If you have the official b-files, drop them into data/oeis/ instead; the
parser accepts either.
"""
import sys
from pathlib import Path


def poly_mul(a, b, cap):
    out = [0] * min(len(a) + len(b) - 1, cap + 1)
    for i, x in enumerate(a):
        if x == 0 or i > cap:
            continue
        for j, y in enumerate(b):
            if i + j > cap:
                break
            out[i + j] += x * y
    return out


def l1_points(d, m):
    # (1+x)/(1-x) = 1 + 2x + 2x^2 + ...
    base = [1] + [2] * m
    acc = [1]
    for _ in range(d):
        acc = poly_mul(acc, base, m)
    return acc[m] if m < len(acc) else 0


def a035607(rows):
    out = []
    for s in range(rows):
        for m in range(s + 1):
            out.append(l1_points(s - m + 1, m))
    return out


def paths_by_height(length):
    """Nonnegative paths with steps U=(1,1), D=(1,-1), H=(2,0) of x-length `length`."""
    dp = [dict() for _ in range(length + 1)]
    dp[0][0] = 1
    for x in range(length):
        for h, v in dp[x].items():
            dp[x + 1][h + 1] = dp[x + 1].get(h + 1, 0) + v
            if h > 0:
                dp[x + 1][h - 1] = dp[x + 1].get(h - 1, 0) + v
            if x + 2 <= length:
                dp[x + 2][h] = dp[x + 2].get(h, 0) + v
    return dp


def a006318(terms):
    return [paths_by_height(2 * n)[2 * n].get(0, 0) for n in range(terms)]


def a110110(terms):
    # A symmetric path is fixed by its left half; either the halves meet at
    # x = n, or a single H step straddles the midpoint.
    out = []
    for n in range(terms):
        full = sum(paths_by_height(n)[n].values())
        straddle = sum(paths_by_height(n - 1)[n - 1].values()) if n >= 1 else 0
        out.append(full + straddle)
    return out


def write(path, seq_id, values, note):
    with open(path, "w") as f:
        f.write(f"# {seq_id} (locally generated: {note})\n")
        for i, v in enumerate(values):
            f.write(f"{i} {v}\n")


def main():
    out = Path(sys.argv[1] if len(sys.argv) > 1 else "data/oeis")
    out.mkdir(parents=True, exist_ok=True)
    write(out / "b035607.txt", "A035607", a035607(30), "L1 lattice-point counts")
    write(out / "b110110.txt", "A110110", a110110(101), "symmetric Schroeder paths")
    write(out / "b006318.txt", "A006318", a006318(61), "Schroeder path counts")


if __name__ == "__main__":
    main()
