"""Build product factors on pair vertices and count their perfect pairs.

The product factor (k, l) on K_s x K_t joins (i, j) with (k - i, l - j)
taken modulo (s, t).  Flattened to K_{st} it is again a near-one-factor.
For coprime s and t the family beats the naive expectation: the number of
perfect pairs is exactly twice the product of the constituent counts.

The non-coprime case is genuinely different and the demo shows it: the
two-gcd index criterion would still accept many pairs, but the alternating
walk can only ever cover lcm-many vertices, so no pair is perfect.
"""

from nearfactor import (
    build_product_factor,
    count_perfect_product_pairs,
    predicted_perfect_product_pairs,
    product_bound,
    totient,
)


def show_factor(s: int, t: int, k: int, l: int) -> None:
    pf = build_product_factor(s, t, k, l)
    print(f"product factor ({k}, {l}) on K_{s} x K_{t}:")
    print(f"  isolated pair vertex: {pf.isolated}")
    pairs = "  ".join(f"{a}{b}" for a, b in pf.edges[:4])
    print(f"  first edges: {pairs} ...")
    flat = pf.flattened()
    print(f"  flattened to K_{s * t}: isolated {flat.isolated}, "
          f"{len(flat.edges)} edges")
    print()


def main() -> None:
    show_factor(3, 5, 0, 0)
    show_factor(3, 5, 1, 2)

    print("coprime constituents double the combined count:")
    for s, t in ((3, 5), (3, 7), (5, 7)):
        c_s = s * totient(s) // 2
        c_t = t * totient(t) // 2
        bound = product_bound(s, t, c_s, c_t)
        counted = count_perfect_product_pairs(s, t)
        print(f"  K_{s} x K_{t}: 2 * {c_s} * {c_t} = {bound:4d}"
              f"   walk count {counted:4d}")
    print()

    print("non-coprime constituents break the index criterion:")
    for s, t in ((3, 3), (3, 9)):
        predicted = predicted_perfect_product_pairs(s, t)
        counted = count_perfect_product_pairs(s, t)
        print(f"  K_{s} x K_{t}: criterion would accept {predicted:3d} pairs,"
              f" walk confirms {counted}")
    print("  (with gcd(s, t) > 1 the union walk closes up after")
    print("   lcm(s', t') < s*t vertices, so no pair can be perfect)")


if __name__ == "__main__":
    main()
