"""Identify the sum-rule family of K_{st} with the product family.

For coprime s and t the remainder map v -> (v mod s, v mod t) is a
bijection on vertices, and it carries factor p of K_{st} exactly onto the
product factor (p mod s, p mod t).  Consequently two superficially
different lower bounds on the perfect-pair count are the same number:

    n * phi(n) / 2  =  2 * (s * phi(s) / 2) * (t * phi(t) / 2),  n = s * t.
"""

from nearfactor import (
    build_equivalence_report,
    crt_vertex_map,
    totient,
    verify_factor_equality,
)

S, T = 3, 5


def main() -> None:
    n = S * T
    print(f"vertex map for K_{n} = K_{S} x K_{T}:")
    row = "  ".join(f"{v}->{crt_vertex_map(v, S, T)}" for v in range(n))
    print(f"  {row}")
    print()

    report = build_equivalence_report(S, T)
    print("factor-by-factor comparison:")
    for p, k, l in report.index_map:
        ok = verify_factor_equality(p, S, T)
        print(f"  factor {p:2d}  <->  product ({k}, {l})   edge sets equal: {ok}")
    print()
    print(f"all {n} factors matched: {report.all_edge_sets_equal}")
    print(f"direct bound  n*phi(n)/2          = {report.direct_bound}")
    print(f"product bound 2*(c_{S})*(c_{T})       = {report.product_bound}")
    print(f"bounds equal: {report.bounds_equal}")
    print()

    print("the identity is totient multiplicativity in disguise:")
    for s, t in ((3, 7), (5, 7), (9, 11), (15, 13)):
        m = s * t
        direct = m * totient(m) // 2
        combined = 2 * (s * totient(s) // 2) * (t * totient(t) // 2)
        print(f"  s={s:2d} t={t:2d}:  {direct:5d} = {combined:5d}")


if __name__ == "__main__":
    main()
