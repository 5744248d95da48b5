"""Walk through the sum-rule family construction on a small complete graph.

For odd n, factor k of K_n consists of every edge {i, j} with
i + j = k (mod n); exactly one vertex is left out of each factor, and the
n factors together use every edge exactly once.
"""

from nearfactor import (
    build_modular_factor_even,
    build_modular_factorization,
    factorization_problems,
    validate_factor,
)

N = 9


def main() -> None:
    fz = build_modular_factorization(N)
    print(f"sum-rule family of K_{N}: {len(fz.factors)} factors")
    print()
    for f in fz.factors:
        pairs = "  ".join(f"{u}-{v}" for u, v in f.edges)
        print(f"  factor {f.index}: isolated {f.isolated}, edges {pairs}")
    print()

    problems = factorization_problems(fz)
    print(f"partition check: {'clean' if not problems else problems}")
    total_edges = sum(len(f.edges) for f in fz.factors)
    print(f"edge budget: {total_edges} edges across factors, "
          f"K_{N} has {N * (N - 1) // 2}")
    isolated = sorted(f.isolated for f in fz.factors)
    print(f"each vertex isolated exactly once: {isolated == list(range(N))}")
    print()

    print("even orders get perfect matchings instead (no isolated vertex):")
    for k in range(4):
        f = build_modular_factor_even(8, k)
        pairs = "  ".join(f"{u}-{v}" for u, v in f.edges)
        print(f"  K_8 factor {k}: {pairs}  valid={bool(validate_factor(f))}")


if __name__ == "__main__":
    main()
