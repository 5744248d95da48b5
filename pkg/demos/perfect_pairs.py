"""Classify pairs of sum-rule factors three independent ways.

A pair of factors is perfect when their union is a Hamiltonian path between
the two isolated vertices.  The demo shows, on K_9:

  1. the alternating walk that traces the union explicitly,
  2. the closed-form formula that predicts the i-th edge of that walk,
  3. the gcd shortcut: perfect iff gcd(k - l, n) = 1,

and finishes with the count formula n * phi(n) / 2.
"""

from nearfactor import (
    build_modular_factorization,
    classify_pair,
    count_perfect_pairs,
    is_perfect_by_gcd,
    nth_union_edge,
    totient,
    union_walk,
)

N = 9


def show_pair(k: int, l: int) -> None:
    fz = build_modular_factorization(N)
    walk = union_walk(fz.factors[k], fz.factors[l])
    verdict = classify_pair(fz.factors[k], fz.factors[l])
    print(f"factors ({k}, {l}) of K_{N}:")
    print(f"  walk from vertex {walk.start}: {' -> '.join(map(str, walk.vertices))}")
    print(f"  terminal: {walk.terminal}")
    print(f"  covers {len(walk.vertices)}/{N} vertices -> perfect={verdict.perfect}")
    print(f"  gcd({k} - {l}, {N}) = 1? {is_perfect_by_gcd(k, l, N)}")
    if verdict.perfect:
        formula = [nth_union_edge(k, l, N, i) for i in range(1, N)]
        print(f"  closed form reproduces the walk edges: {formula == list(walk.edges)}")
    print()


def main() -> None:
    show_pair(0, 1)   # difference 1, coprime to 9: perfect
    show_pair(0, 3)   # difference 3 divides 9: the walk stalls early

    fz = build_modular_factorization(N)
    count = count_perfect_pairs(fz)
    print(f"perfect pairs in the K_{N} family: {count}")
    print(f"formula n*phi(n)/2 = {N}*{totient(N)}/2 = {N * totient(N) // 2}")
    print()

    print("the same count for a few more orders:")
    for n in (5, 15, 21, 33):
        family = build_modular_factorization(n)
        print(f"  n={n:3d}: counted {count_perfect_pairs(family):4d}"
              f"   formula {n * totient(n) // 2:4d}")


if __name__ == "__main__":
    main()
