"""Near-one-factors and one-factors of complete graphs, built by modular sums.

A near-one-factor of the complete graph on an odd number of vertices is a
perfect matching on all vertices but one (the isolated vertex).  For even
order the analogous object is an ordinary perfect matching.  The modular
family indexed by k collects the edges {i, j} with (i + j) % n == k.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass, field

from .numtheory import Residue, half_mod

Edge = tuple[int, int]


def make_edge(u: int, v: int) -> Edge:
    """Canonical (min, max) form of an undirected edge; loops are rejected."""
    u = operator.index(u)
    v = operator.index(v)
    if u == v:
        raise ValueError(f"loop edge ({u}, {v}) is not allowed")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Factor:
    """One (near-)one-factor: a set of edges on the vertices 0..n-1.

    Edges are stored canonically ((min, max), lexicographically sorted).
    `isolated` is the uncovered vertex (odd order only); `index` is an
    optional label, the modular sum k for factors built by this module.
    Structural invariants beyond edge canonicalization are checked by
    validate_factor, not by the constructor, so that externally supplied
    (possibly broken) factors can still be represented and diagnosed.
    """

    n: int
    edges: tuple[Edge, ...]
    isolated: int | None = None
    index: int | None = None

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        if n < 3:
            raise ValueError(f"graph order must be >= 3, got {n}")
        object.__setattr__(self, "n", n)
        canon = sorted(make_edge(u, v) for u, v in self.edges)
        object.__setattr__(self, "edges", tuple(canon))
        if self.isolated is not None:
            object.__setattr__(self, "isolated", operator.index(self.isolated))
        if self.index is not None:
            object.__setattr__(self, "index", operator.index(self.index))

    def partners(self) -> list[int | None]:
        """Vertex -> matched partner (None where uncovered).

        Raises ValueError on out-of-range vertices or double coverage;
        use validate_factor for a non-raising verdict.
        """
        partner: list[int | None] = [None] * self.n
        for u, v in self.edges:
            if not 0 <= u < self.n or not 0 <= v < self.n:
                raise ValueError(f"edge ({u}, {v}) out of range for order {self.n}")
            if partner[u] is not None:
                raise ValueError(f"vertex {u} covered twice")
            if partner[v] is not None:
                raise ValueError(f"vertex {v} covered twice")
            partner[u] = v
            partner[v] = u
        return partner

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "index": self.index,
            "isolated": self.isolated,
            "edges": [[u, v] for u, v in self.edges],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Factor":
        return cls(
            n=data["n"],
            edges=tuple((e[0], e[1]) for e in data["edges"]),
            isolated=data.get("isolated"),
            index=data.get("index"),
        )


@dataclass(frozen=True)
class Factorization:
    """A list of factors intended to partition the edge set of K_n."""

    n: int
    factors: tuple[Factor, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        n = operator.index(self.n)
        if n < 3:
            raise ValueError(f"graph order must be >= 3, got {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "factors", tuple(self.factors))

    def to_dict(self) -> dict:
        return {"n": self.n, "factors": [f.to_dict() for f in self.factors]}

    @classmethod
    def from_dict(cls, data: dict) -> "Factorization":
        return cls(
            n=data["n"],
            factors=tuple(Factor.from_dict(f) for f in data["factors"]),
        )


@dataclass(frozen=True)
class FactorVerdict:
    """Outcome of validate_factor: valid flag plus the first violation found."""

    valid: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.valid


def validate_factor(f: Factor) -> FactorVerdict:
    """Check the (near-)one-factor invariants, naming the first violated one.

    Odd order: every vertex except the isolated one is covered exactly once.
    Even order: no isolated vertex, every vertex covered exactly once.
    """
    covered = [0] * f.n
    for u, v in f.edges:
        for w in (u, v):
            if not 0 <= w < f.n:
                return FactorVerdict(False, f"vertex {w} out of range for order {f.n}")
        for w in (u, v):
            covered[w] += 1
            if covered[w] > 1:
                return FactorVerdict(False, f"vertex {w} covered twice")
    if f.n % 2 == 1:
        if f.isolated is None:
            return FactorVerdict(False, "odd order requires an isolated vertex")
        if not 0 <= f.isolated < f.n:
            return FactorVerdict(
                False, f"isolated vertex {f.isolated} out of range for order {f.n}"
            )
        if covered[f.isolated]:
            return FactorVerdict(
                False, f"isolated vertex {f.isolated} is covered by an edge"
            )
    elif f.isolated is not None:
        return FactorVerdict(False, "even order admits no isolated vertex")
    uncovered = [w for w in range(f.n) if not covered[w] and w != f.isolated]
    if uncovered:
        return FactorVerdict(False, f"vertices {set(uncovered)} uncovered")
    return FactorVerdict(True)


def build_modular_factor(n: int, k: int) -> Factor:
    """The near-one-factor of odd-order K_n with edges {i, j}, (i+j) % n == k.

    Its isolated vertex is the unique v with (2*v) % n == k.
    """
    n = operator.index(n)
    k = operator.index(k)
    if n < 3:
        raise ValueError(f"graph order must be >= 3, got {n}")
    if n % 2 == 0:
        raise ValueError(f"modular near-one-factor requires odd order, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"factor index {k} not in [0, {n})")
    edges = []
    for i in range(n):
        j = (k - i) % n
        if i < j:
            edges.append((i, j))
    return Factor(n=n, edges=tuple(edges), isolated=half_mod(k, n).value, index=k)


def build_modular_factor_even(n: int, k: int) -> Factor:
    """The modular one-factor (perfect matching) of even-order K_n for index k.

    Odd k: all pairs {i, j} with (i + j) % n == k.
    Even k: the pair {k/2, (n+k)/2} (the two solutions of 2*i == k mod n)
    plus every pair {i, j} of the remaining vertices with (i + j) % n == k.
    """
    n = operator.index(n)
    k = operator.index(k)
    if n < 4 or n % 2 == 1:
        raise ValueError(f"modular one-factor requires even order >= 4, got {n}")
    if not 0 <= k < n:
        raise ValueError(f"factor index {k} not in [0, {n})")
    edges = []
    skip: tuple[int, ...] = ()
    if k % 2 == 0:
        a, b = k // 2, (n + k) // 2
        edges.append((a, b))
        skip = (a, b)
    for i in range(n):
        if i in skip:
            continue
        j = (k - i) % n
        if i < j:
            edges.append((i, j))
    return Factor(n=n, edges=tuple(edges), isolated=None, index=k)


def build_modular_factorization(n: int) -> Factorization:
    """All n modular near-one-factors of odd-order K_n, in index order."""
    return Factorization(
        n=n, factors=tuple(build_modular_factor(n, k) for k in range(operator.index(n)))
    )


def factor_index_of_edge(n: int, e: Edge) -> Residue:
    """Index of the unique modular factor of odd-order K_n containing edge e."""
    n = operator.index(n)
    if n < 3 or n % 2 == 0:
        raise ValueError(f"modular factor lookup requires odd order >= 3, got {n}")
    u, v = make_edge(e[0], e[1])
    if not 0 <= u < n or not 0 <= v < n:
        raise ValueError(f"edge ({u}, {v}) out of range for order {n}")
    return Residue((u + v) % n, n)


def factorization_problems(fz: Factorization) -> list[str]:
    """All partition-level defects of a factorization (empty list = valid).

    Checks each factor individually, then edge-disjointness, full coverage
    of E(K_n), and (for odd order) that every vertex is isolated exactly once.
    Even-order input is treated as a one-factorization with n - 1 factors.
    """
    problems: list[str] = []
    n = fz.n
    expected = n if n % 2 == 1 else n - 1
    if len(fz.factors) != expected:
        problems.append(
            f"expected {expected} factors for order {n}, found {len(fz.factors)}"
        )
    orders_ok = True
    for pos, f in enumerate(fz.factors):
        if f.n != n:
            problems.append(f"factor {pos} has order {f.n}, expected {n}")
            orders_ok = False
            continue
        verdict = validate_factor(f)
        if not verdict:
            problems.append(f"factor {pos} invalid: {verdict.reason}")
    if not orders_ok:
        return problems
    seen: dict[Edge, int] = {}
    duplicates = False
    for pos, f in enumerate(fz.factors):
        for e in f.edges:
            if e in seen:
                problems.append(f"edge {e} appears in factors {seen[e]} and {pos}")
                duplicates = True
            else:
                seen[e] = pos
    full = n * (n - 1) // 2
    if not duplicates and len(seen) < full:
        problems.append(f"{full - len(seen)} edges of the complete graph are missing")
    if n % 2 == 1:
        iso_count = [0] * n
        for f in fz.factors:
            if f.isolated is not None and 0 <= f.isolated < n:
                iso_count[f.isolated] += 1
        for v, c in enumerate(iso_count):
            if c != 1 and len(fz.factors) == expected:
                problems.append(f"vertex {v} is isolated in {c} factors, expected 1")
    return problems
