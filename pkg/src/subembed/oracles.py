"""Brute-force reference implementations for small groups.

Everything here works on Python sets of image tuples and closes generating
sets by breadth-first multiplication.  No stabilizer chain, transversal or
vectorized routine is used, so these serve as independent oracles for the
fast implementations.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

Elem = tuple[int, ...]


def mul(p: Elem, q: Elem) -> Elem:
    return tuple(q[i] for i in p)


def inv(p: Elem) -> Elem:
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conj(x: Elem, g: Elem) -> Elem:
    return mul(mul(inv(g), x), g)


def closure(gens: Iterable[Elem], degree: int) -> frozenset[Elem]:
    """All products of the generators."""
    gens = [tuple(g) for g in gens]
    ident = tuple(range(degree))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def conj_set(S: frozenset[Elem], g: Elem) -> frozenset[Elem]:
    return frozenset(conj(x, g) for x in S)


def order_of(x: Elem) -> int:
    ident = tuple(range(len(x)))
    y, k = x, 1
    while y != ident:
        y, k = mul(y, x), k + 1
    return k


def normalizer(G: frozenset[Elem], H: frozenset[Elem]) -> frozenset[Elem]:
    return frozenset(g for g in G if conj_set(H, g) == H)


def normal_closure(G: frozenset[Elem], H: frozenset[Elem], degree: int) -> frozenset[Elem]:
    gens = set()
    for g in G:
        gens |= conj_set(H, g)
    return closure(gens, degree)


def is_normal(G: frozenset[Elem], H: frozenset[Elem]) -> bool:
    return all(conj_set(H, g) == H for g in G)


def generated(A: frozenset[Elem], B: Iterable[Elem], degree: int) -> frozenset[Elem]:
    return closure(list(A) + list(B), degree)


# -------------------------------------------------------------- predicates
def closed(kind: str, H: frozenset, M: frozenset, G: frozenset, degree: int, all_g: bool = False) -> bool:
    for g in G:
        if kind == "extreme" and not all_g and g in M:
            continue
        K = conj_set(H, g)
        if kind == "weak":
            if K <= M and K != H:
                return False
        elif kind == "strong":
            if not (M & K) <= H:
                return False
        elif kind == "extreme":
            if generated(H, K, degree) & M != H:
                return False
        else:
            raise ValueError(kind)
    return True


def pronormal(H: frozenset, G: frozenset, degree: int) -> bool:
    for g in G:
        K = conj_set(H, g)
        T = generated(H, K, degree)
        if not any(conj_set(H, u) == K for u in T):
            return False
    return True


def abnormal(H: frozenset, G: frozenset, degree: int) -> bool:
    return all(g in generated(H, conj_set(H, g), degree) for g in G)


def isolated(x: Elem, P: frozenset, G: frozenset) -> bool:
    return {conj(x, g) for g in G} & P == {x}


def special(H: frozenset, M: frozenset, G: frozenset, degree: int) -> bool:
    return is_normal(M, H) and normal_closure(G, H, degree) & M == H


def ne(H: frozenset, G: frozenset, degree: int) -> bool:
    return normal_closure(G, H, degree) & normalizer(G, H) == H


def w_triple(H: frozenset, M: frozenset, G: frozenset) -> bool:
    if not is_normal(M, H):
        return False
    return all(M & conj_set(M, g) <= H for g in G if g not in M)


def gamma(H: frozenset, M: frozenset, G: frozenset, degree: int) -> bool:
    if not len(H) < len(M) < len(G):
        return False
    return all(generated(H, [g], degree) & M == H for g in G if g not in M)


# --------------------------------------------------------------- structure
def all_subgroups(G: frozenset[Elem], degree: int) -> list[frozenset[Elem]]:
    """Every subgroup, by closing cyclic subgroups under pairwise joins."""
    cyclic = {closure([g], degree) for g in G}
    found = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        nxt = set()
        for A in frontier:
            for C in cyclic:
                if C <= A:
                    continue
                J = closure(list(A) + list(C), degree)
                if J not in found:
                    found.add(J)
                    nxt.add(J)
        frontier = nxt
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def normal_subgroups(G: frozenset[Elem], degree: int) -> list[frozenset[Elem]]:
    return [S for S in all_subgroups(G, degree) if is_normal(G, S)]


def is_solvable(G: frozenset[Elem], degree: int) -> bool:
    current = G
    while len(current) > 1:
        comms = {mul(mul(inv(a), inv(b)), mul(a, b)) for a in current for b in current}
        nxt = closure(comms, degree)
        if nxt == current:
            return False
        current = nxt
    return True


def o_p_prime(G: frozenset[Elem], degree: int, p: int) -> frozenset[Elem]:
    """Largest normal p'-subgroup, the maximum over the normal-subgroup lattice."""
    cands = [N for N in normal_subgroups(G, degree) if len(N) % p]
    return max(cands, key=len)


def solvable_radical(G: frozenset[Elem], degree: int) -> frozenset[Elem]:
    cands = [N for N in normal_subgroups(G, degree) if is_solvable(N, degree)]
    return max(cands, key=len)


def composition_factor_orders(G: frozenset[Elem], degree: int) -> list[int]:
    """Orders of composition factors along a chain of maximal normal subgroups."""
    out = []
    current = G
    while len(current) > 1:
        subs = [N for N in normal_subgroups(current, degree) if len(N) < len(current)]
        N = max(subs, key=len)
        out.append(len(current) // len(N))
        current = N
    return out


def is_p_solvable(G: frozenset[Elem], degree: int, p: int) -> bool:
    def ok(n: int) -> bool:
        if n % p:
            return True
        while n % p == 0:
            n //= p
        return n == 1
    return all(ok(n) for n in composition_factor_orders(G, degree))


def distinct_pairs(S: Iterable[Elem]):
    return combinations(sorted(S), 2)
