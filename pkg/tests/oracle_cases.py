"""Shared comparison of the transversal predicates against element-scan oracles."""

from __future__ import annotations

from subembed import PermGroup
from subembed import oracles as O
from subembed.embedding import (
    is_abnormal,
    is_closed,
    is_extremely_closed_in_G,
    is_gamma_triple,
    is_isolated,
    is_ne_subgroup,
    is_pronormal,
    is_special_triple,
    is_w_triple,
)
from subembed.lattice import SubgroupLattice
from subembed.numtheory import prime_factors
from subembed.structure import o_p_prime, solvable_radical, sylow_subgroup
from subembed.subgroups import normalizer


def elems(H: PermGroup) -> frozenset:
    return frozenset(g.images for g in H.elements())


def _gens(H: PermGroup) -> str:
    return ";".join(str(g) for g in H.generators) or "()"


def predicate_disagreements(G: PermGroup, all_overgroups: bool = True) -> tuple[int, list[str]]:
    """Compare every predicate on every subgroup ``H`` of ``G``.

    Triple predicates run with ``M = N_G(H)`` and, when ``all_overgroups``,
    with every ``M`` between ``H`` and ``G``.  Returns the number of
    comparisons and a description of each disagreement.
    """
    d = G.degree
    lat = SubgroupLattice(G)
    subs = [(s, lat.to_group(s), None) for s in lat.subgroups]
    subs = [(s, H, elems(H)) for s, H, _ in subs]
    eg = elems(G)
    bad: list[str] = []
    count = 0

    def cmp(label: str, got: bool, want: bool) -> None:
        nonlocal count
        count += 1
        if got != want:
            bad.append(f"{label}: implementation {got}, oracle {want}")

    for s, H, eh in subs:
        N = normalizer(G, H)
        en = elems(N)
        tag = f"|G|={G.order} H={_gens(H)}"
        cmp(f"pronormal {tag}", is_pronormal(H, G).holds, O.pronormal(eh, eg, d))
        cmp(f"abnormal {tag}", is_abnormal(H, G).holds, O.abnormal(eh, eg, d))
        cmp(f"ne {tag}", is_ne_subgroup(H, G).holds, O.ne(eh, eg, d))
        cmp(
            f"extremely-closed-in-G {tag}",
            is_extremely_closed_in_G(H, G).holds,
            O.closed("extreme", eh, en, eg, d),
        )
        overgroups = [(N, en)]
        if all_overgroups:
            overgroups += [(lat.to_group(t), None) for t in lat.subgroups if SubgroupLattice.contains(t, s)]
        for M, em in overgroups:
            em = em if em is not None else elems(M)
            mtag = f"{tag} M={_gens(M)}"
            for kind in ("weak", "strong", "extreme"):
                for all_g in (False, True) if kind == "extreme" else (False,):
                    cmp(
                        f"{kind} all_g={all_g} {mtag}",
                        is_closed(kind, H, M, G, all_g=all_g).holds,
                        O.closed(kind, eh, em, eg, d, all_g),
                    )
            cmp(f"special {mtag}", is_special_triple(G, M, H).holds, O.special(eh, em, eg, d))
            cmp(f"w-triple {mtag}", is_w_triple(G, M, H).holds, O.w_triple(eh, em, eg))
            cmp(f"gamma {mtag}", is_gamma_triple(G, M, H).holds, O.gamma(eh, em, eg, d))
        if H.order > 1 and len(prime_factors(H.order)) == 1 and len(H.generators) == 1:
            x = H.generators[0]
            P = sylow_subgroup(G, prime_factors(H.order)[0], start=H)
            cmp(f"isolated {tag}", is_isolated(x, P, G).holds, O.isolated(x.images, elems(P), eg))
    return count, bad


def structure_disagreements(G: PermGroup) -> list[str]:
    eg, d = elems(G), G.degree
    bad = []
    for p in prime_factors(G.order) + [7]:
        if elems(o_p_prime(G, p)) != O.o_p_prime(eg, d, p):
            bad.append(f"o_p_prime p={p} |G|={G.order}")
    if elems(solvable_radical(G)) != O.solvable_radical(eg, d):
        bad.append(f"solvable_radical |G|={G.order}")
    return bad
