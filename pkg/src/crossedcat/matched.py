"""Matched pairs of groups, the Zappa-Szep product, and exact factorizations.

Conventions.  Both structure maps are stored as left actions on sets:
act1[g][s] is g acting on s in Gamma, act2[s][g] is s acting on g in G.
The twisted product realizes the rearrangement rule

    s * g = (s |>2 g^-1)^-1 * (g^-1 |>1 s)

so pairs (g, s), encoded g*|Gamma| + s, mean "G part times Gamma part".
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import NoUniqueFactorization, NotExact, NotMatched
from .groups import (FiniteGroup, GroupActionOnSet, GroupHom, group_hom,
                     subgroup_as_group, trivial_action, validate_group)
from .report import VerificationReport, run_checks


@dataclass(frozen=True)
class MatchedPair:
    G: FiniteGroup
    Gamma: FiniteGroup
    act1: GroupActionOnSet  # G on the set Gamma, left
    act2: GroupActionOnSet  # Gamma on the set G, left

    def a1(self, g: int, s: int) -> int:
        return self.act1.table[g][s]

    def a2(self, s: int, g: int) -> int:
        return self.act2.table[s][g]


def matched_pair(G: FiniteGroup, Gamma: FiniteGroup,
                 act1: Sequence[Sequence[int]], act2: Sequence[Sequence[int]]) -> MatchedPair:
    t1 = tuple(tuple(int(x) for x in row) for row in act1)
    t2 = tuple(tuple(int(x) for x in row) for row in act2)
    return MatchedPair(G, Gamma,
                       GroupActionOnSet(G, Gamma.order, t1),
                       GroupActionOnSet(Gamma, G.order, t2))


def direct_pair(G: FiniteGroup, Gamma: FiniteGroup) -> MatchedPair:
    """Both actions trivial; Zappa-Szep is then the direct product."""
    return MatchedPair(G, Gamma, trivial_action(G, Gamma.order), trivial_action(Gamma, G.order))


def turaev_pair(G: FiniteGroup) -> MatchedPair:
    """(G, G) with |>1 the adjoint action and |>2 trivial."""
    a1 = tuple(tuple(G.conj(g, s) for s in G.elements()) for g in G.elements())
    return MatchedPair(G, G, GroupActionOnSet(G, G.order, a1), trivial_action(G, G.order))


def verify_matched_pair(mp: MatchedPair, jobs: int = 1) -> VerificationReport:
    """All matched-pair axioms, exhaustively; first lexicographic witness per axiom."""
    G, M = mp.G, mp.Gamma
    rep = VerificationReport(subject="matched-pair")

    def act1_action() -> Optional[tuple]:
        for s in M.elements():
            if mp.a1(G.identity, s) != s:
                return (G.identity, s)
        for g, h, s in itertools.product(G.elements(), G.elements(), M.elements()):
            if mp.a1(g, mp.a1(h, s)) != mp.a1(G.mul(g, h), s):
                return (g, h, s)
        return None

    def act2_action() -> Optional[tuple]:
        for g in G.elements():
            if mp.a2(M.identity, g) != g:
                return (M.identity, g)
        for s, t, g in itertools.product(M.elements(), M.elements(), G.elements()):
            if mp.a2(s, mp.a2(t, g)) != mp.a2(M.mul(s, t), g):
                return (s, t, g)
        return None

    def unit1() -> Optional[tuple]:
        for g in G.elements():
            if mp.a1(g, M.identity) != M.identity:
                return (g,)
        return None

    def unit2() -> Optional[tuple]:
        for s in M.elements():
            if mp.a2(s, G.identity) != G.identity:
                return (s,)
        return None

    def match1() -> Optional[tuple]:
        # g |>1 (s t) = ((t |>2 g) |>1 s)(g |>1 t)
        for g, s, t in itertools.product(G.elements(), M.elements(), M.elements()):
            if mp.a1(g, M.mul(s, t)) != M.mul(mp.a1(mp.a2(t, g), s), mp.a1(g, t)):
                return (g, s, t)
        return None

    def match2() -> Optional[tuple]:
        # s |>2 (g h) = ((h |>1 s) |>2 g)(s |>2 h)
        for s, g, h in itertools.product(M.elements(), G.elements(), G.elements()):
            if mp.a2(s, G.mul(g, h)) != G.mul(mp.a2(mp.a1(h, s), g), mp.a2(s, h)):
                return (s, g, h)
        return None

    return run_checks(rep, [
        ("act1_is_left_action", act1_action),
        ("act2_is_left_action", act2_action),
        ("act1_fixes_unit", unit1),
        ("act2_fixes_unit", unit2),
        ("matching_relation_1", match1),
        ("matching_relation_2", match2),
    ], jobs=jobs)


# -- Zappa-Szep product ---------------------------------------------------------

def pair_encode(gamma_order: int, g: int, s: int) -> int:
    return g * gamma_order + s


def pair_decode(gamma_order: int, x: int) -> tuple[int, int]:
    return divmod(x, gamma_order)


def zappa_szep(mp: MatchedPair) -> tuple[FiniteGroup, GroupHom, GroupHom]:
    """The twisted product on G x Gamma with its two subgroup embeddings.

    (g, s)(g', s') = (g * (s |>2 g'^-1)^-1, (g'^-1 |>1 s) * s').
    """
    rep = verify_matched_pair(mp)
    if not rep.passed:
        raise NotMatched(rep)
    G, M = mp.G, mp.Gamma
    n = G.order * M.order
    table = [[0] * n for _ in range(n)]
    for g in G.elements():
        for s in M.elements():
            row = table[g * M.order + s]
            for g2 in G.elements():
                gi = G.inv(g2)
                first_g = G.mul(g, G.inv(mp.a2(s, gi)))
                s_twist = mp.a1(gi, s)
                for s2 in M.elements():
                    row[g2 * M.order + s2] = first_g * M.order + M.mul(s_twist, s2)
    H = validate_group(table, G.identity * M.order + M.identity, f"{G.name}><{M.name}")
    embed_g = group_hom(G, H, [g * M.order + M.identity for g in G.elements()])
    embed_m = group_hom(M, H, [G.identity * M.order + s for s in M.elements()])
    return H, embed_g, embed_m


def from_exact_factorization(H: FiniteGroup, g_set: Sequence[int],
                             gamma_set: Sequence[int]) -> MatchedPair:
    """Extract the matched pair of an exact factorization H = G * Gamma.

    For each (s, g), factor s*g^-1 = a*b with a in G, b in Gamma; then
    s |>2 g := a^-1 and g |>1 s := b.  Subgroups keep the order given in
    g_set / gamma_set when reindexed.
    """
    g_set = list(g_set)
    gamma_set = list(gamma_set)
    gs, ms = set(g_set), set(gamma_set)
    for name, sub in (("G", gs), ("Gamma", ms)):
        if H.identity not in sub:
            raise NotExact(f"{name} does not contain the identity")
        for a in sub:
            if H.inv(a) not in sub:
                raise NotExact(f"{name} not closed under inverse at {a}")
            for b in sub:
                if H.mul(a, b) not in sub:
                    raise NotExact(f"{name} not closed under product at ({a},{b})")
    if gs & ms != {H.identity}:
        raise NotExact("subgroups intersect beyond the identity")
    if len(g_set) * len(gamma_set) != H.order:
        raise NotExact(f"|G|*|Gamma| = {len(g_set) * len(gamma_set)} != |H| = {H.order}")

    gpos = {x: i for i, x in enumerate(g_set)}
    mpos = {x: i for i, x in enumerate(gamma_set)}
    factor: dict[int, tuple[int, int]] = {}
    for a in g_set:
        for b in gamma_set:
            x = H.mul(a, b)
            if x in factor:
                raise NoUniqueFactorization(f"element {x} factors twice")
            factor[x] = (a, b)
    assert len(factor) == H.order

    a1 = [[0] * len(gamma_set) for _ in g_set]
    a2 = [[0] * len(g_set) for _ in gamma_set]
    for si, s in enumerate(gamma_set):
        for gi, g in enumerate(g_set):
            a, b = factor[H.mul(s, H.inv(g))]
            a2[si][gi] = gpos[H.inv(a)]
            a1[gi][si] = mpos[b]

    Gg = subgroup_as_group(H, g_set, name=f"{H.name}.G")
    Mg = subgroup_as_group(H, gamma_set, name=f"{H.name}.Gamma")
    mp = matched_pair(Gg, Mg, a1, a2)
    rep = verify_matched_pair(mp)
    if not rep.passed:
        raise NotMatched(rep)
    return mp


def multiplication_hom(mp: MatchedPair, H: FiniteGroup, g_set: Sequence[int],
                       gamma_set: Sequence[int]) -> GroupHom:
    """(g, s) -> g*s, the canonical iso zappa_szep(extracted pair) -> H."""
    Z, _, _ = zappa_szep(mp)
    image = []
    for x in range(Z.order):
        g, s = pair_decode(mp.Gamma.order, x)
        image.append(H.mul(g_set[g], gamma_set[s]))
    return group_hom(Z, H, image)
