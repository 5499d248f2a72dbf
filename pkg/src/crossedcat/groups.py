"""Finite groups as Cayley tables over dense indices 0..order-1.

Everything downstream (matched pairs, pointed categories, centers) indexes
into these tables, so all verification here is exhaustive and exact.
Supported envelope is order <= 64; fixtures stay far below that.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Optional, Sequence

from .errors import AssocViolation, MalformedTable, ModulusTooSmall, NoIdentity, NoInverse

Table = tuple[tuple[int, ...], ...]


def _freeze(table: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(int(x) for x in row) for row in table)


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: Table  # table[a][b] = index of a*b
    identity: int
    inverses: tuple[int, ...]
    name: str = "G"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def elements(self) -> range:
        return range(self.order)

    def element_order(self, a: int) -> int:
        n, x = 1, a
        while x != self.identity:
            x = self.mul(x, a)
            n += 1
        return n

    def exponent(self) -> int:
        return lcm(*(self.element_order(a) for a in self.elements())) if self.order > 1 else 1

    def is_abelian(self) -> bool:
        return all(self.mul(a, b) == self.mul(b, a)
                   for a in self.elements() for b in self.elements())

    def power(self, a: int, n: int) -> int:
        x = self.identity
        if n < 0:
            a, n = self.inv(a), -n
        for _ in range(n):
            x = self.mul(x, a)
        return x

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"


def validate_group(table: Sequence[Sequence[int]], identity: Optional[int] = None,
                   name: str = "G") -> FiniteGroup:
    """Check all three group laws exhaustively and derive inverses.

    Raises MalformedTable / NoIdentity / AssocViolation / NoInverse, each
    with a concrete witness.
    """
    t = _freeze(table)
    n = len(t)
    if n == 0:
        raise MalformedTable("empty table")
    for row in t:
        if len(row) != n:
            raise MalformedTable(f"table is not square: row of length {len(row)} in order-{n} table")
        for x in row:
            if not (0 <= x < n):
                raise MalformedTable(f"entry {x} out of range 0..{n - 1}")
    if identity is None:
        identity = next((e for e in range(n)
                         if all(t[e][a] == a and t[a][e] == a for a in range(n))), -1)
        if identity < 0:
            raise NoIdentity(-1, 0)
    else:
        for a in range(n):
            if t[identity][a] != a or t[a][identity] != a:
                raise NoIdentity(identity, a)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if t[t[a][b]][c] != t[a][t[b][c]]:
                    raise AssocViolation(a, b, c)
    inverses = []
    for a in range(n):
        b = next((b for b in range(n) if t[a][b] == identity and t[b][a] == identity), -1)
        if b < 0:
            raise NoInverse(a)
        inverses.append(b)
    return FiniteGroup(n, t, identity, tuple(inverses), name)


# -- constructors -------------------------------------------------------------

def trivial_group(name: str = "1") -> FiniteGroup:
    return validate_group([[0]], 0, name)


def cyclic(n: int, name: Optional[str] = None) -> FiniteGroup:
    return validate_group([[(a + b) % n for b in range(n)] for a in range(n)],
                          0, name or f"Z{n}")


def from_permutations(perms: Sequence[tuple[int, ...]], name: str) -> FiniteGroup:
    """Group generated as given by an explicit closed list of permutations."""
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(len(q)))] for q in perms] for p in perms]
    e = index[tuple(range(len(perms[0])))]
    return validate_group(table, e, name)


def symmetric(n: int) -> FiniteGroup:
    perms = sorted(itertools.permutations(range(n)))
    return from_permutations(perms, f"S{n}")


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the regular n-gon as permutations of vertices (order 2n)."""
    rot = tuple((i + 1) % n for i in range(n))
    ref = tuple((-i) % n for i in range(n))
    elems = close_permutations([rot, ref], n)
    return from_permutations(sorted(elems), f"D{n}")


def close_permutations(gens: Iterable[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    gens = list(gens)
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(g[p[i]] for i in range(n))
            if q not in seen:
                seen.add(q)
                frontier.append(q)
    return seen


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Componentwise product on pairs (a, b) encoded as a*|H| + b."""
    n = G.order * H.order
    table = [[0] * n for _ in range(n)]
    for a in G.elements():
        for b in H.elements():
            for c in G.elements():
                for d in H.elements():
                    table[a * H.order + b][c * H.order + d] = G.mul(a, c) * H.order + H.mul(b, d)
    e = G.identity * H.order + H.identity
    return validate_group(table, e, f"{G.name}x{H.name}")


def product_projections(G: FiniteGroup, H: FiniteGroup, P: FiniteGroup) -> tuple["GroupHom", "GroupHom"]:
    """The two projections of P = direct_product(G, H)."""
    p1 = group_hom(P, G, [x // H.order for x in P.elements()])
    p2 = group_hom(P, H, [x % H.order for x in P.elements()])
    return p1, p2


def subgroup_from_generators(G: FiniteGroup, gens: Iterable[int]) -> list[int]:
    """Closure of gens under product and inverse, as a sorted index list."""
    seen = {G.identity}
    frontier = [G.identity]
    gens = [g for g in gens]
    for g in gens:
        if not 0 <= g < G.order:
            raise MalformedTable(f"generator {g} out of range")
    while frontier:
        x = frontier.pop()
        for g in gens:
            for y in (G.mul(x, g), G.mul(x, G.inv(g))):
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
    return sorted(seen)


def subgroup_as_group(G: FiniteGroup, members: Sequence[int], name: str = "sub") -> FiniteGroup:
    """Reindex a closed subset as its own FiniteGroup (order of `members` kept)."""
    pos = {x: i for i, x in enumerate(members)}
    table = [[pos[G.mul(a, b)] for b in members] for a in members]
    return validate_group(table, pos[G.identity], name)


# -- homomorphisms -------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    source: FiniteGroup
    target: FiniteGroup
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_bijective(self) -> bool:
        return self.source.order == self.target.order and len(set(self.image)) == self.source.order


def group_hom(source: FiniteGroup, target: FiniteGroup, image: Sequence[int]) -> GroupHom:
    """Validated homomorphism; raises ValueError with a witness pair."""
    img = tuple(int(x) for x in image)
    if len(img) != source.order:
        raise ValueError("image array has wrong length")
    if img[source.identity] != target.identity:
        raise ValueError("identity is not preserved")
    for a in source.elements():
        for b in source.elements():
            if img[source.mul(a, b)] != target.mul(img[a], img[b]):
                raise ValueError(f"not a homomorphism at ({a},{b})")
    return GroupHom(source, target, img)


def is_hom_image(source: FiniteGroup, target: FiniteGroup, image: Sequence[int]) -> Optional[tuple]:
    """Witness (a, b) where the hom law fails, or None."""
    for a in source.elements():
        for b in source.elements():
            if image[source.mul(a, b)] != target.mul(image[a], image[b]):
                return (a, b)
    return None


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, tuple(G.elements()))


def kernel(f: GroupHom) -> list[int]:
    return sorted(a for a in f.source.elements() if f.image[a] == f.target.identity)


# -- actions -------------------------------------------------------------------

@dataclass(frozen=True)
class GroupActionOnSet:
    actor: FiniteGroup
    set_size: int
    table: Table  # table[g][x]
    side: str = "left"

    def act(self, g: int, x: int) -> int:
        return self.table[g][x]


def action_violation(a: GroupActionOnSet) -> Optional[tuple]:
    """Witness for a broken action law, or None."""
    G = a.actor
    for x in range(a.set_size):
        if a.table[G.identity][x] != x:
            return ("identity", x)
    for g in G.elements():
        for h in G.elements():
            for x in range(a.set_size):
                composed = a.table[g][a.table[h][x]]
                want = a.table[G.mul(g, h)][x] if a.side == "left" else a.table[G.mul(h, g)][x]
                if composed != want:
                    return ("compose", g, h, x)
    return None


def trivial_action(actor: FiniteGroup, set_size: int) -> GroupActionOnSet:
    return GroupActionOnSet(actor, set_size,
                            tuple(tuple(range(set_size)) for _ in actor.elements()))


@dataclass(frozen=True)
class GroupAutAction:
    """Left action where every actor element acts by a group automorphism."""

    actor: FiniteGroup
    carrier: FiniteGroup
    table: Table

    def act(self, g: int, x: int) -> int:
        return self.table[g][x]

    def as_set_action(self) -> GroupActionOnSet:
        return GroupActionOnSet(self.actor, self.carrier.order, self.table)


def aut_action_violation(a: GroupAutAction) -> Optional[tuple]:
    v = action_violation(a.as_set_action())
    if v is not None:
        return v
    for g in a.actor.elements():
        for x in a.carrier.elements():
            for y in a.carrier.elements():
                if a.table[g][a.carrier.mul(x, y)] != a.carrier.mul(a.table[g][x], a.table[g][y]):
                    return ("automorphism", g, x, y)
    return None


def adjoint_action(G: FiniteGroup) -> GroupAutAction:
    table = tuple(tuple(G.conj(g, x) for x in G.elements()) for g in G.elements())
    return GroupAutAction(G, G, table)


# -- characters ----------------------------------------------------------------

def _generating_set(G: FiniteGroup, members: Sequence[int]) -> list[int]:
    """Greedy generating set for the subgroup given by `members` (global indices)."""
    gens: list[int] = []
    closed = {G.identity}
    for x in members:
        if x in closed:
            continue
        gens.append(x)
        closed = set(subgroup_from_generators_within(G, gens, members))
        if len(closed) == len(members):
            break
    return gens


def subgroup_from_generators_within(G: FiniteGroup, gens: Sequence[int],
                                    universe: Sequence[int]) -> list[int]:
    out = subgroup_from_generators(G, gens)
    if not set(out) <= set(universe):
        raise ValueError("generators escape the subgroup")
    return out


def commutator_members(G: FiniteGroup, members: Sequence[int]) -> list[int]:
    comms = {G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b))) for a in members for b in members}
    return subgroup_from_generators(G, sorted(comms))


def enumerate_characters(G: FiniteGroup, members: Sequence[int], modulus: int) -> list[dict[int, int]]:
    """All homomorphisms from the subgroup on `members` into mu_modulus.

    Characters are returned as {member -> exponent} maps, sorted by their
    exponent tuple over sorted members.  Works by backtracking over images
    of a generating set, factoring through the abelianization.  Raises
    ModulusTooSmall when the abelianization exponent does not divide M.
    """
    members = sorted(members)
    comm = commutator_members(G, members)
    # cosets of the commutator subgroup form the abelianization
    coset_of: dict[int, int] = {}
    reps: list[int] = []
    for x in members:
        if x in coset_of:
            continue
        idx = len(reps)
        reps.append(x)
        for c in comm:
            coset_of[G.mul(x, c)] = idx
    q_order = len(reps)
    q_table = [[coset_of[G.mul(reps[i], reps[j])] for j in range(q_order)] for i in range(q_order)]
    Q = validate_group(q_table, coset_of[G.identity], "ab")
    exp = Q.exponent()
    if modulus % exp != 0:
        raise ModulusTooSmall(modulus, exp)

    gens = _generating_set(Q, list(Q.elements()))
    chars: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()

    def close(assign: dict[int, int]) -> Optional[dict[int, int]]:
        chi = {Q.identity: 0}
        frontier = [Q.identity]
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = Q.mul(x, g)
                v = (chi[x] + assign[g]) % modulus
                if y in chi:
                    if chi[y] != v:
                        return None
                else:
                    chi[y] = v
                    frontier.append(y)
        for a in Q.elements():
            for b in Q.elements():
                if (chi[a] + chi[b]) % modulus != chi[Q.mul(a, b)]:
                    return None
        return chi

    for values in itertools.product(range(modulus), repeat=len(gens)) if gens else [()]:
        assign = dict(zip(gens, values))
        chi = close(assign)
        if chi is None:
            continue
        key = tuple(chi[q] for q in Q.elements())
        if key not in seen:
            seen.add(key)
            chars.append(key)

    out = []
    for key in sorted(set(chars)):
        out.append({x: key[coset_of[x]] for x in members})
    out.sort(key=lambda chi: tuple(chi[x] for x in members))
    return out


# -- isomorphism search ---------------------------------------------------------

def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Optional[GroupHom]:
    """Backtracking search for an isomorphism; None is a definite negative.

    Quick rejects on order and element-order multisets, then generator
    images constrained to elements of equal order.
    """
    if G.order != H.order:
        return None
    if sorted(map(G.element_order, G.elements())) != sorted(map(H.element_order, H.elements())):
        return None
    gens = _generating_set(G, list(G.elements()))
    if not gens:
        return GroupHom(G, H, tuple(H.identity for _ in G.elements()))
    orders = [G.element_order(g) for g in gens]
    candidates = [[h for h in H.elements() if H.element_order(h) == o] for o in orders]

    def extend(i: int, partial: dict[int, int]) -> Optional[dict[int, int]]:
        if len(set(partial.values())) != len(partial):
            return None  # not injective: dead branch
        if i == len(gens):
            if len(partial) != G.order:
                return None
            image = tuple(partial[a] for a in G.elements())
            if len(set(image)) != G.order or is_hom_image(G, H, image) is not None:
                return None
            return partial
        for h in candidates[i]:
            new = dict(partial)
            new[gens[i]] = h
            closed = _close_hom(G, H, new)
            if closed is not None:
                result = extend(i + 1, closed)
                if result is not None:
                    return result
        return None

    found = extend(0, {G.identity: H.identity})
    if found is None:
        return None
    return GroupHom(G, H, tuple(found[a] for a in G.elements()))


def _close_hom(G: FiniteGroup, H: FiniteGroup, seed: dict[int, int]) -> Optional[dict[int, int]]:
    """Multiplicative closure of a partial map; None on contradiction."""
    mapping = dict(seed)
    pairs = list(mapping.items())
    while pairs:
        x, hx = pairs.pop()
        for y, hy in list(mapping.items()):
            for (a, ha), (b, hb) in (((x, hx), (y, hy)), ((y, hy), (x, hx))):
                p, hp = G.mul(a, b), H.mul(ha, hb)
                if p in mapping:
                    if mapping[p] != hp:
                        return None
                else:
                    mapping[p] = hp
                    pairs.append((p, hp))
    return mapping
