"""Group structure: conjugacy classes, power maps, Sylow subgroups, p-cores,
derived series, exponents.

All class-level machinery enumerates the group and is therefore guarded by
the enumeration cap; generator-level operations (derived subgroup,
solvability) work beyond it.
"""

from __future__ import annotations

import math
import threading
from typing import Sequence

from .errors import BadParam, CapExceeded
from .group import DEFAULT_CAP, PermGroup, trivial_group
from .perm import Permutation, commutator, compose


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    part = 1
    while n % p == 0:
        part *= p
        n //= p
    return part


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class ClassTable:
    """Conjugacy classes of a group: representatives in deterministic order,
    sizes, an element-to-class map, and memoized power-map answers.

    reps[0] is always the identity class.
    """

    def __init__(
        self,
        group: PermGroup,
        reps: list[Permutation],
        sizes: list[int],
        class_of: dict[tuple[int, ...], int],
    ):
        self.group = group
        self.reps = reps
        self.sizes = sizes
        self.class_of = class_of
        self.rep_orders = [r.order() for r in reps]
        self._power_cache: dict[tuple[int, int], int] = {}
        self._cache_lock = threading.Lock()

    def __len__(self) -> int:
        return len(self.reps)

    def class_index(self, p: Permutation) -> int:
        try:
            return self.class_of[p.images]
        except KeyError:
            raise ValueError(f"{p} is not a member of the group") from None

    def power_class(self, c: int, k: int) -> int:
        """Class index of reps[c] ** k; memoized."""
        o = self.rep_orders[c]
        key = (c, k % o)
        cached = self._power_cache.get(key)
        if cached is not None:
            return cached
        idx = self.class_of[(self.reps[c] ** key[1]).images]
        with self._cache_lock:
            self._power_cache[key] = idx
        return idx


def conjugacy_classes(G: PermGroup, cap: int = DEFAULT_CAP) -> ClassTable:
    """Full class partition by orbits of the conjugation action, seeded from
    each yet-unassigned element in enumeration order.  Cached on the group."""
    order = G.order()
    if order > cap:
        raise CapExceeded(order, cap)
    cached = getattr(G, "_class_table", None)
    if cached is not None:
        return cached
    elems = G.elements(cap)
    class_of: dict[tuple[int, ...], int] = {}
    reps: list[Permutation] = []
    sizes: list[int] = []
    for x in elems:
        if x.images in class_of:
            continue
        idx = len(reps)
        class_of[x.images] = idx
        size = 1
        queue = [x]
        while queue:
            y = queue.pop(0)
            for g in G.generators:
                z = y.conjugate_by(g)
                if z.images not in class_of:
                    class_of[z.images] = idx
                    size += 1
                    queue.append(z)
        reps.append(x)
        sizes.append(size)
    table = ClassTable(G, reps, sizes, class_of)
    G._class_table = table
    return table


def are_conjugate(
    G: PermGroup, x: Permutation, y: Permutation, cap: int = DEFAULT_CAP
) -> bool:
    table = conjugacy_classes(G, cap)
    return table.class_index(x) == table.class_index(y)


def power_class(table: ClassTable, c: int, k: int) -> int:
    return table.power_class(c, k)


def class_members(table: ClassTable, cap: int = DEFAULT_CAP) -> list[list[Permutation]]:
    """Members of every class, grouped by class index, in enumeration order."""
    members: list[list[Permutation]] = [[] for _ in table.reps]
    for e in table.group.elements(cap):
        members[table.class_of[e.images]].append(e)
    return members


def class_conjugators(
    G: PermGroup, rep: Permutation
) -> dict[tuple[int, ...], Permutation]:
    """Map each member y of rep's class to a conjugator u with rep ** u = y."""
    identity = Permutation.identity(G.degree)
    out = {rep.images: identity}
    queue = [(rep, identity)]
    while queue:
        y, u = queue.pop(0)
        for g in G.generators:
            z = y.conjugate_by(g)
            if z.images not in out:
                w = compose(u, g)
                out[z.images] = w
                queue.append((z, w))
    return out


class Subgroup:
    """A subgroup of a parent group, carried as a generating set.

    Every generator is verified to sift through the parent's chain.
    """

    def __init__(self, parent: PermGroup, gens: Sequence[Permutation]):
        gens = tuple(gens)
        for g in gens:
            if not parent.contains(g):
                raise ValueError(f"generator {g} is not a member of the parent")
        if not gens:
            gens = (Permutation.identity(parent.degree),)
        self.parent = parent
        self.gens = gens
        self.as_group = PermGroup(parent.degree, list(gens))

    def order(self) -> int:
        return self.as_group.order()

    def __repr__(self) -> str:
        gens = ", ".join(str(g) for g in self.gens)
        return f"Subgroup(order={self.order()}, gens=[{gens}])"


def _reduce_to_generators(
    degree: int, members: Sequence[Permutation]
) -> list[Permutation]:
    """Greedy generating subset of a member list, in deterministic order."""
    gens: list[Permutation] = []
    current: PermGroup | None = None
    for x in members:
        if x.is_identity():
            continue
        if current is None or not current.contains(x):
            gens.append(x)
            current = PermGroup(degree, gens)
    return gens


def _normalizer_members(
    G: PermGroup, H: PermGroup, cap: int
) -> list[Permutation]:
    """Elements of G normalizing H, in G's enumeration order.

    g normalizes H iff every generator of H conjugates into H (the conjugate
    subgroup has the same order, so containment forces equality).
    """
    out = []
    for g in G.elements(cap):
        if all(H.contains(h.conjugate_by(g)) for h in H.generators):
            out.append(g)
    return out


def normalizer(G: PermGroup, H: Subgroup, cap: int = DEFAULT_CAP) -> Subgroup:
    """N_G(H), by filtering the enumeration of G."""
    order = G.order()
    if order > cap:
        raise CapExceeded(order, cap)
    members = _normalizer_members(G, H.as_group, cap)
    return Subgroup(G, _reduce_to_generators(G.degree, members))


def sylow(G: PermGroup, p: int, cap: int = DEFAULT_CAP) -> Subgroup:
    """A Sylow p-subgroup via normalizer growth.

    Start from the p-part of the first element of order divisible by p;
    while the subgroup is smaller than the p-part of |G|, adjoin the p-part
    of the first normalizer element that lands outside it.  Deterministic
    because every scan follows the enumeration order.  Returns the trivial
    subgroup when p does not divide |G|.
    """
    if not is_prime(p):
        raise BadParam(f"p must be prime, got {p}")
    order = G.order()
    if order > cap:
        raise CapExceeded(order, cap)
    target = p_part(order, p)
    if target == 1:
        return Subgroup(G, [])
    elems = G.elements(cap)
    gens: list[Permutation] = []
    for x in elems:
        o = x.order()
        if o % p == 0:
            gens.append(x ** (o // p_part(o, p)))
            break
    P = PermGroup(G.degree, gens)
    while P.order() < target:
        for y in _normalizer_members(G, P, cap):
            o = y.order()
            z = y ** (o // p_part(o, p))
            if not z.is_identity() and not P.contains(z):
                gens.append(z)
                P = PermGroup(G.degree, gens)
                break
        else:
            raise AssertionError("normalizer growth stalled below the p-part")
    return Subgroup(G, gens)


def p_core(G: PermGroup, p: int, cap: int = DEFAULT_CAP) -> Subgroup:
    """O_p(G), the largest normal p-subgroup: the elements of a Sylow
    p-subgroup whose entire conjugacy class stays inside it."""
    P = sylow(G, p, cap)
    if P.order() == 1:
        return P
    table = conjugacy_classes(G, cap)
    inside = {e.images for e in P.as_group.elements(cap)}
    members = class_members(table, cap)
    core: list[Permutation] = []
    for c, rep in enumerate(table.reps):
        if rep.images not in inside:
            continue
        if all(m.images in inside for m in members[c]):
            core.extend(members[c])
    return Subgroup(G, _reduce_to_generators(G.degree, core))


def derived_subgroup(H: PermGroup) -> Subgroup:
    """Normal closure of the generator commutators; generator-based, so it
    works beyond the enumeration cap."""
    seeds = []
    seen = set()
    for i, a in enumerate(H.generators):
        for b in H.generators[i + 1 :]:
            c = commutator(a, b)
            if not c.is_identity() and c.images not in seen:
                seen.add(c.images)
                seeds.append(c)
    if not seeds:
        return Subgroup(H, [])
    gens = list(seeds)
    D = PermGroup(H.degree, gens)
    queue = list(seeds)
    while queue:
        d = queue.pop(0)
        for g in H.generators:
            e = d.conjugate_by(g)
            if not D.contains(e):
                gens.append(e)
                D = PermGroup(H.degree, gens)
                queue.append(e)
    return Subgroup(H, gens)


def is_solvable(G: PermGroup) -> bool:
    """Derived series reaches the trivial group within log2 |G| steps."""
    current = G
    for _ in range(G.order().bit_length() + 1):
        order = current.order()
        if order == 1:
            return True
        D = derived_subgroup(current).as_group
        if D.order() == order:
            return False
        current = D
    return current.order() == 1


def exponent(G: PermGroup, cap: int = DEFAULT_CAP) -> int:
    """lcm of element orders over the enumeration."""
    out = 1
    for e in G.elements(cap):
        out = math.lcm(out, e.order())
    return out


def is_elementary_abelian(H: PermGroup, p: int) -> bool:
    """H abelian with exponent dividing p.

    Both checks are generator-level: abelian means all generator pairs
    commute, and then the exponent is the lcm of the generator orders.
    """
    gens = H.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1 :]:
            if compose(a, b) != compose(b, a):
                return False
    exp = 1
    for g in gens:
        exp = math.lcm(exp, g.order())
    return p % exp == 0


def abelianization_exponent_divides(
    P: PermGroup, p: int, cap: int = DEFAULT_CAP
) -> bool:
    """True iff x**p lies in P' for every x in P, i.e. exp(P/P') divides p,
    without constructing the quotient."""
    D = derived_subgroup(P).as_group
    return all(D.contains(x ** p) for x in P.elements(cap))
