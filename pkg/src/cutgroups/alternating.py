"""Alternating-group class machinery that never enumerates A_n.

Classes of A_n are indexed by even-parity cycle types.  A type yields two
A_n-classes ("splits") exactly when all its parts are odd and pairwise
distinct; otherwise the centralizer of a representative contains an odd
permutation and the full S_n-class is a single A_n-class.

For split types, whether rep**k is A_n-conjugate to rep is decided by the
parity of the canonical S_n-conjugator matching the cycles of rep**k onto
the cycles of rep.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NotCoprime
from .perm import Permutation


@dataclass(frozen=True)
class AltClassDescriptor:
    n: int
    cycle_type: tuple[int, ...]  # partition of n, decreasing
    splits: bool
    rep: Permutation

    @property
    def rep_order(self) -> int:
        return math.lcm(*self.cycle_type)


def _partitions(n: int, largest: int | None = None):
    """Partitions of n as decreasing tuples, descending lexicographic."""
    if n == 0:
        yield ()
        return
    if largest is None:
        largest = n
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def _type_is_even(parts: tuple[int, ...]) -> bool:
    return sum(length - 1 for length in parts) % 2 == 0


def _canonical_rep(parts: tuple[int, ...], n: int) -> Permutation:
    """Cycles on consecutive points, longest part first."""
    images = list(range(n))
    start = 0
    for length in parts:
        for i in range(length):
            images[start + i] = start + (i + 1) % length
        start += length
    return Permutation(images)


def alternating_classes(n: int) -> list[AltClassDescriptor]:
    """One descriptor per even-parity cycle type of degree n (n >= 3)."""
    if n < 3:
        raise ValueError("alternating classes need n >= 3")
    out = []
    for parts in _partitions(n):
        if not _type_is_even(parts):
            continue
        splits = all(p % 2 == 1 for p in parts) and len(set(parts)) == len(parts)
        out.append(
            AltClassDescriptor(
                n=n, cycle_type=parts, splits=splits, rep=_canonical_rep(parts, n)
            )
        )
    return out


def _cycles_canonical(p: Permutation) -> list[tuple[int, ...]]:
    """All cycles including fixed points, each starting at its least point,
    longest first (ties by least point)."""
    cycles = list(p.cycles())
    moved = {point for c in cycles for point in c}
    cycles.extend((i,) for i in range(p.degree) if i not in moved)
    cycles.sort(key=lambda c: (-len(c), c[0]))
    return cycles


def alternating_power_conjugate(d: AltClassDescriptor, k: int) -> bool:
    """True iff rep**k is A_n-conjugate to rep, for gcd(k, order) = 1.

    Non-split types are immediate (an odd centralizing element exists).  For
    split types, build the canonical conjugator sigma mapping the cycles of
    rep**k onto the cycles of rep and return its parity.
    """
    order = d.rep_order
    if math.gcd(k, order) != 1:
        raise NotCoprime(f"k={k} shares a factor with the element order {order}")
    if not d.splits:
        return True
    rep = d.rep
    target_cycles = _cycles_canonical(rep)
    power_cycles = _cycles_canonical(rep ** k)
    # split type: parts are distinct, so cycles match up by length alone
    images = list(range(d.n))
    for pc, tc in zip(power_cycles, target_cycles):
        for a, b in zip(pc, tc):
            images[a] = b
    sigma = Permutation(images)
    return sigma.is_even()


def alternating_exponent(n: int) -> int:
    """exp(A_n) as the lcm of representative orders over even cycle types."""
    out = 1
    for d in alternating_classes(n):
        out = math.lcm(out, d.rep_order)
    return out
