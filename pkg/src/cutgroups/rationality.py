"""Rationality classification of classes and groups.

An element x is rational when every generator of <x> is conjugate to x, and
inverse semi-rational when every generator of <x> is conjugate to x or to
x⁻¹; a group all of whose elements are inverse semi-rational is a cut group.

Everything here is driven by the Galois-style action of units k mod o on
classes, c -> class of rep**k.  The stabilizer of a class under that action
determines the field generated by the corresponding character-table column:
its degree is the stabilizer's index in the unit group, and the field is
imaginary exactly when complex conjugation (k = o-1) is missing from the
stabilizer.  The degree of the field generated by the whole character table
is likewise the index of the global stabilizer in the units mod exp(G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .alternating import alternating_classes, alternating_power_conjugate
from .errors import BoundExceeded
from .group import DEFAULT_CAP, PermGroup
from .structure import (
    ClassTable,
    abelianization_exponent_divides,
    class_conjugators,
    conjugacy_classes,
    exponent,
    is_elementary_abelian,
    is_solvable,
    p_core,
    prime_divisors,
    sylow,
)

PASS = "PASS"
FAIL = "FAIL"
SKIP = "SKIP"

SUITE_CHECKS = ("bmp", "tent", "gow_primes", "cut_primes", "hegedus", "ppe", "q3")


@dataclass(frozen=True)
class CheckResult:
    status: str  # PASS, FAIL or SKIP
    detail: str

    def as_dict(self) -> dict:
        return {"status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class ClassRationality:
    """Per-class verdicts and the degree of the class's column field."""

    class_index: int
    element_order: int
    stabilizer: tuple[int, ...]  # residues k mod order with rep**k ~ rep
    stabilizer_index: int
    is_rational: bool
    is_inverse_semirational: bool
    is_semirational: bool
    is_real: bool
    field_degree: int
    field_imaginary: bool

    def as_dict(self) -> dict:
        return {
            "class_index": self.class_index,
            "element_order": self.element_order,
            "stabilizer": list(self.stabilizer),
            "rational": self.is_rational,
            "inverse_semirational": self.is_inverse_semirational,
            "semirational": self.is_semirational,
            "real": self.is_real,
            "field_degree": self.field_degree,
            "field_imaginary": self.field_imaginary,
        }


@dataclass
class GroupReport:
    order: int
    solvable: bool
    is_rational: bool
    is_cut: bool
    is_semirational: bool
    qg_degree: int
    class_reports: list[ClassRationality]
    check_results: dict[str, CheckResult] = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "solvable": self.solvable,
            "rational": self.is_rational,
            "cut": self.is_cut,
            "semirational": self.is_semirational,
            "qg_degree": self.qg_degree,
            "classes": [r.as_dict() for r in self.class_reports],
            "checks": {name: r.as_dict() for name, r in self.check_results.items()},
        }


def residues_coprime(n: int) -> list[int]:
    """{k in [1, n] : gcd(k, n) = 1}, ascending; length phi(n)."""
    return [k for k in range(1, n + 1) if math.gcd(k, n) == 1]


def _norm_residue(k: int, n: int) -> int:
    """Representative of k mod n in [1, n]."""
    return (k % n) or n


def class_stabilizer(table: ClassTable, c: int) -> frozenset[int]:
    """Units k mod the rep order with rep**k in the same class."""
    o = table.rep_orders[c]
    return frozenset(
        k for k in residues_coprime(o) if table.power_class(c, k) == c
    )


def classify_class(table: ClassTable, c: int) -> ClassRationality:
    o = table.rep_orders[c]
    units = residues_coprime(o)
    stab = class_stabilizer(table, c)
    degree = len(units) // len(stab)
    is_real = o <= 2 or (o - 1) in stab
    inverse_closure = stab | {_norm_residue((o - 1) * s, o) for s in stab}
    return ClassRationality(
        class_index=c,
        element_order=o,
        stabilizer=tuple(sorted(stab)),
        stabilizer_index=degree,
        is_rational=len(stab) == len(units),
        is_inverse_semirational=inverse_closure == set(units),
        is_semirational=degree <= 2,
        is_real=is_real,
        field_degree=degree,
        field_imaginary=not is_real,
    )


def _solvable_cached(G: PermGroup) -> bool:
    cached = getattr(G, "_solvable", None)
    if cached is None:
        cached = is_solvable(G)
        G._solvable = cached
    return cached


def _qg_degree_from_table(table: ClassTable) -> int:
    n = 1
    for o in table.rep_orders:
        n = math.lcm(n, o)
    units = residues_coprime(n)
    fixed = [
        k
        for k in units
        if all(table.power_class(c, k) == c for c in range(len(table)))
    ]
    return len(units) // len(fixed)


def group_rationality(G: PermGroup, cap: int = DEFAULT_CAP) -> GroupReport:
    """Classify every class and aggregate the group-level verdicts."""
    table = conjugacy_classes(G, cap)
    reports = [classify_class(table, c) for c in range(len(table))]
    return GroupReport(
        order=G.order(),
        solvable=_solvable_cached(G),
        is_rational=all(r.is_rational for r in reports),
        is_cut=all(r.is_inverse_semirational for r in reports),
        is_semirational=all(r.is_semirational for r in reports),
        qg_degree=_qg_degree_from_table(table),
        class_reports=reports,
    )


def qg_degree(G: PermGroup, cap: int = DEFAULT_CAP) -> int:
    """Degree of the field generated by all character-table entries, via the
    index of the global power-map stabilizer in the units mod exp(G)."""
    return _qg_degree_from_table(conjugacy_classes(G, cap))


def _inverse_images(images: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * len(images)
    for i, j in enumerate(images):
        out[j] = i
    return tuple(out)


def is_cut_bruteforce(G: PermGroup, cap: int = DEFAULT_CAP) -> bool:
    """The definition verdict, element by element, with no class-table
    shortcuts: for every x and every k coprime to its order, search the full
    enumeration for a conjugate of x**k equal to x or x⁻¹.

    Exists solely as a cross-oracle for group_rationality().is_cut.
    """
    elems = G.elements(cap)
    for x in elems:
        o = x.order()
        if o <= 2:
            continue
        conjugates = {x.conjugate_by(g).images for g in elems}
        targets = conjugates | {_inverse_images(im) for im in conjugates}
        for k in range(2, o):
            if math.gcd(k, o) == 1 and (x ** k).images not in targets:
                return False
    return True


def qg_degree_alternating(n: int, bound: int = 14) -> int:
    """Same fixed-group computation as qg_degree, but over the alternating
    class descriptors, never enumerating A_n."""
    if not 3 <= n <= bound:
        raise BoundExceeded(f"n={n} outside supported range 3..{bound}")
    descriptors = alternating_classes(n)
    exp = 1
    for d in descriptors:
        exp = math.lcm(exp, d.rep_order)
    split_stabs = []
    for d in descriptors:
        if not d.splits:
            continue
        o = d.rep_order
        stab = {
            j for j in residues_coprime(o) if alternating_power_conjugate(d, j)
        }
        split_stabs.append((o, stab))
    units = residues_coprime(exp)
    fixed = [
        k
        for k in units
        if all(_norm_residue(k, o) in stab for o, stab in split_stabs)
    ]
    return len(units) // len(fixed)


def _is_power_of(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1


def sylow3_check(G: PermGroup, cap: int = DEFAULT_CAP) -> CheckResult:
    """Is the Sylow 3-subgroup of a cut group itself cut?

    A FAIL is a potential counterexample to an open question and carries the
    witness subgroup's generators.
    """
    report = group_rationality(G, cap)
    if not report.is_cut:
        return CheckResult(SKIP, "group is not cut")
    P = sylow(G, 3, cap)
    sub_report = group_rationality(P.as_group, cap)
    if sub_report.is_cut:
        return CheckResult(PASS, f"Sylow 3-subgroup of order {P.order()} is cut")
    gens = ", ".join(str(g) for g in P.gens)
    return CheckResult(
        FAIL,
        f"cut group has a non-cut Sylow 3-subgroup of order {P.order()};"
        f" generators: {gens}",
    )


def lemma61_check(G: PermGroup, cap: int = DEFAULT_CAP) -> CheckResult:
    """For every element of 3-power order, inverse semi-rationality in G must
    match inverse semi-rationality in a Sylow 3-subgroup reached by an
    explicit conjugator.  This is a theorem: a FAIL means an implementation
    bug, not a discovery."""
    table = conjugacy_classes(G, cap)
    three_classes = [
        c
        for c in range(len(table))
        if table.rep_orders[c] > 1 and _is_power_of(table.rep_orders[c], 3)
    ]
    if not three_classes:
        return CheckResult(PASS, "vacuous: no elements of 3-power order")
    P = sylow(G, 3, cap)
    inside = {e.images for e in P.as_group.elements(cap)}
    sub_table = conjugacy_classes(P.as_group, cap)
    sub_isr: dict[int, bool] = {}
    checked = 0
    for c in three_classes:
        isr_in_g = classify_class(table, c).is_inverse_semirational
        member = None
        for images, _ in class_conjugators(G, table.reps[c]).items():
            if images in inside:
                member = images
                break
        if member is None:  # every 3-element class meets every Sylow 3-subgroup
            raise AssertionError("class of a 3-element misses the Sylow subgroup")
        sc = sub_table.class_of[member]
        if sc not in sub_isr:
            sub_isr[sc] = classify_class(sub_table, sc).is_inverse_semirational
        if sub_isr[sc] != isr_in_g:
            return CheckResult(
                FAIL,
                f"class of {table.reps[c]}: inverse semi-rational in G is"
                f" {isr_in_g} but {sub_isr[sc]} in the Sylow 3-subgroup",
            )
        checked += table.sizes[c]
    return CheckResult(
        PASS, f"{checked} elements of 3-power order agree with the Sylow verdict"
    )


def conjecture_suite(G: PermGroup, cap: int = DEFAULT_CAP) -> dict[str, CheckResult]:
    """The named theorem/conjecture checks, each PASS/FAIL/SKIP.

    SKIP means the hypothesis is not met; FAIL means the hypothesis held and
    the conclusion did not, which for the open-question checks would be a
    publishable counterexample.
    """
    report = group_rationality(G, cap)
    order = G.order()
    solvable = report.solvable
    cut = report.is_cut
    rational = report.is_rational
    primes = prime_divisors(order)
    results: dict[str, CheckResult] = {}

    if cut and order > 1:
        ok = order % 2 == 0 or order % 3 == 0
        results["bmp"] = CheckResult(
            PASS if ok else FAIL,
            f"order {order} divisible by 2 or 3" if ok else f"order {order} coprime to 6",
        )
    else:
        results["bmp"] = CheckResult(SKIP, "needs a nontrivial cut group")

    if solvable and cut:
        ok = report.qg_degree <= 32
        results["tent"] = CheckResult(
            PASS if ok else FAIL, f"character field degree {report.qg_degree} vs bound 32"
        )
    else:
        results["tent"] = CheckResult(SKIP, "needs a solvable cut group")

    if solvable and rational:
        bad = sorted(set(primes) - {2, 3, 5})
        results["gow_primes"] = CheckResult(
            PASS if not bad else FAIL,
            "prime divisors within {2, 3, 5}" if not bad else f"extra primes {bad}",
        )
    else:
        results["gow_primes"] = CheckResult(SKIP, "needs a solvable rational group")

    if solvable and cut:
        bad = sorted(set(primes) - {2, 3, 5, 7})
        results["cut_primes"] = CheckResult(
            PASS if not bad else FAIL,
            "prime divisors within {2, 3, 5, 7}" if not bad else f"extra primes {bad}",
        )
    else:
        results["cut_primes"] = CheckResult(SKIP, "needs a solvable cut group")

    if solvable and rational:
        P5 = sylow(G, 5, cap)
        O5 = p_core(G, 5, cap)
        normal = P5.order() == O5.order()
        elem_ab = is_elementary_abelian(P5.as_group, 5)
        ok = normal and elem_ab
        results["hegedus"] = CheckResult(
            PASS if ok else FAIL,
            f"Sylow 5 order {P5.order()}: normal={normal}, elementary abelian={elem_ab}",
        )
    else:
        results["hegedus"] = CheckResult(SKIP, "needs a solvable rational group")

    if cut:
        P3 = sylow(G, 3, cap)
        ok = abelianization_exponent_divides(P3.as_group, 3, cap)
        results["ppe"] = CheckResult(
            PASS if ok else FAIL,
            f"exp(P/P') of the order-{P3.order()} Sylow 3-subgroup"
            f" {'divides' if ok else 'does not divide'} 3",
        )
    else:
        results["ppe"] = CheckResult(SKIP, "needs a cut group")

    if solvable and cut:
        detail = []
        ok = True
        for p in (5, 7):
            core = p_core(G, p, cap)
            exp = exponent(core.as_group, cap)
            if p % exp != 0:
                ok = False
            detail.append(f"exp O_{p} = {exp}")
        results["q3"] = CheckResult(PASS if ok else FAIL, "; ".join(detail))
    else:
        results["q3"] = CheckResult(SKIP, "needs a solvable cut group")

    return results
