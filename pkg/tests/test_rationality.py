import math

import pytest

from cutgroups.errors import BoundExceeded
from cutgroups.group import PermGroup
from cutgroups.perm import parse_permutation
from cutgroups.rationality import (
    FAIL,
    PASS,
    SKIP,
    class_stabilizer,
    classify_class,
    conjecture_suite,
    group_rationality,
    is_cut_bruteforce,
    lemma61_check,
    qg_degree,
    qg_degree_alternating,
    residues_coprime,
    sylow3_check,
)
from cutgroups.structure import conjugacy_classes, exponent
from cutgroups.constructions import (
    abelian,
    alternating,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    sylnorm,
    symmetric,
)


class TestResidues:
    def test_one(self):
        assert residues_coprime(1) == [1]

    def test_twelve(self):
        assert residues_coprime(12) == [1, 5, 7, 11]

    def test_ten(self):
        assert residues_coprime(10) == [1, 3, 7, 9]

    def test_length_is_totient(self):
        for n in range(1, 40):
            assert len(residues_coprime(n)) == sum(
                1 for k in range(1, n + 1) if math.gcd(k, n) == 1
            )


class TestClassStabilizer:
    def test_identity_class_full(self):
        T = conjugacy_classes(symmetric(3))
        assert class_stabilizer(T, 0) == frozenset({1})  # order 1: unit group is {1}

    def test_c3_generator(self):
        T = conjugacy_classes(cyclic(3))
        c = T.class_of[parse_permutation("(1 2 3)", 3).images]
        assert class_stabilizer(T, c) == frozenset({1})

    def test_five_cycle_in_s5_fully_stable(self):
        T = conjugacy_classes(symmetric(5))
        c = T.class_of[parse_permutation("(1 2 3 4 5)", 5).images]
        assert class_stabilizer(T, c) == frozenset({1, 2, 3, 4})

    def test_closed_under_multiplication(self):
        for G in [dicyclic(3), symmetric(4), cyclic(12)]:
            T = conjugacy_classes(G)
            for c in range(len(T)):
                o = T.rep_orders[c]
                S = class_stabilizer(T, c)
                for a in S:
                    for b in S:
                        assert ((a * b) % o or o) in S


class TestClassifyClass:
    def test_involution_rational(self):
        T = conjugacy_classes(symmetric(3))
        c = T.class_of[parse_permutation("(1 2)", 3).images]
        r = classify_class(T, c)
        assert r.is_rational and r.field_degree == 1

    def test_c3_generator_imaginary_quadratic(self):
        T = conjugacy_classes(cyclic(3))
        c = T.class_of[parse_permutation("(1 2 3)", 3).images]
        r = classify_class(T, c)
        assert not r.is_rational
        assert r.is_inverse_semirational
        assert r.field_degree == 2
        assert r.field_imaginary

    def test_c5_generator_degree_four(self):
        T = conjugacy_classes(cyclic(5))
        c = T.class_of[parse_permutation("(1 2 3 4 5)", 5).images]
        r = classify_class(T, c)
        assert not r.is_semirational
        assert r.field_degree == 4

    @pytest.mark.parametrize(
        "G", [symmetric(4), dicyclic(3), cyclic(12), dihedral(6), alternating(5)],
        ids=["S4", "Dic3", "C12", "D12", "A5"],
    )
    def test_column_field_equivalence(self, G):
        # inverse semi-rational iff the column field is Q or imaginary quadratic
        T = conjugacy_classes(G)
        for c in range(len(T)):
            r = classify_class(T, c)
            expected = r.field_degree == 1 or (r.field_degree == 2 and r.field_imaginary)
            assert r.is_inverse_semirational == expected
            # implication chain
            if r.is_rational:
                assert r.is_inverse_semirational
            if r.is_inverse_semirational:
                assert r.is_semirational


class TestGroupRationality:
    def test_trivial_group(self):
        from cutgroups.group import trivial_group

        rep = group_rationality(trivial_group(1))
        assert rep.is_rational and rep.is_cut and rep.qg_degree == 1

    def test_q8_rational(self):
        rep = group_rationality(dicyclic(2))
        assert rep.is_rational and rep.is_cut

    def test_c5_not_cut(self):
        rep = group_rationality(cyclic(5))
        assert not rep.is_cut and rep.qg_degree == 4

    def test_report_aggregates_match_classes(self):
        rep = group_rationality(symmetric(4))
        assert rep.is_cut == all(r.is_inverse_semirational for r in rep.class_reports)
        assert rep.is_rational == (rep.qg_degree == 1)

    def test_fresh_report_each_call(self):
        G = symmetric(3)
        a = group_rationality(G)
        b = group_rationality(G)
        assert a is not b
        a.check_results["marker"] = None
        assert "marker" not in b.check_results


class TestBruteforceOracle:
    def test_c4_cut(self):
        assert is_cut_bruteforce(cyclic(4))

    def test_c5_not_cut(self):
        assert not is_cut_bruteforce(cyclic(5))

    def test_s3_cut(self):
        assert is_cut_bruteforce(symmetric(3))

    @pytest.mark.parametrize(
        "G",
        [cyclic(6), cyclic(8), dicyclic(2), dicyclic(3), dicyclic(4), symmetric(4),
         dihedral(4), dihedral(5), alternating(4), alternating(5), sylnorm(5),
         direct_product(symmetric(3), cyclic(4))],
        ids=["C6", "C8", "Q8", "Dic3", "Q16", "S4", "D8", "D10", "A4", "A5", "F20", "S3xC4"],
    )
    def test_oracle_matches_class_computation(self, G):
        assert group_rationality(G).is_cut == is_cut_bruteforce(G)


class TestQgDegree:
    def test_s3_rational(self):
        assert qg_degree(symmetric(3)) == 1

    def test_c3(self):
        assert qg_degree(cyclic(3)) == 2

    def test_c5(self):
        assert qg_degree(cyclic(5)) == 4

    @pytest.mark.parametrize(
        "G", [cyclic(7), cyclic(12), symmetric(4), dicyclic(3), alternating(5)],
        ids=["C7", "C12", "S4", "Dic3", "A5"],
    )
    def test_degree_divides_totient_of_exponent(self, G):
        n = exponent(G)
        assert len(residues_coprime(n)) % qg_degree(G) == 0

    def test_degree_one_iff_rational(self):
        for G in [symmetric(4), cyclic(6), dicyclic(2), alternating(4)]:
            assert (qg_degree(G) == 1) == group_rationality(G).is_rational


class TestQgDegreeAlternating:
    @pytest.mark.parametrize("n,expected", [(4, 2), (5, 2), (6, 2), (7, 2)])
    def test_small_degrees(self, n, expected):
        assert qg_degree_alternating(n) == expected

    @pytest.mark.parametrize("n", [4, 5, 6, 7])
    def test_matches_enumeration(self, n):
        assert qg_degree_alternating(n) == qg_degree(alternating(n))

    def test_growth_witness_by_twelve(self):
        assert any(qg_degree_alternating(n) >= 4 for n in range(4, 13))

    def test_bound(self):
        with pytest.raises(BoundExceeded):
            qg_degree_alternating(15)
        with pytest.raises(BoundExceeded):
            qg_degree_alternating(2)


class TestAbelianClassification:
    def test_exponent_criterion_sample(self):
        cases = {
            (2, 2): True, (4,): True, (6,): True, (2, 4): True, (3, 6): True,
            (8,): False, (5,): False, (2, 10): False, (9,): False, (12,): False,
        }
        for factors, expected in cases.items():
            G = abelian(list(factors))
            e = exponent(G)
            assert (e in {1, 2, 3, 4, 6}) == expected
            assert group_rationality(G).is_cut == expected


class TestSylow3Check:
    def test_s3_passes(self):
        assert sylow3_check(symmetric(3)).status == PASS

    def test_c5_skipped(self):
        r = sylow3_check(cyclic(5))
        assert r.status == SKIP

    def test_three_prime_group_passes_trivially(self):
        # cut group with no 3-part: the trivial Sylow 3-subgroup is cut
        assert sylow3_check(cyclic(4)).status == PASS


class TestLemma61Check:
    def test_vacuous_without_three_elements(self):
        r = lemma61_check(cyclic(4))
        assert r.status == PASS and "vacuous" in r.detail

    def test_s3(self):
        assert lemma61_check(symmetric(3)).status == PASS

    @pytest.mark.parametrize(
        "G", [symmetric(4), dicyclic(3), alternating(4), sylnorm(3),
              direct_product(symmetric(3), symmetric(3)), alternating(5)],
        ids=["S4", "Dic3", "A4", "F6", "S3xS3", "A5"],
    )
    def test_theorem_holds(self, G):
        assert lemma61_check(G).status == PASS


class TestConjectureSuite:
    def test_c7_everything_skipped(self):
        results = conjecture_suite(cyclic(7))
        assert set(results) == {"bmp", "tent", "gow_primes", "cut_primes",
                                "hegedus", "ppe", "q3"}
        assert all(r.status == SKIP for r in results.values())

    def test_f20_cut_not_rational(self):
        # the Frobenius group of order 20 is cut but its order-4 classes carry
        # an imaginary quadratic field, so it is not rational
        rep = group_rationality(sylnorm(5))
        assert rep.is_cut and not rep.is_rational and rep.qg_degree == 2

    def test_f20_q3_passes_hegedus_skips(self):
        results = conjecture_suite(sylnorm(5))
        assert results["q3"].status == PASS
        assert results["hegedus"].status == SKIP  # F20 is not rational

    def test_hegedus_runs_on_solvable_rational(self):
        # S4 is solvable and rational; its trivial Sylow 5-subgroup passes
        results = conjecture_suite(symmetric(4))
        assert results["hegedus"].status == PASS
        assert results["gow_primes"].status == PASS

    def test_s4(self):
        results = conjecture_suite(symmetric(4))
        assert results["bmp"].status == PASS
        assert results["tent"].status == PASS

    def test_no_failures_on_classical_families(self):
        for G in [symmetric(3), symmetric(4), dicyclic(2), dicyclic(3),
                  cyclic(6), sylnorm(5), sylnorm(7), alternating(4)]:
            for name, r in conjecture_suite(G).items():
                assert r.status != FAIL, (name, r.detail)
