import pytest

from cutgroups.errors import CapExceeded, DegreeMismatch, EmptyGenerators
from cutgroups.group import PermGroup, build_group, trivial_group
from cutgroups.perm import Permutation, compose, parse_permutation
from cutgroups.constructions import alternating, symmetric


def brute_closure(gens):
    """Independent enumeration oracle: plain set closure over products."""
    degree = gens[0].degree
    seen = {Permutation.identity(degree)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for p in frontier:
            for g in gens:
                q = compose(p, g)
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return seen


class TestConstruction:
    def test_trivial_group(self):
        G = build_group(1, [Permutation.identity(1)])
        assert G.order() == 1

    def test_empty_generators_rejected(self):
        with pytest.raises(EmptyGenerators):
            PermGroup(3, [])

    def test_degree_mismatch_rejected(self):
        with pytest.raises(DegreeMismatch):
            PermGroup(3, [Permutation.identity(4)])

    def test_s3_from_generators(self):
        G = build_group(3, [parse_permutation("(1 2)", 3), parse_permutation("(1 2 3)", 3)])
        assert G.order() == len(brute_closure(list(G.generators))) == 6

    def test_s5_order(self):
        G = build_group(5, [parse_permutation("(1 2 3 4 5)", 5), parse_permutation("(1 2)", 5)])
        assert G.order() == 120


class TestOrder:
    @pytest.mark.parametrize("n,expected", [(2, 2), (3, 6), (4, 24), (5, 120), (6, 720)])
    def test_symmetric_orders(self, n, expected):
        assert symmetric(n).order() == expected

    def test_order_matches_enumeration(self):
        for G in [symmetric(4), alternating(4), symmetric(5)]:
            assert G.order() == len(G.elements())

    def test_order_cached(self):
        G = symmetric(4)
        assert G.order() == G.order() == 24


class TestContains:
    def test_identity_always_member(self):
        G = build_group(4, [parse_permutation("(1 2 3)", 4)])
        assert G.contains(Permutation.identity(4))

    def test_odd_permutation_not_in_a4(self):
        A4 = alternating(4)
        t = parse_permutation("(1 2)", 4)
        assert not A4.contains(t)
        assert t not in A4.elements()

    def test_generator_products_are_members(self):
        G = symmetric(5)
        for a in G.generators:
            for b in G.generators:
                assert G.contains(compose(a, b))

    def test_contains_agrees_with_enumeration(self):
        A4 = alternating(4)
        members = set(A4.elements())
        for images in [(0, 1, 2, 3), (1, 0, 3, 2), (1, 0, 2, 3), (2, 3, 1, 0)]:
            p = Permutation(images)
            assert A4.contains(p) == (p in members)

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatch):
            symmetric(4).contains(Permutation.identity(5))


class TestElements:
    def test_trivial(self):
        assert trivial_group(3).elements() == [Permutation.identity(3)]

    def test_s3_enumeration(self):
        elems = symmetric(3).elements()
        assert len(elems) == 6
        assert elems[0].is_identity()
        assert len(set(elems)) == 6

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded) as exc:
            symmetric(5).elements(cap=100)
        assert exc.value.order == 120

    def test_deterministic_order(self):
        gens = [parse_permutation("(1 2)", 4), parse_permutation("(1 2 3 4)", 4)]
        first = PermGroup(4, gens).elements()
        second = PermGroup(4, gens).elements()
        assert first == second

    def test_matches_brute_closure(self):
        G = alternating(4)
        assert set(G.elements()) == brute_closure(list(G.generators))


class TestChain:
    def test_base_points_smallest_moved_first(self):
        G = symmetric(4)
        base = G.base_points()
        assert base == sorted(base)
        assert base[0] == 0

    def test_large_group_order_without_enumeration(self):
        # degree 10 with order well beyond any sensible cap
        G = symmetric(10)
        assert G.order() == 3628800
