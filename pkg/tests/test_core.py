import itertools
import random

import pytest

from structa.core import (
    EndoReport,
    FinMap,
    FinSet,
    all_maps,
    classify,
    compose,
    decompose,
    endo_analyze,
    fiber,
    fiber_partition,
    fiber_union_check,
    finset,
    fold,
    image_calculus,
    inverse,
    iterate,
    left_inverse,
    natural_pair_check,
    right_inverse,
    select,
)
from structa.errors import (
    CarrierMismatch,
    CompositionMismatch,
    EmptyFold,
    EmptyMember,
    NotBijective,
    NotMonic,
    NotOnto,
)

ABC = finset("a", "b", "c")
XYZ = finset("x", "y", "z")


def brute_compose(g, f):
    # independent pointwise oracle
    return {x: g.assign[f.assign[x]] for x in f.dom}


class TestFinSet:
    def test_canonical_order(self):
        s = FinSet(["c", "a", "b", "a"])
        assert s.elements == ("a", "b", "c")

    def test_symbol_validation(self):
        with pytest.raises(ValueError):
            FinSet(["a b"])
        with pytest.raises(ValueError):
            FinSet([""])

    def test_set_ops(self):
        assert ABC.inter(finset("b", "c", "d")) == finset("b", "c")
        assert ABC.diff(finset("a")) == finset("b", "c")
        assert finset("a").union(finset("b")) == finset("a", "b")
        assert list(finset("a", "b").subsets()) == [
            finset(),
            finset("a"),
            finset("b"),
            finset("a", "b"),
        ]


class TestFinMap:
    def test_totality_enforced(self):
        with pytest.raises(CarrierMismatch):
            FinMap(ABC, XYZ, {"a": "x", "b": "y"})
        with pytest.raises(CarrierMismatch):
            FinMap(ABC, XYZ, {"a": "x", "b": "y", "c": "w"})

    def test_extensional_equality(self):
        f = FinMap(ABC, XYZ, {"a": "x", "b": "y", "c": "z"})
        g = FinMap(ABC, XYZ, {"c": "z", "a": "x", "b": "y"})
        assert f == g
        h = FinMap(ABC, finset("x", "y", "z", "w"), f.assign)
        assert f != h  # same assignment, different codomain


class TestCompose:
    def test_identity_unit(self):
        f = FinMap(ABC, XYZ, {"a": "x", "b": "y", "c": "z"})
        assert compose(f, FinMap.identity(ABC)) == f
        assert compose(FinMap.identity(XYZ), f) == f

    def test_constant_through_point(self):
        one = finset("1")
        f = FinMap(finset("a", "b"), one, {"a": "1", "b": "1"})
        g = FinMap(one, finset("z"), {"1": "z"})
        assert compose(g, f) == FinMap.constant(finset("a", "b"), finset("z"), "z")

    def test_strict_mismatch(self):
        f = FinMap(ABC, XYZ, {"a": "x", "b": "y", "c": "z"})
        with pytest.raises(CompositionMismatch):
            compose(f, f)

    def test_random_against_pointwise_oracle(self):
        rng = random.Random(7)
        carrier = finset("p", "q", "r", "s", "t")
        for _ in range(50):
            f = FinMap(carrier, carrier, {x: rng.choice(carrier.elements) for x in carrier})
            g = FinMap(carrier, carrier, {x: rng.choice(carrier.elements) for x in carrier})
            assert compose(g, f).assign == brute_compose(g, f)

    def test_general_mode_restricts(self):
        # f lands partly outside dom g; composite keeps only what g accepts
        f = FinMap(ABC, XYZ, {"a": "x", "b": "y", "c": "z"})
        g = FinMap(finset("x", "y"), finset("u"), {"x": "u", "y": "u"})
        gf = compose(g, f, strict=False)
        assert gf.dom == finset("a", "b")
        assert gf.assign == {"a": "u", "b": "u"}

    def test_associativity(self):
        carrier = finset("a", "b", "c")
        maps = list(all_maps(carrier, carrier))
        for f, g, h in itertools.islice(itertools.product(maps, repeat=3), 500):
            assert compose(h, compose(g, f)) == compose(compose(h, g), f)


class TestClassify:
    def test_identity(self):
        c = classify(FinMap.identity(ABC))
        assert c == {"monic": True, "onto": True, "bijective": True}

    def test_constant_onto_point(self):
        f = FinMap.constant(finset("a", "b"), finset("z"), "z")
        assert classify(f) == {"monic": False, "onto": True, "bijective": False}

    def test_all_27_against_fiber_oracle(self):
        for f in all_maps(ABC, XYZ):
            fibers = [sum(1 for x in f.dom if f.assign[x] == z) for z in f.cod]
            c = classify(f)
            assert c["monic"] == all(n <= 1 for n in fibers)
            assert c["onto"] == all(n >= 1 for n in fibers)
            assert c["bijective"] == (c["monic"] and c["onto"])


class TestInverses:
    def test_swap_self_inverse(self):
        swap = FinMap(finset("a", "b"), finset("a", "b"), {"a": "b", "b": "a"})
        assert inverse(swap) == swap

    def test_left_inverse_selection_rule(self):
        f = FinMap(finset("a"), finset("x", "y"), {"a": "x"})
        l = left_inverse(f)
        assert l.assign == {"x": "a", "y": "a"}
        assert compose(l, f) == FinMap.identity(f.dom)

    def test_right_inverse_lex_selection(self):
        f = FinMap(finset("a", "b"), finset("z"), {"a": "z", "b": "z"})
        r = right_inverse(f)
        assert r.assign == {"z": "a"}
        assert compose(f, r) == FinMap.identity(f.cod)

    def test_error_cases(self):
        collapse = FinMap.constant(finset("a", "b"), finset("z"), "z")
        with pytest.raises(NotBijective):
            inverse(collapse)
        with pytest.raises(NotMonic):
            left_inverse(collapse)
        nonsurj = FinMap(finset("a"), finset("x", "y"), {"a": "x"})
        with pytest.raises(NotOnto):
            right_inverse(nonsurj)

    def test_exhaustive_bijective_iff_inverse(self):
        # carriers up to size 4
        for n in range(1, 5):
            carrier = FinSet("e%d" % i for i in range(n))
            for f in all_maps(carrier, carrier):
                if classify(f)["bijective"]:
                    g = inverse(f)
                    assert compose(g, f) == FinMap.identity(carrier)
                    assert compose(f, g) == FinMap.identity(carrier)
                else:
                    with pytest.raises(NotBijective):
                        inverse(f)


class TestImageCalculus:
    def test_monic_roundtrip(self):
        f = FinMap(finset("a", "b"), XYZ, {"a": "x", "b": "y"})
        for A in f.dom.subsets():
            assert f.preimage(f.image(A)) == A

    def test_collapse_strict_growth(self):
        f = FinMap(finset("a", "b"), finset("z"), {"a": "z", "b": "z"})
        A = finset("a")
        assert f.preimage(f.image(A)) == finset("a", "b")
        assert image_calculus(f, A, finset("z")).passed

    def test_exhaustive_small_carriers(self):
        dom = finset("a", "b")
        cod = finset("x", "y", "z")
        for f in all_maps(dom, cod):
            for A in dom.subsets():
                for B in cod.subsets():
                    fam_dom = [finset("a"), finset("a", "b")]
                    fam_cod = [B, cod.diff(B)]
                    rep = image_calculus(f, A, B, families=[fam_dom, fam_cod])
                    assert rep.passed, rep.render_text()


class TestFibers:
    def test_identity_singletons(self):
        f = FinMap.identity(ABC)
        assert all(len(fiber(f, z)) == 1 for z in ABC)

    def test_constant_single_block(self):
        f = FinMap.constant(ABC, finset("z"), "z")
        part = fiber_partition(f)
        assert part.blocks == (ABC,)

    def test_fiber_outside_cod(self):
        with pytest.raises(CarrierMismatch):
            fiber(FinMap.identity(ABC), "w")

    def test_prop_fib_all_monic_small(self):
        for f in all_maps(finset("a", "b"), XYZ):
            if not classify(f)["monic"]:
                continue
            for A in f.dom.subsets():
                for B in f.cod.subsets():
                    assert fiber_union_check(f, A, B).passed


class TestDecompose:
    def test_bijection_trivial_blocks(self):
        swap = FinMap(finset("a", "b"), finset("a", "b"), {"a": "b", "b": "a"})
        p, bij, incl = decompose(swap)
        assert all(len(b) == 1 for b in fiber_partition(swap).blocks)
        assert incl == FinMap.identity(finset("a", "b"))

    def test_constant_single_arrow(self):
        f = FinMap.constant(ABC, finset("y", "z"), "z")
        p, bij, incl = decompose(f)
        assert len(bij.dom) == 1
        assert compose(incl, compose(bij, p)) == f

    def test_exhaustive_recomposition(self):
        for n in range(1, 5):
            dom = FinSet("d%d" % i for i in range(n))
            cod = FinSet("c%d" % i for i in range(3))
            for f in all_maps(dom, cod):
                p, bij, incl = decompose(f)
                assert classify(bij)["bijective"]
                assert compose(incl, compose(bij, p)) == f


class TestFold:
    MAX3 = {
        (a, b): max(a, b) for a in ("1", "2", "3") for b in ("1", "2", "3")
    }

    def test_singleton(self):
        assert fold(self.MAX3, ["2"]) == ("2", ("2",))

    def test_max_chain(self):
        total, partials = fold(self.MAX3, ["1", "3", "2"])
        assert total == "3"
        assert partials == ("1", "3", "3")

    def test_power_as_repeated_multiply(self):
        # Z3 as strings 0,1,2 under addition; folding [1,1,1] is 1+1+1
        add = {(str(a), str(b)): str((a + b) % 3) for a in range(3) for b in range(3)}
        total, _ = fold(add, ["1", "1", "1"])
        assert total == "0"

    def test_empty_errors(self):
        with pytest.raises(EmptyFold):
            fold(self.MAX3, [])

    def test_concat_associativity(self):
        rng = random.Random(3)
        for _ in range(100):
            s = [rng.choice("123") for _ in range(rng.randint(1, 4))]
            t = [rng.choice("123") for _ in range(rng.randint(1, 4))]
            whole, _ = fold(self.MAX3, s + t)
            left, _ = fold(self.MAX3, s)
            right, _ = fold(self.MAX3, t)
            assert whole == self.MAX3[(left, right)]


class TestEndoAnalyze:
    def test_identity(self):
        rep = endo_analyze(FinMap.identity(ABC))
        assert rep.invariant_points == ABC
        assert rep.is_once_effective
        assert rep.nilpotent_at is None  # not constant, no nilpotency

    def test_collapse_to_fixed_point(self):
        f = FinMap(finset("a", "b"), finset("a", "b"), {"a": "b", "b": "b"})
        rep = endo_analyze(f, max_steps=4)
        assert rep.is_once_effective
        assert rep.stabilizes_at == "b"
        assert rep.nilpotent_at == ("b", 1)  # f itself is constant to b

    def test_two_step_nilpotent(self):
        f = FinMap(ABC, ABC, {"a": "b", "b": "c", "c": "c"})
        rep = endo_analyze(f)
        assert rep.stabilizes_at == "c"
        assert rep.nilpotent_at == ("c", 2)

    def test_three_cycle(self):
        f = FinMap(ABC, ABC, {"a": "b", "b": "c", "c": "a"})
        rep = endo_analyze(f)
        assert rep.invariant_points == finset()
        assert not rep.is_once_effective
        assert rep.stabilizes_at is None
        assert rep.nilpotent_at is None

    def test_once_effective_iterates_constant_on_image(self):
        carrier = finset("a", "b", "c")
        for f in all_maps(carrier, carrier):
            rep = endo_analyze(f)
            if rep.is_once_effective:
                f2 = iterate(f, 2)
                for x in f.image():
                    assert f2.assign[x] == f.assign[x] == x


class TestNaturalPair:
    def test_identity_pair(self):
        i = FinMap.identity(ABC)
        assert natural_pair_check(i, i, i, i).passed

    def test_commuting_negation(self):
        # doubling commutes with negation on a symmetric window mod 5
        w = FinSet(str(i) for i in range(5))
        double = FinMap(w, w, {str(i): str(2 * i % 5) for i in range(5)})
        neg = FinMap(w, w, {str(i): str(-i % 5) for i in range(5)})
        assert natural_pair_check(double, double, neg, neg).passed

    def test_perturbed_fails_with_witness(self):
        i = FinMap.identity(ABC)
        g = FinMap(ABC, ABC, {"a": "b", "b": "a", "c": "c"})
        rep = natural_pair_check(i, g, i, i)
        assert not rep.passed
        assert rep.failures[0].witness == ("a",)

    def test_sa_must_be_onto(self):
        i = FinMap.identity(ABC)
        sa = FinMap.constant(ABC, ABC, "a")
        with pytest.raises(NotOnto):
            natural_pair_check(i, i, sa, i)


class TestSelect:
    def test_singletons_forced(self):
        fam = [finset("a"), finset("b")]
        sel = select(fam)
        assert sel.assign == {"{a}": "a", "{b}": "b"}

    def test_lexicographic_rule(self):
        sel = select([finset("a", "b"), finset("b", "c")])
        assert sel.assign == {"{a,b}": "a", "{b,c}": "b"}

    def test_empty_member(self):
        with pytest.raises(EmptyMember):
            select([finset()])

    def test_reproduces_right_inverse(self):
        f = FinMap(ABC, finset("x", "y"), {"a": "x", "b": "x", "c": "y"})
        sel = select([fiber(f, z) for z in f.cod])
        r = right_inverse(f)
        for z in f.cod:
            assert r.assign[z] == sel.assign[fiber(f, z).name()]
        assert compose(f, r) == FinMap.identity(f.cod)
