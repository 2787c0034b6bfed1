"""Category module tests.

Oracles: monotone-map counts from the order module for poset-category
functors, group homomorphism counts for one-object categories,
pointwise-order counting for natural transformations into thin
categories, modular-arithmetic permutations for Cayley, and brute-force
square enumeration for arrow categories.
"""

import itertools
import random

import pytest

from structa.category import (
    BifunctorData,
    FinCat,
    FunctorData,
    NatTransData,
    SetRepr,
    arrow_category,
    arrow_classify,
    arrow_equality_classes,
    assemble_functor,
    bifunctor_check,
    bifunctor_decompose,
    bifunctor_functor_bridge,
    bridge_category,
    bridge_check,
    cats_isomorphic,
    cayley,
    check_category,
    check_contravariant,
    check_functor,
    check_nat,
    check_set_functor,
    common_range_product,
    compare_representations,
    compose_functors,
    composition_functor,
    constant_functor,
    dagger,
    discrete,
    enumerate_functors,
    enumerate_nat_trans,
    from_group,
    from_poset,
    functor_category,
    functor_to_bifunctor,
    hcompose,
    hom_bifunctor,
    hom_functors,
    hom_set,
    identity_functor,
    identity_nat,
    interchange_check,
    iso_classes,
    opposite_cat,
    opposite_functor,
    op_universe_check,
    pair_functor,
    product_cat,
    slice_nat,
    unpair_functor,
    variance_convert,
    vcompose,
    yoneda,
    yoneda_embedding,
)
from structa.core import FinMap, FinSet, compose, finset, inverse
from structa.errors import (
    BadStructure,
    CarrierMismatch,
    EndpointError,
    IncompatibleFamilies,
    Mismatch,
    NotProduct,
    VarianceError,
)
from structa.group import cayley as group_cayley
from structa.group import cyclic_group, enumerate_homs, symmetric_group_3
from structa.order import (
    Poset,
    chain_poset,
    diamond_poset,
    monotone_maps,
    powerset_poset,
)


def chain_cat(labels):
    return from_poset(chain_poset(labels))


C2 = chain_cat(["a", "b"])
C3 = chain_cat(["a", "b", "c"])
Z2 = from_group(cyclic_group(2))
Z3 = from_group(cyclic_group(3))


def two_object_groupoid():
    arrows = [("1a", "a", "a"), ("1b", "b", "b"), ("u", "a", "b"), ("v", "b", "a")]
    comp = {
        ("1a", "1a"): "1a",
        ("1b", "1b"): "1b",
        ("u", "1a"): "u",
        ("1b", "u"): "u",
        ("v", "1b"): "v",
        ("1a", "v"): "v",
        ("v", "u"): "1a",
        ("u", "v"): "1b",
    }
    C = FinCat(finset("a", "b"), arrows, {"a": "1a", "b": "1b"}, comp)
    assert check_category(C).passed
    return C


def poset_functor(P, Q, assign):
    """The functor induced by a monotone object map between posets."""
    CP, CQ = from_poset(P), from_poset(Q)
    on_arr = {}
    for n in CP.arrow_names:
        x, y = CP.src[n], CP.tgt[n]
        on_arr[n] = "(%s<=%s)" % (assign[x], assign[y])
    F = FunctorData(CP, CQ, dict(assign), on_arr)
    check_functor(F).require()
    return F


class TestCheckCategory:
    def test_one_object_identity(self):
        C = discrete(finset("x"))
        assert check_category(C).passed

    def test_diamond(self):
        assert check_category(from_poset(diamond_poset())).passed

    def test_broken_associativity_witnessed(self):
        G = cyclic_group(4)
        comp = {(g, f): G.op[(g, f)] for g in G.carrier for f in G.carrier}
        comp[("g1", "g1")] = "g1"
        C = FinCat(
            finset("pt"),
            [(x, "pt", "pt") for x in G.carrier],
            {"pt": "g0"},
            comp,
        )
        rep = check_category(C)
        assert not rep["cat-assoc"].passed
        assert len(rep["cat-assoc"].witness) == 3

    def test_missing_composition_cell(self):
        C = FinCat(
            finset("x"),
            [("1x", "x", "x"), ("f", "x", "x")],
            {"x": "1x"},
            {("1x", "1x"): "1x", ("f", "1x"): "f", ("1x", "f"): "f"},
        )
        rep = check_category(C)
        assert not rep["cat-comp-total"].passed

    def test_require_unit_toggle(self):
        # a left-zero semigroup: associative but without a unit
        carrier = ["s", "t"]
        comp = {(g, f): g for g in carrier for f in carrier}
        C = FinCat(finset("x"), [(a, "x", "x") for a in carrier], {}, comp)
        assert not check_category(C, require_unit=True).passed
        assert check_category(C, require_unit=False).passed

    def test_observational_warning_on_unitless_parallel_arrows(self):
        C = FinCat(
            finset("x", "y"), [("f", "x", "y"), ("g", "x", "y")], {}, {}
        )
        classes = arrow_equality_classes(C)
        assert classes == (("f", "g"),)
        rep = check_category(C, require_unit=False)
        assert rep.passed
        assert rep["cat-discernible"].statement.startswith("warning")

    def test_shipped_categories_are_discernible(self):
        for C in (C2, C3, Z2, Z3, discrete(finset("a", "b"))):
            assert all(len(cl) == 1 for cl in arrow_equality_classes(C))


class TestConstructors:
    def test_chain_two_has_three_arrows(self):
        assert len(C2.arrows) == 3

    def test_z2_one_object_two_invertible_arrows(self):
        assert len(Z2.objects) == 1
        assert len(Z2.arrows) == 2
        assert all(arrow_classify(Z2, f)["iso"] for f in Z2.arrow_names)

    def test_discrete_identities_only(self):
        D = discrete(finset("a", "b"))
        assert len(D.arrows) == 2
        assert set(D.identity.values()) == set(D.arrow_names)

    def test_from_monoid_table(self):
        # the two-element meet monoid {1, 0} with 1 as unit
        table = {
            ("one", "one"): "one",
            ("one", "zero"): "zero",
            ("zero", "one"): "zero",
            ("zero", "zero"): "zero",
        }
        C = from_group(table, finset("one", "zero"))
        assert check_category(C).passed

    def test_unitless_table_rejected(self):
        table = {(g, f): g for g in ("s", "t") for f in ("s", "t")}
        with pytest.raises(BadStructure):
            from_group(table, finset("s", "t"))


class TestArrowClassify:
    def test_identity_all_flags(self):
        for C in (C2, Z3):
            for x in C.objects:
                flags = arrow_classify(C, C.identity[x])
                assert all(flags.values())

    def test_poset_arrow_cancellable_not_invertible(self):
        f = "(a<=b)"
        flags = arrow_classify(C2, f)
        # thin homs make every arrow monic and epic but the chain has
        # no arrow back
        assert flags["left_cancellable"] and flags["right_cancellable"]
        assert not flags["left_invertible"] and not flags["right_invertible"]
        assert not flags["iso"]

    def test_group_arrows_all_iso(self):
        assert all(arrow_classify(Z3, f)["iso"] for f in Z3.arrow_names)

    def test_unknown_arrow(self):
        with pytest.raises(CarrierMismatch):
            arrow_classify(C2, "nope")

    def test_iso_classes_groupoid(self):
        C = two_object_groupoid()
        part = iso_classes(C)
        assert part.blocks == (finset("a", "b"),)

    def test_iso_classes_chain_discrete(self):
        assert iso_classes(C3).blocks == (finset("a"), finset("b"), finset("c"))


class TestFunctors:
    def test_identity_classification(self):
        from structa.category import classify_functor

        for C in (C2, Z3):
            flags = classify_functor(identity_functor(C))
            assert flags == {"full": True, "faithful": True, "embedding": True}

    def test_z4_to_z2_full_not_faithful(self):
        from structa.category import classify_functor

        Z4 = from_group(cyclic_group(4))
        on_arr = {"g%d" % i: "g%d" % (i % 2) for i in range(4)}
        F = FunctorData(Z4, Z2, {"pt": "pt"}, on_arr)
        assert check_functor(F).passed
        flags = classify_functor(F)
        assert flags["full"] and not flags["faithful"]

    def test_constant_functor_faithfulness(self):
        from structa.category import classify_functor

        pt = discrete(finset("x"))
        # collapsing a two-arrow hom set breaks faithfulness
        F = constant_functor(Z2, pt, "x")
        assert check_functor(F).passed
        assert not classify_functor(F)["faithful"]
        # a thin source can never break it: faithfulness is hom-wise
        # injectivity and every hom set there has at most one arrow
        D = from_poset(diamond_poset())
        G = constant_functor(D, pt, "x")
        assert classify_functor(G)["faithful"]
        assert not classify_functor(G)["embedding"]

    def test_functor_counts_match_monotone_maps(self):
        # independent oracle: poset-category functors are exactly the
        # monotone maps
        for P, Q in [
            (chain_poset(["a", "b"]), chain_poset(["a", "b"])),
            (chain_poset(["a", "b"]), chain_poset(["a", "b", "c"])),
            (diamond_poset(), chain_poset(["a", "b"])),
        ]:
            expected = len(list(monotone_maps(P, Q)))
            got = len(enumerate_functors(from_poset(P), from_poset(Q)))
            assert got == expected

    def test_functor_counts_match_group_homs(self):
        for m, n in [(2, 2), (4, 2), (2, 3), (3, 3)]:
            G, H = cyclic_group(m), cyclic_group(n)
            expected = len(list(enumerate_homs(G, H)))
            got = len(enumerate_functors(from_group(G), from_group(H)))
            assert got == expected

    def test_composition_is_functorial(self):
        F = poset_functor(
            chain_poset(["a", "b"]), chain_poset(["a", "b", "c"]), {"a": "a", "b": "c"}
        )
        G = poset_functor(
            chain_poset(["a", "b", "c"]), chain_poset(["a", "b"]), {"a": "a", "b": "a", "c": "b"}
        )
        GF = compose_functors(G, F)
        assert check_functor(GF).passed
        assert GF.on_obj == {"a": "a", "b": "b"}

    def test_compose_mismatch(self):
        with pytest.raises(Mismatch):
            compose_functors(identity_functor(C2), identity_functor(C3))


class TestOpposite:
    def test_discrete_self_opposite(self):
        D = discrete(finset("a", "b"))
        assert opposite_cat(D) == D

    def test_chain_opposite_is_reversed_chain(self):
        reversed_chain = from_poset(chain_poset(["b", "a"]))
        assert cats_isomorphic(opposite_cat(C2), reversed_chain)

    def test_op_is_involution(self):
        for C in (C2, C3, Z3, from_poset(diamond_poset())):
            assert opposite_cat(opposite_cat(C)) == C

    def test_op_universe(self):
        Z4 = from_group(cyclic_group(4))
        mod2 = FunctorData(
            Z4, Z2, {"pt": "pt"}, {"g%d" % i: "g%d" % (i % 2) for i in range(4)}
        )
        rep = op_universe_check(
            [C2, C3, Z2, Z3, Z4], [identity_functor(C2), mod2, identity_functor(Z4)]
        )
        assert rep.passed, rep.render_text()


class TestVariance:
    def test_reversal_is_contravariant_and_converts(self):
        P = chain_poset(["a", "b", "c"])
        CP = from_poset(P)
        rev = {"a": "c", "b": "b", "c": "a"}
        on_arr = {
            n: "(%s<=%s)" % (rev[CP.tgt[n]], rev[CP.src[n]]) for n in CP.arrow_names
        }
        F = FunctorData(CP, CP, rev, on_arr)
        assert check_contravariant(F).passed
        assert not check_functor(F).passed
        G = variance_convert(F)
        assert G.tgt == opposite_cat(CP)
        assert check_functor(G).passed
        assert variance_convert(G) == F

    def test_complement_on_powerset(self):
        base = finset("x", "y")
        P = powerset_poset(base)
        CP = from_poset(P)
        comp_of = {s: FinSet(e for e in base if e not in s) for s in base.subsets()}
        rev = {s.name(): comp_of[s].name() for s in base.subsets()}
        on_arr = {
            n: "(%s<=%s)" % (rev[CP.tgt[n]], rev[CP.src[n]]) for n in CP.arrow_names
        }
        F = FunctorData(CP, CP, rev, on_arr)
        assert check_contravariant(F).passed
        assert check_functor(variance_convert(F)).passed

    def test_neither_variance_rejected(self):
        on_arr = {n: C2.identity["a"] for n in C2.arrow_names}
        bad = FunctorData(C2, C2, {"a": "a", "b": "b"}, on_arr)
        with pytest.raises(VarianceError):
            variance_convert(bad)


class TestProduct:
    def test_arrow_count_multiplies(self):
        P = product_cat(C2, C3)
        assert len(P.arrows) == len(C2.arrows) * len(C3.arrows)
        assert len(P.objects) == len(C2.objects) * len(C3.objects)

    def test_square_product_is_product_order(self):
        pairs = []
        labels = []
        for x in ("a", "b"):
            for y in ("a", "b"):
                labels.append("%s%s" % (x, y))
        for p in labels:
            for q in labels:
                if p[0] <= q[0] and p[1] <= q[1]:
                    pairs.append((p, q))
        prodP = Poset(FinSet(labels), pairs)
        assert cats_isomorphic(product_cat(C2, C2), from_poset(prodP))

    def test_product_with_point_is_isomorphic(self):
        pt = discrete(finset("x"))
        assert cats_isomorphic(product_cat(C2, pt), C2)

    def test_opposite_of_product(self):
        P = product_cat(C2, Z2)
        assert opposite_cat(P) == product_cat(opposite_cat(C2), opposite_cat(Z2))


class TestPairUnpair:
    def test_diagonal(self):
        F = identity_functor(C2)
        diag = pair_functor(F, F)
        assert check_functor(diag).passed
        f, g = unpair_functor(diag)
        assert f == F and g == F

    def test_pair_of_unpair(self):
        F = identity_functor(C2)
        G = constant_functor(C2, C2, "b")
        p = pair_functor(F, G)
        f, g = unpair_functor(p)
        assert pair_functor(f, g) == p

    def test_roundtrip_over_all_functors_into_product(self):
        P = product_cat(C2, C2)
        for F in enumerate_functors(C2, P):
            f, g = unpair_functor(F)
            assert pair_functor(f, g) == FunctorData(C2, P, F.on_obj, F.on_arr)

    def test_not_product(self):
        with pytest.raises(NotProduct):
            unpair_functor(identity_functor(C2))


class TestBifunctor:
    def test_hom_bifunctor_passes(self):
        for C in (C2, C3, Z2):
            assert bifunctor_check(hom_bifunctor(C)).passed

    def test_bridge_roundtrip(self):
        B = hom_bifunctor(C3)
        S = bifunctor_functor_bridge(B)
        assert check_set_functor(S).passed
        assert functor_to_bifunctor(S, C3, C3) == B

    def test_common_range_product_as_bifunctor(self):
        Cop = opposite_cat(C2)
        F = enumerate_functors(Cop, C2)[0]
        G = identity_functor(C2)
        crp = common_range_product(F, G)
        B = functor_to_bifunctor(crp, C2, C2)
        assert bifunctor_check(B).passed
        p, q = bifunctor_decompose(B)
        assert bifunctor_check(p).passed and bifunctor_check(q).passed


class TestBridges:
    def test_identity_transformation_natural(self):
        for F in enumerate_functors(C2, C3):
            n = identity_nat(F)
            assert check_nat(n).passed

    def test_pointwise_order_gives_natural_bridge(self):
        # on a chain, f ≤ g pointwise makes a ↦ (fa ≤ ga) natural
        P = chain_poset(["a", "b", "c"])
        f = {"a": "a", "b": "a", "c": "b"}
        g = {"a": "a", "b": "b", "c": "c"}
        F, G = poset_functor(P, P, f), poset_functor(P, P, g)
        tau = {x: "(%s<=%s)" % (f[x], g[x]) for x in C3.objects}
        flags = bridge_check(tau, F, G)
        assert flags["is_bridge"] and flags["is_natural"]

    def test_noncentral_component_not_natural(self):
        S3, _ = symmetric_group_3()
        C = from_group(S3)
        F = identity_functor(C)
        noncentral = next(
            x
            for x in S3.carrier
            if any(S3.op[(x, y)] != S3.op[(y, x)] for y in S3.carrier)
        )
        flags = bridge_check({"pt": noncentral}, F, F)
        assert flags["is_bridge"] and not flags["is_natural"]

    def test_component_not_an_arrow(self):
        F = identity_functor(C2)
        with pytest.raises(EndpointError):
            bridge_check({"a": "nope", "b": C2.identity["b"]}, F, F)

    def test_bridge_category(self):
        P = chain_poset(["a", "b", "c"])
        f = {"a": "a", "b": "a", "c": "b"}
        g = {"a": "a", "b": "b", "c": "c"}
        F, G = poset_functor(P, P, f), poset_functor(P, P, g)
        tau = {x: "(%s<=%s)" % (f[x], g[x]) for x in C3.objects}
        cat = bridge_category(tau, F, G)
        assert check_category(cat).passed
        T = cat.meta["functor"]
        assert check_functor(T).passed
        assert T.on_obj == tau

    def test_bridge_category_collision_rejected(self):
        D2 = discrete(finset("p", "q"))
        pt = discrete(finset("x"))
        F = constant_functor(D2, pt, "x")
        tau = {"p": "id(x)", "q": "id(x)"}
        # both components collapse onto one object; the images of the
        # two source identities become parallel arrows with no defined
        # composite, so the construction refuses
        with pytest.raises(BadStructure):
            bridge_category(tau, F, F)


class TestVerticalComposition:
    def test_unit_laws(self):
        FC = functor_category(C2, C2)
        nats = FC.meta["nats"]
        for name in FC.arrow_names:
            tau = nats[name]
            assert vcompose(identity_nat(tau.G), tau) == tau
            assert vcompose(tau, identity_nat(tau.F)) == tau

    def test_functor_category_counts(self):
        FC = functor_category(C2, C2)
        assert len(FC.objects) == 3
        # thin-target oracle: exactly one transformation per pointwise-
        # ordered pair of monotone maps
        P = chain_poset(["a", "b"])
        maps = list(monotone_maps(P, P))
        expected = sum(
            1
            for f in maps
            for g in maps
            if all(P.le(f(x), g(x)) for x in P.carrier)
        )
        assert len(FC.arrows) == expected == 6
        assert check_category(FC).passed

    def test_associativity_on_all_triples(self):
        FC = functor_category(C2, C2)
        nats = list(FC.meta["nats"].values())
        for t1 in nats:
            for t2 in nats:
                if t2.F != t1.G:
                    continue
                for t3 in nats:
                    if t3.F != t2.G:
                        continue
                    assert vcompose(t3, vcompose(t2, t1)) == vcompose(
                        vcompose(t3, t2), t1
                    )

    def test_mismatch(self):
        FC = functor_category(C2, C2)
        nats = FC.meta["nats"]
        tau = nats["t1"]
        bad = next(n for n in nats.values() if n.F != tau.G)
        with pytest.raises(Mismatch):
            vcompose(bad, tau)


class TestHorizontalComposition:
    def grids(self, C, D, E):
        CD = functor_category(C, D)
        DE = functor_category(D, E)
        vert_cd = [
            (CD.meta["nats"][s], CD.meta["nats"][t])
            for s in CD.arrow_names
            for t in CD.arrow_names
            if CD.meta["nats"][s].F == CD.meta["nats"][t].G
        ]
        vert_de = [
            (DE.meta["nats"][s], DE.meta["nats"][t])
            for s in DE.arrow_names
            for t in DE.arrow_names
            if DE.meta["nats"][s].F == DE.meta["nats"][t].G
        ]
        return vert_cd, vert_de

    def test_hcompose_with_identity(self):
        FC = functor_category(C2, C2)
        one = identity_nat(identity_functor(C2))
        for tau in FC.meta["nats"].values():
            out = hcompose(tau, one)
            assert out.component == tau.component

    def test_interchange_fuzz(self):
        rng = random.Random(5)
        total = 0
        for (C, D, E) in [(C2, C2, C2), (C2, C2, C3), (C2, C3, C2)]:
            vert_cd, vert_de = self.grids(C, D, E)
            for _ in range(400):
                sigma, tau = rng.choice(vert_cd)
                beta, alpha = rng.choice(vert_de)
                rep = interchange_check(alpha, beta, sigma, tau)
                assert rep.passed, rep.render_text()
                total += 1
        assert total >= 1000

    def test_composition_functor(self):
        cf = composition_functor(C2, C2, C2)
        assert check_functor(cf).passed


class TestHom:
    def test_discrete_hom_sets(self):
        D = discrete(finset("a", "b"))
        assert hom_set(D, "a", "a") == finset("id(a)")
        assert hom_set(D, "a", "b") == FinSet()

    def test_group_hom_set(self):
        L, R = hom_functors(Z2, "pt")
        assert len(L.on_obj["pt"]) == 2
        assert check_set_functor(L).passed and check_set_functor(R).passed

    def test_chain_hom_sizes(self):
        P = chain_poset(["a", "b", "c"])
        for x in C3.objects:
            for y in C3.objects:
                assert len(hom_set(C3, x, y)) == (1 if P.le(x, y) else 0)


class TestSliceAssemble:
    def test_slice_at_identity_is_identity(self):
        B = hom_bifunctor(C3)
        nt = slice_nat(B, C3.identity["b"])
        assert all(
            m == FinMap.identity(m.dom) for m in nt.component.values()
        )

    def test_slice_natural(self):
        B = hom_bifunctor(C3)
        for f in C3.arrow_names:
            assert check_nat(slice_nat(B, f)).passed

    def test_assemble_reproduces_hom(self):
        B = hom_bifunctor(C3)
        S = bifunctor_functor_bridge(B)
        Cop = opposite_cat(C3)
        Rfam = {x: hom_functors(C3, x)[0] for x in C3.objects}
        Lfam = {}
        for y in C3.objects:
            _, Ry = hom_functors(C3, y)
            Lfam[y] = SetRepr(Cop, dict(Ry.on_obj), dict(Ry.on_arr), variance="co")
        assembled = assemble_functor(Cop, C3, Lfam, Rfam)
        assert assembled == S

    def test_perturbed_family_rejected(self):
        Cop = opposite_cat(C3)
        Rfam = {x: hom_functors(C3, x)[0] for x in C3.objects}
        Lfam = {}
        for y in C3.objects:
            _, Ry = hom_functors(C3, y)
            Lfam[y] = SetRepr(Cop, dict(Ry.on_obj), dict(Ry.on_arr), variance="co")
        bad_obj = dict(Lfam["c"].on_obj)
        bad_obj["a"] = finset("wrong")
        Lfam["c"] = SetRepr(Cop, bad_obj, dict(Lfam["c"].on_arr), variance="co")
        with pytest.raises(IncompatibleFamilies):
            assemble_functor(Cop, C3, Lfam, Rfam)


class TestYoneda:
    def test_nat_count_is_hom_count(self):
        for C in (C2, C3, Z3):
            for a in C.objects:
                La, _ = hom_functors(C, a)
                out = yoneda(C, a, La)
                assert len(out["nat_set"]) == len(hom_set(C, a, a))

    def test_chain_bottom(self):
        La, _ = hom_functors(C3, "a")
        out = yoneda(C3, "a", La)
        assert len(out["nat_set"]) == 1

    def test_group_case(self):
        Le, _ = hom_functors(Z3, "pt")
        out = yoneda(Z3, "pt", Le)
        assert len(out["nat_set"]) == 3
        assert sorted(out["phi"].assign.values()) == ["g0", "g1", "g2"]

    def test_bijection_over_universe(self):
        # |Nat(L_a, F)| = |F a| for every object and every hom functor
        for C in (C3, Z2):
            functors = [hom_functors(C, x)[0] for x in C.objects]
            for a in C.objects:
                for F in functors:
                    out = yoneda(C, a, F)
                    assert len(out["nat_set"]) == len(F.on_obj[a])
                    # φ is a bijection both ways
                    inv = inverse(out["phi"])
                    assert all(
                        out["phi"](inv(x)) == x for x in F.on_obj[a]
                    )


class TestEmbeddingAndCayley:
    def test_discrete_embedding(self):
        assert yoneda_embedding(discrete(finset("a", "b"))).passed

    def test_chain_and_group_embeddings(self):
        assert yoneda_embedding(C3).passed
        assert yoneda_embedding(Z3).passed

    def test_cayley_z3(self):
        G = cyclic_group(3)
        h = cayley(G)
        # oracle: left translations are the modular-shift permutations
        perms = set()
        for i in range(3):
            assign = {"g%d" % j: "g%d" % ((i + j) % 3) for j in range(3)}
            perms.add(tuple(sorted(assign.items())))
        got = set()
        for name in h.tgt.carrier:
            g = next(x for x in G.carrier if h.map(x) == name)
            got.add(
                tuple(
                    sorted(
                        {"g%d" % j: G.op[(g, "g%d" % j)] for j in range(3)}.items()
                    )
                )
            )
        assert got == perms
        assert h.tgt.order() == 3

    def test_cayley_matches_group_module(self):
        for n in (2, 3, 4):
            G = cyclic_group(n)
            assert cayley(G) == group_cayley(G)

    def test_cayley_table_transfers(self):
        S3, _ = symmetric_group_3()
        h = cayley(S3)
        for a in S3.carrier:
            for b in S3.carrier:
                assert h.map(S3.op[(a, b)]) == h.tgt.op[(h.map(a), h.map(b))]


class TestRepresentations:
    def test_self_comparison_is_identity(self):
        La, _ = hom_functors(Z3, "pt")
        beta = identity_nat(La)
        f = compare_representations(Z3, La, ("pt", beta), ("pt", beta))
        assert f == Z3.identity["pt"]

    def test_groupoid_connecting_iso(self):
        C = two_object_groupoid()
        La, _ = hom_functors(C, "a")
        beta = identity_nat(La)
        gamma = dagger(C, "u")  # L_b -> L_a, a natural iso
        f = compare_representations(C, La, ("a", beta), ("b", gamma))
        assert f == "u"
        assert arrow_classify(C, f)["iso"]

    def test_non_representation_rejected(self):
        Le, _ = hom_functors(Z3, "pt")
        # a constant component cannot be bijective on a 3-element hom set
        comps = {"pt": FinMap.constant(Le.on_obj["pt"], Le.on_obj["pt"], "g0")}
        bad = NatTransData(Le, Le, comps)
        with pytest.raises(BadStructure):
            compare_representations(Z3, Le, ("pt", bad), ("pt", identity_nat(Le)))


class TestArrowCategory:
    def test_discrete_identity_objects(self):
        D = discrete(finset("a", "b"))
        F = identity_functor(D)
        cat = arrow_category(F, F)
        assert len(cat.objects) == 2
        assert set(cat.identity) == set(cat.objects)

    def test_chain_two_objects_and_squares(self):
        F = identity_functor(C2)
        cat = arrow_category(F, F)
        assert len(cat.objects) == 3
        # brute-force square oracle
        squares = 0
        for a in C2.objects:
            for b in C2.objects:
                for h in C2.hom(a, b):
                    for u in C2.arrows_from(a):
                        for v in C2.arrows_from(b):
                            lhs = C2.comp[(v, h)]
                            for h2 in C2.hom(C2.tgt[u], C2.tgt[v]):
                                if C2.comp[(h2, u)] == lhs:
                                    squares += 1
        assert len(cat.arrows) == squares

    def test_mixed_sources(self):
        F = identity_functor(C2)
        G = constant_functor(C2, C2, "b")
        cat = arrow_category(F, G)
        assert check_category(cat).passed

    def test_common_range_required(self):
        with pytest.raises(Mismatch):
            arrow_category(identity_functor(C2), identity_functor(C3))
