"""Cayley-table groups: subgroups, cosets, quotients, homomorphisms,
commutator machinery, actions, and scalar-action (linear space) checks.

Groups are explicit multiplication tables over symbol carriers; every
theorem-level claim is re-verified by scanning the table rather than
trusted from the construction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import FinMap, FinSet, Partition, classify, compose, finset
from .errors import (
    CarrierMismatch,
    IllDefinedQuotient,
    NotAGroup,
    NotAction,
    NotHomomorphism,
    NotNormal,
    NotSubgroup,
    NotTransitive,
    TooLarge,
)
from .report import LawReport


class FinGroup:
    """A group given by its full multiplication table."""

    __slots__ = ("carrier", "op", "unit", "inv")

    def __init__(self, carrier: FinSet, op, unit, inv):
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "op", dict(op))
        object.__setattr__(self, "unit", unit)
        object.__setattr__(self, "inv", dict(inv))

    def __setattr__(self, name, value):
        raise AttributeError("FinGroup is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, FinGroup)
            and self.carrier == other.carrier
            and self.op == other.op
        )

    def __hash__(self):
        return hash((self.carrier, tuple(sorted(self.op.items()))))

    def __repr__(self):
        return "FinGroup(%s, unit=%s)" % (list(self.carrier), self.unit)

    def mul(self, a, b):
        return self.op[(a, b)]

    def order(self):
        return len(self.carrier)

    def is_abelian(self):
        return all(
            self.op[(a, b)] == self.op[(b, a)]
            for a, b in itertools.combinations(self.carrier.elements, 2)
        )


@dataclass(frozen=True)
class Subgroup:
    parent: FinGroup
    members: FinSet


@dataclass(frozen=True)
class GroupHom:
    src: FinGroup
    tgt: FinGroup
    map: FinMap


@dataclass(frozen=True)
class GroupAction:
    group: FinGroup
    carrier: FinSet
    act: dict  # element -> bijection FinMap of carrier

    def apply(self, g, x):
        return self.act[g](x)


def group_axioms(table, carrier: FinSet) -> LawReport:
    r = LawReport("group-axioms")
    xs = carrier.elements
    missing = next(((a, b) for a in xs for b in xs if (a, b) not in table), None)
    r.add("grp-total", "the table covers every pair", missing is None, missing)
    if missing is not None:
        return r
    escape = next(((a, b) for a in xs for b in xs if table[(a, b)] not in carrier), None)
    r.add("grp-closed", "products stay in the carrier", escape is None, escape)
    if escape is not None:
        return r
    assoc = next(
        (
            (a, b, c)
            for a in xs
            for b in xs
            for c in xs
            if table[(table[(a, b)], c)] != table[(a, table[(b, c)])]
        ),
        None,
    )
    r.add("grp-assoc", "(ab)c = a(bc)", assoc is None, assoc)
    unit = next((e for e in xs if all(table[(e, a)] == a == table[(a, e)] for a in xs)), None)
    r.add("grp-unit", "a two-sided unit exists", unit is not None)
    if unit is None or assoc is not None:
        return r
    no_inv = next(
        (
            (a,)
            for a in xs
            if not any(table[(a, b)] == unit == table[(b, a)] for b in xs)
        ),
        None,
    )
    r.add("grp-inverse", "every element has a two-sided inverse", no_inv is None, no_inv)
    if no_inv is not None:
        return r
    inv = {a: next(b for b in xs if table[(a, b)] == unit) for a in xs}
    r.add(
        "grp-inv-invol",
        "(a⁻¹)⁻¹ = a",
        all(inv[inv[a]] == a for a in xs),
    )
    r.add(
        "grp-unique-solutions",
        "ax = b and ya = b have unique solutions",
        all(
            sum(1 for x in xs if table[(a, x)] == b) == 1
            and sum(1 for y in xs if table[(y, a)] == b) == 1
            for a in xs
            for b in xs
        ),
    )
    r.add(
        "grp-cancel",
        "ab = ac implies b = c, ba = ca implies b = c",
        all(
            len({table[(a, b)] for b in xs}) == len(xs)
            and len({table[(b, a)] for b in xs}) == len(xs)
            for a in xs
        ),
    )
    return r


def check_group(table, carrier: FinSet) -> FinGroup:
    rep = group_axioms(table, carrier)
    if not rep.passed:
        c = rep.failures[0]
        raise NotAGroup("group axiom failed: %s" % c.law, witness=c.witness)
    xs = carrier.elements
    unit = next(e for e in xs if all(table[(e, a)] == a == table[(a, e)] for a in xs))
    inv = {a: next(b for b in xs if table[(a, b)] == unit) for a in xs}
    return FinGroup(carrier, table, unit, inv)


def power(G: FinGroup, a, n: int):
    if a not in G.carrier:
        raise CarrierMismatch("element outside the group", witness=(a,))
    if n < 0:
        return G.inv[power(G, a, -n)]
    out = G.unit
    for _ in range(n):
        out = G.op[(out, a)]
    return out


def cyclic_group(n: int) -> FinGroup:
    names = ["g%d" % i for i in range(n)]
    table = {
        (names[i], names[j]): names[(i + j) % n] for i in range(n) for j in range(n)
    }
    return check_group(table, FinSet(names))


def klein_four() -> FinGroup:
    names = ["e", "a", "b", "c"]
    idx = {x: i for i, x in enumerate(names)}
    table = {}
    for x in names:
        for y in names:
            table[(x, y)] = names[idx[x] ^ idx[y]]
    return check_group(table, FinSet(names))


def _perm_name(assign: dict) -> str:
    return "(%s)" % ",".join("%s>%s" % (k, v) for k, v in sorted(assign.items()))


def bijection_group(carrier: FinSet) -> tuple:
    """The group of all bijections of a set, with a name → FinMap registry."""
    perms = {}
    for values in itertools.permutations(carrier.elements):
        f = FinMap(carrier, carrier, dict(zip(carrier.elements, values)))
        perms[_perm_name(f.assign)] = f
    names = FinSet(perms)
    table = {
        (p, q): _perm_name(compose(perms[p], perms[q]).assign) for p in names for q in names
    }
    return check_group(table, names), perms


def symmetric_group_3() -> tuple:
    return bijection_group(finset("1", "2", "3"))


def subgroup_check(G: FinGroup, H: FinSet) -> Subgroup:
    """All three subgroup criteria, asserted to agree."""
    if not H <= G.carrier:
        raise CarrierMismatch("subset outside the group")
    if len(H) == 0:
        raise NotSubgroup("a subgroup is nonempty")
    crit_full = (
        G.unit in H
        and all(G.op[(a, b)] in H for a in H for b in H)
        and all(G.inv[a] in H for a in H)
    )
    crit_hh_inv = all(G.op[(a, G.inv[b])] in H for a in H for b in H)
    crit_sq_inv = all(G.op[(a, b)] in H for a in H for b in H) and all(
        G.inv[a] in H for a in H
    )
    assert crit_full == crit_hh_inv == crit_sq_inv, "subgroup criteria must agree"
    if not crit_full:
        bad = next(
            (a, b)
            for a in H
            for b in H
            if G.op[(a, G.inv[b])] not in H
        )
        raise NotSubgroup("HH⁻¹ escapes H", witness=bad)
    return Subgroup(G, H)


def cyclic_subgroup(G: FinGroup, a) -> Subgroup:
    members = {G.unit}
    x = a
    while x not in members:
        members.add(x)
        x = G.op[(x, a)]
    sub = subgroup_check(G, FinSet(members))
    gen = as_group(sub)
    assert gen.is_abelian(), "a cyclic subgroup must be abelian"
    return sub


def as_group(H: Subgroup) -> FinGroup:
    table = {(a, b): H.parent.op[(a, b)] for a in H.members for b in H.members}
    return check_group(table, H.members)


def cosets(G: FinGroup, H: Subgroup, side: str = "right") -> Partition:
    """Right cosets Hx (or left xH), verified equinumerous with H."""
    blocks = set()
    for x in G.carrier:
        if side == "right":
            blocks.add(FinSet(G.op[(h, x)] for h in H.members))
        elif side == "left":
            blocks.add(FinSet(G.op[(x, h)] for h in H.members))
        else:
            raise ValueError("side must be 'right' or 'left'")
    part = Partition(G.carrier, tuple(sorted(blocks, key=lambda b: b.elements)))
    assert all(len(b) == len(H.members) for b in part.blocks)
    assert H.members in part.blocks
    return part


def is_normal(G: FinGroup, N: Subgroup) -> bool:
    """Three normality criteria, asserted to agree."""
    conj_in = all(
        G.op[(G.op[(x, n)], G.inv[x])] in N.members for x in G.carrier for n in N.members
    )
    conj_eq = all(
        FinSet(G.op[(G.op[(x, n)], G.inv[x])] for n in N.members) == N.members
        for x in G.carrier
    )
    sides = all(
        FinSet(G.op[(x, n)] for n in N.members) == FinSet(G.op[(n, x)] for n in N.members)
        for x in G.carrier
    )
    assert conj_in == conj_eq == sides, "normality criteria must agree"
    return conj_in


def quotient(G: FinGroup, N: Subgroup) -> FinGroup:
    if not is_normal(G, N):
        bad = next(
            (x, n)
            for x in G.carrier
            for n in N.members
            if G.op[(G.op[(x, n)], G.inv[x])] not in N.members
        )
        raise NotNormal("subgroup is not normal", witness=bad)
    part = cosets(G, N, "right")
    names = {b: b.name() for b in part.blocks}
    table = {}
    for A in part.blocks:
        for B in part.blocks:
            # well-definedness: the product block must not depend on reps
            products = {part.block_of(G.op[(a, b)]) for a in A for b in B}
            if len(products) != 1:
                raise IllDefinedQuotient(
                    "coset product depends on representatives",
                    witness=(names[A], names[B]),
                )
            table[(names[A], names[B])] = names[products.pop()]
    Q = check_group(table, FinSet(names.values()))
    if G.is_abelian():
        assert Q.is_abelian()
    return Q


def commutator(G: FinGroup, a, b):
    """[a,b] = (ab)(a⁻¹b⁻¹)."""
    return G.op[(G.op[(a, b)], G.op[(G.inv[a], G.inv[b])])]


def center(G: FinGroup) -> Subgroup:
    members = FinSet(
        a for a in G.carrier if all(commutator(G, a, b) == G.unit for b in G.carrier)
    )
    sub = subgroup_check(G, members)
    assert is_normal(G, sub), "a central subgroup is normal"
    return sub


def commutant(G: FinGroup) -> Subgroup:
    """The subgroup generated by all commutators (product closure)."""
    gens = {commutator(G, a, b) for a in G.carrier for b in G.carrier}
    members = set(gens) | {G.unit}
    changed = True
    while changed:
        changed = False
        for a, b in itertools.product(list(members), repeat=2):
            p = G.op[(a, b)]
            if p not in members:
                members.add(p)
                changed = True
    # inverse closure is implied; closing anyway must not grow the set
    assert all(G.inv[a] in members for a in members)
    sub = subgroup_check(G, FinSet(members))
    assert is_normal(G, sub), "the commutant is normal"
    return sub


def abelianization_check(G: FinGroup, N: Subgroup) -> LawReport:
    r = LawReport("abelianization")
    comm = commutant(G)
    r.add("ab-quotient", "G modulo its commutant is abelian", quotient(G, comm).is_abelian())
    if is_normal(G, N):
        r.add(
            "ab-minimal",
            "G/N abelian iff the commutant lies in N",
            quotient(G, N).is_abelian() == (comm.members <= N.members),
            (tuple(N.members),),
        )
    else:
        r.add("ab-minimal", "N must be normal for the quotient test", False, (tuple(N.members),))
    return r


def hom_check(src: FinGroup, tgt: FinGroup, f: FinMap) -> GroupHom:
    if f.dom != src.carrier or f.cod != tgt.carrier:
        raise CarrierMismatch("map does not connect the group carriers")
    bad = next(
        (
            (a, b)
            for a in src.carrier
            for b in src.carrier
            if f(src.op[(a, b)]) != tgt.op[(f(a), f(b))]
        ),
        None,
    )
    if bad is not None:
        raise NotHomomorphism("f(ab) != f(a)f(b)", witness=bad)
    # derived: unit to unit, inverses to inverses
    assert f(src.unit) == tgt.unit
    assert all(f(src.inv[a]) == tgt.inv[f(a)] for a in src.carrier)
    return GroupHom(src, tgt, f)


def kernel(h: GroupHom) -> Subgroup:
    members = FinSet(a for a in h.src.carrier if h.map(a) == h.tgt.unit)
    sub = subgroup_check(h.src, members)
    assert is_normal(h.src, sub), "a kernel is normal"
    return sub


def image_subgroup(h: GroupHom) -> Subgroup:
    return subgroup_check(h.tgt, h.map.image())


def transfer_check(h: GroupHom, H: FinSet) -> LawReport:
    """How subgroups and normal subgroups move along a homomorphism."""
    r = LawReport("hom-transfer")
    sub = subgroup_check(h.src, H)
    img = h.map.image(H)
    try:
        img_sub = subgroup_check(h.tgt, img)
        r.add("tr-image", "the image of a subgroup is a subgroup", True)
    except NotSubgroup:
        r.add("tr-image", "the image of a subgroup is a subgroup", False, (tuple(img),))
        return r
    epi = classify(h.map)["onto"]
    if is_normal(h.src, sub):
        if epi:
            r.add(
                "tr-image-normal",
                "an epimorphism sends normal subgroups to normal subgroups",
                is_normal(h.tgt, img_sub),
                (tuple(img),),
            )
        else:
            r.add(
                "tr-image-normal-skipped",
                "image normality is only claimed for epimorphisms (skipped)",
                True,
            )
    pre = h.map.preimage(h.map.image(H))
    pre_sub = subgroup_check(h.src, pre)
    r.add("tr-preimage", "the preimage of a subgroup is a subgroup", True)
    if is_normal(h.tgt, img_sub):
        r.add(
            "tr-preimage-normal",
            "the preimage of a normal subgroup is normal",
            is_normal(h.src, pre_sub),
            (tuple(pre),),
        )
    return r


def first_iso(h: GroupHom) -> GroupHom:
    """The induced isomorphism from G/ker h onto Im h."""
    ker = kernel(h)
    Q = quotient(h.src, ker)
    img = as_group(image_subgroup(h))
    part = cosets(h.src, ker, "right")
    assign = {}
    for b in part.blocks:
        values = {h.map(x) for x in b}
        assert len(values) == 1, "h must be constant on each coset"
        assign[b.name()] = values.pop()
    phi = FinMap(Q.carrier, img.carrier, assign)
    iso = hom_check(Q, img, phi)
    assert classify(phi)["bijective"]
    assert len(h.src.carrier) == len(ker.members) * len(img.carrier)
    return iso


def conjugation_map(G: FinGroup, x) -> FinMap:
    return FinMap(
        G.carrier, G.carrier, {a: G.op[(G.op[(x, a)], G.inv[x])] for a in G.carrier}
    )


def automorphisms(G: FinGroup, guard: int = 8) -> list:
    """All automorphisms, by exhaustive bijection search (small groups)."""
    if G.order() > guard:
        raise TooLarge("automorphism search capped", witness=(G.order(),))
    out = []
    rest = [a for a in G.carrier if a != G.unit]
    for values in itertools.permutations(rest):
        f = FinMap(
            G.carrier, G.carrier, {G.unit: G.unit, **dict(zip(rest, values))}
        )
        if all(
            f(G.op[(a, b)]) == G.op[(f(a), f(b))] for a in G.carrier for b in G.carrier
        ):
            out.append(f)
    return out


def inner_automorphisms(G: FinGroup) -> tuple:
    """The group of conjugation maps and the epimorphism x ↦ (a ↦ xax⁻¹)."""
    conj = {x: conjugation_map(G, x) for x in G.carrier}
    for f in conj.values():
        assert classify(f)["bijective"]
        assert all(f(G.op[(a, b)]) == G.op[(f(a), f(b))] for a in G.carrier for b in G.carrier)
    names = {x: _perm_name(conj[x].assign) for x in G.carrier}
    inn_names = FinSet(names.values())
    by_name = {names[x]: conj[x] for x in G.carrier}
    table = {
        (p, q): _perm_name(compose(by_name[p], by_name[q]).assign)
        for p in inn_names
        for q in inn_names
    }
    inn = check_group(table, inn_names)
    onto = FinMap(G.carrier, inn_names, {x: names[x] for x in G.carrier})
    h = hom_check(G, inn, onto)
    assert classify(onto)["onto"]
    assert kernel(h).members == center(G).members
    return inn, h


def inner_normal_in_aut(G: FinGroup, guard: int = 8) -> bool:
    """Inn(G) is a normal subgroup of the full automorphism group."""
    auts = automorphisms(G, guard)
    names = {_perm_name(f.assign): f for f in auts}
    carrier = FinSet(names)
    table = {
        (p, q): _perm_name(compose(names[p], names[q]).assign)
        for p in carrier
        for q in carrier
    }
    aut = check_group(table, carrier)
    inn_members = FinSet(_perm_name(conjugation_map(G, x).assign) for x in G.carrier)
    return is_normal(aut, subgroup_check(aut, inn_members))


def action_check(A: GroupAction) -> LawReport:
    r = LawReport("group-action")
    for g, f in A.act.items():
        if f.dom != A.carrier or f.cod != A.carrier:
            raise NotAction("action maps must be self-maps of the carrier", witness=(g,))
        if not classify(f)["bijective"]:
            raise NotAction("action image is not a bijection", witness=(g,))
    hom_ok = all(
        compose(A.act[a], A.act[b]) == A.act[A.group.op[(a, b)]]
        for a in A.group.carrier
        for b in A.group.carrier
    )
    r.add("act-hom", "(ab) acts as a then b composed", hom_ok)
    nul = FinSet(
        g for g in A.group.carrier if A.act[g] == FinMap.identity(A.carrier)
    )
    r.add("act-nul-subgroup", "the nucleus of non-effectivity is a subgroup", True)
    subgroup_check(A.group, nul)
    transitive = is_transitive(A)
    r.add(
        "act-transitive-flag",
        "every point reaches every point"
        if transitive
        else "not transitive (informational)",
        True,
    )
    return r


def action_nucleus(A: GroupAction) -> FinSet:
    return FinSet(g for g in A.group.carrier if A.act[g] == FinMap.identity(A.carrier))


def is_transitive(A: GroupAction) -> bool:
    return all(
        any(A.apply(g, x) == y for g in A.group.carrier)
        for x in A.carrier
        for y in A.carrier
    )


def coset_action(G: FinGroup, H: Subgroup) -> GroupAction:
    """G acting on its left cosets xH by translation; verified transitive,
    with the fixed-coset and nucleus identities."""
    part = cosets(G, H, "left")
    names = {b: b.name() for b in part.blocks}
    carrier = FinSet(names.values())
    act = {}
    for g in G.carrier:
        assign = {}
        for b in part.blocks:
            x = b.elements[0]
            target = part.block_of(G.op[(g, x)])
            assign[names[b]] = names[target]
        act[g] = FinMap(carrier, carrier, assign)
    A = GroupAction(G, carrier, act)
    rep = action_check(A)
    assert rep.passed
    assert is_transitive(A)
    h_name = FinSet(H.members).name()
    assert all((A.apply(x, h_name) == h_name) == (x in H.members) for x in G.carrier)
    nul = action_nucleus(A)
    conj_core = G.carrier
    for x in G.carrier:
        conj_core = conj_core.inter(
            FinSet(G.op[(G.op[(x, h)], G.inv[x])] for h in H.members)
        )
    assert nul == conj_core, "nucleus must be the intersection of conjugates of H"
    return A


def stabilizer(A: GroupAction, a) -> Subgroup:
    members = FinSet(g for g in A.group.carrier if A.apply(g, a) == a)
    return subgroup_check(A.group, members)


def stabilizer_suite(A: GroupAction, a) -> LawReport:
    r = LawReport("stabilizer")
    if a not in A.carrier:
        raise CarrierMismatch("point outside the action carrier", witness=(a,))
    G = A.group
    inv_a = stabilizer(A, a)
    r.add("stab-subgroup", "the stabilizer is a subgroup", True)
    nul = action_nucleus(A)
    inter = G.carrier
    for x in A.carrier:
        inter = inter.inter(stabilizer(A, x).members)
    r.add("stab-nucleus", "the nucleus is the intersection of all stabilizers", nul == inter)
    if not is_transitive(A):
        raise NotTransitive("similarity items need a transitive action")
    part = cosets(G, inv_a, "left")
    names = {b.name(): b for b in part.blocks}
    transporters = {}
    for b in A.carrier:
        transporters[b] = FinSet(g for g in G.carrier if A.apply(g, a) == b)
    r.add(
        "stab-cosets",
        "transporter sets are exactly the left cosets of the stabilizer",
        set(transporters.values()) == set(names.values()),
    )
    r.add(
        "stab-bijection",
        "point ↦ transporter coset is a bijection onto the cosets",
        len(set(transporters.values())) == len(A.carrier) == len(part.blocks),
    )
    # similarity: the coset action and A are the same action up to the bijection
    CA = coset_action(G, inv_a)
    phi = {b: transporters[b].name() for b in A.carrier}
    similar = all(
        phi[A.apply(g, b)] == CA.apply(g, phi[b]) for g in G.carrier for b in A.carrier
    )
    r.add("stab-similar", "the action is similar to the coset action", similar)
    conj = all(
        stabilizer(A, b).members
        == FinSet(
            G.op[(G.op[(x, s)], G.inv[x])] for s in inv_a.members
        )
        for b in A.carrier
        for x in transporters[b]
    )
    r.add("stab-conjugate", "stabilizers along a transporter are conjugate", conj)
    return r


def regular_action(G: FinGroup) -> GroupAction:
    act = {
        g: FinMap(G.carrier, G.carrier, {x: G.op[(g, x)] for x in G.carrier})
        for g in G.carrier
    }
    return GroupAction(G, G.carrier, act)


def cayley(G: FinGroup) -> GroupHom:
    """An isomorphism onto a transformation group of the carrier."""
    A = regular_action(G)
    names = {g: _perm_name(A.act[g].assign) for g in G.carrier}
    img_names = FinSet(names.values())
    by_name = {names[g]: A.act[g] for g in G.carrier}
    table = {
        (p, q): _perm_name(compose(by_name[p], by_name[q]).assign)
        for p in img_names
        for q in img_names
    }
    img = check_group(table, img_names)
    f = FinMap(G.carrier, img_names, names)
    h = hom_check(G, img, f)
    assert classify(f)["bijective"]
    return h


def zp_field(p: int) -> dict:
    """The prime field Z_p: addition table, multiplicative group on the
    nonzero part, and the names of zero and one."""
    names = ["k%d" % i for i in range(p)]
    add = {(names[i], names[j]): names[(i + j) % p] for i in range(p) for j in range(p)}
    mul_nonzero = {
        (names[i], names[j]): names[i * j % p]
        for i in range(1, p)
        for j in range(1, p)
    }
    mul_group = check_group(mul_nonzero, FinSet(names[1:]))
    return {
        "carrier": FinSet(names),
        "add": add,
        "mul_group": mul_group,
        "zero": names[0],
        "one": names[1],
        "mul_full": {
            (names[i], names[j]): names[i * j % p] for i in range(p) for j in range(p)
        },
    }


def linear_space_check(field: dict, V: FinGroup, act: dict) -> LawReport:
    """Scalar action of a field on an abelian group, via both the
    homomorphism formulation and the four-axiom formulation."""
    r = LawReport("linear-space")
    K = field["carrier"]
    addK, zero, one = field["add"], field["zero"], field["one"]
    r.add("ls-abelian", "the vector group is abelian", V.is_abelian())
    add_group = check_group(addK, K)
    r.add("ls-field-add", "scalars form an abelian additive group", add_group.is_abelian())
    mulK = field["mul_full"]
    r.add(
        "ls-field-distrib",
        "scalar multiplication distributes over scalar addition",
        all(
            mulK[(a, addK[(b, c)])] == addK[(mulK[(a, b)], mulK[(a, c)])]
            for a in K
            for b in K
            for c in K
        ),
    )
    # homomorphism formulation
    nonzero = [a for a in K if a != zero]
    hom_auto = all(
        classify(act[a])["bijective"]
        and all(act[a](V.op[(u, v)]) == V.op[(act[a](u), act[a](v))] for u in V.carrier for v in V.carrier)
        for a in nonzero
    )
    hom_comp = all(
        act[mulK[(a, b)]] == compose(act[a], act[b]) for a in nonzero for b in nonzero
    )
    hom_additive = all(
        act[addK[(a, b)]](u) == V.op[(act[a](u), act[b](u))]
        for a in K
        for b in K
        for u in V.carrier
    )
    hom_form = hom_auto and hom_comp and hom_additive and act[one] == FinMap.identity(V.carrier)
    r.add("ls-hom-form", "scalar action is an additive hom into Aut(V)", hom_form)
    # four-axiom formulation
    ax1 = all(
        act[a](V.op[(u, v)]) == V.op[(act[a](u), act[a](v))]
        for a in K
        for u in V.carrier
        for v in V.carrier
    )
    ax2 = hom_additive
    ax3 = act[one] == FinMap.identity(V.carrier)
    ax4 = all(
        act[mulK[(a, b)]](u) == act[a](act[b](u)) for a in K for b in K for u in V.carrier
    )
    four_form = ax1 and ax2 and ax3 and ax4
    r.add("ls-axiom-form", "the four distributivity/unit/associativity axioms", four_form)
    r.add("ls-agree", "the two formulations agree", hom_form == four_form)
    return r


@lru_cache(maxsize=None)
def enumerate_groups(n: int) -> tuple:
    """All groups of order n up to isomorphism, from raw table enumeration.

    Backtracks over Latin squares with a fixed unit, keeps the associative
    ones, then dedupes by exhaustive relabeling."""
    if n > 6:
        raise TooLarge("table enumeration capped at order 6", witness=(n,))
    names = ["g%d" % i for i in range(n)]
    cells = [(i, j) for i in range(1, n) for j in range(1, n)]
    table = [[0] * n for _ in range(n)]
    for i in range(n):
        table[0][i] = i
        table[i][0] = i
    found = []

    def place(k):
        if k == len(cells):
            if _is_associative(table, n):
                found.append([row[:] for row in table])
            return
        i, j = cells[k]
        row_vals = {table[i][c] for c in range(j)}
        col_vals = {table[r][j] for r in range(i)}
        for v in range(n):
            if v in row_vals or v in col_vals:
                continue
            table[i][j] = v
            place(k + 1)
            table[i][j] = None

    for i in range(1, n):
        for j in range(1, n):
            table[i][j] = None
    place(0)
    reps = []
    for t in found:
        if not any(_tables_isomorphic(t, r, n) for r in reps):
            reps.append(t)
    out = []
    for t in reps:
        op = {
            (names[i], names[j]): names[t[i][j]] for i in range(n) for j in range(n)
        }
        out.append(check_group(op, FinSet(names)))
    return tuple(out)


def _is_associative(t, n):
    for a in range(n):
        for b in range(n):
            ab = t[a][b]
            row_a = t[a]
            for c in range(n):
                if t[ab][c] != row_a[t[b][c]]:
                    return False
    return True


def _tables_isomorphic(t1, t2, n):
    for perm in itertools.permutations(range(1, n)):
        p = (0,) + perm
        if all(
            p[t1[a][b]] == t2[p[a]][p[b]] for a in range(n) for b in range(n)
        ):
            return True
    return False


def enumerate_homs(G: FinGroup, H: FinGroup):
    """All homomorphisms G → H by exhaustive map search."""
    from .core import all_maps

    for f in all_maps(G.carrier, H.carrier):
        if f(G.unit) != H.unit:
            continue
        if all(
            f(G.op[(a, b)]) == H.op[(f(a), f(b))] for a in G.carrier for b in G.carrier
        ):
            yield GroupHom(G, H, f)
