"""Finite sets and total functions: the substrate for every other module.

Symbols are plain text tokens. A ``FinSet`` is a canonically ordered,
duplicate-free collection of symbols; a ``FinMap`` is a total function
between two such sets. Everything is immutable and compared
extensionally: two maps are equal when domain, codomain and assignment
coincide.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .errors import (
    CarrierMismatch,
    CompositionMismatch,
    EmptyFold,
    EmptyMember,
    NotBijective,
    NotMonic,
    NotOnto,
)
from .report import LawReport

Symbol = str


def check_symbol(s) -> str:
    if not isinstance(s, str) or not s or any(ch.isspace() for ch in s):
        raise ValueError("symbol must be a nonempty token without whitespace: %r" % (s,))
    return s


class FinSet:
    """An ordered, duplicate-free finite set of symbols."""

    __slots__ = ("elements",)

    def __init__(self, elements=()):
        elems = sorted({check_symbol(e) for e in elements})
        object.__setattr__(self, "elements", tuple(elems))

    def __setattr__(self, name, value):
        raise AttributeError("FinSet is immutable")

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __eq__(self, other):
        return isinstance(other, FinSet) and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        return all(x in other for x in self)

    def __lt__(self, other):
        return self <= other and self != other

    def __repr__(self):
        return "FinSet(%s)" % (list(self.elements),)

    def union(self, other):
        return FinSet(self.elements + tuple(other))

    def inter(self, other):
        return FinSet(x for x in self if x in other)

    def diff(self, other):
        return FinSet(x for x in self if x not in other)

    def complement_in(self, carrier):
        if not self <= carrier:
            raise CarrierMismatch("not a subset of the carrier", witness=tuple(self.diff(carrier)))
        return carrier.diff(self)

    def subsets(self):
        """All subsets, in canonical (size-free, lexicographic mask) order."""
        for r in range(len(self.elements) + 1):
            for combo in itertools.combinations(self.elements, r):
                yield FinSet(combo)

    def name(self) -> str:
        """A single symbol naming this set; used for derived carriers."""
        return "{%s}" % ",".join(self.elements)


def finset(*elements) -> FinSet:
    return FinSet(elements)


class FinMap:
    """A total function between finite sets."""

    __slots__ = ("dom", "cod", "assign")

    def __init__(self, dom: FinSet, cod: FinSet, assign):
        assign = dict(assign)
        if set(assign) != set(dom.elements):
            missing = set(dom.elements) - set(assign)
            extra = set(assign) - set(dom.elements)
            raise CarrierMismatch(
                "assignment must be defined for exactly the domain",
                witness=tuple(sorted(missing | extra)),
            )
        for x, y in assign.items():
            if y not in cod:
                raise CarrierMismatch("value outside the codomain", witness=(x, y))
        object.__setattr__(self, "dom", dom)
        object.__setattr__(self, "cod", cod)
        object.__setattr__(self, "assign", {x: assign[x] for x in dom})

    def __setattr__(self, name, value):
        raise AttributeError("FinMap is immutable")

    def __call__(self, x):
        try:
            return self.assign[x]
        except KeyError:
            raise CarrierMismatch("argument outside the domain", witness=(x,))

    def __eq__(self, other):
        return (
            isinstance(other, FinMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.assign == other.assign
        )

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(sorted(self.assign.items()))))

    def __repr__(self):
        return "FinMap(%s -> %s, %s)" % (list(self.dom), list(self.cod), self.assign)

    @classmethod
    def identity(cls, carrier: FinSet) -> "FinMap":
        return cls(carrier, carrier, {x: x for x in carrier})

    @classmethod
    def constant(cls, dom: FinSet, cod: FinSet, value: Symbol) -> "FinMap":
        return cls(dom, cod, {x: value for x in dom})

    def image(self, subset: FinSet | None = None) -> FinSet:
        if subset is None:
            subset = self.dom
        elif not subset <= self.dom:
            raise CarrierMismatch("image argument not a subset of the domain")
        return FinSet(self.assign[x] for x in subset)

    def preimage(self, subset: FinSet) -> FinSet:
        if not subset <= self.cod:
            raise CarrierMismatch("preimage argument not a subset of the codomain")
        return FinSet(x for x in self.dom if self.assign[x] in subset)

    def restrict(self, subset: FinSet) -> "FinMap":
        if not subset <= self.dom:
            raise CarrierMismatch("restriction outside the domain")
        return FinMap(subset, self.cod, {x: self.assign[x] for x in subset})


@dataclass(frozen=True)
class Partition:
    """Pairwise-disjoint nonempty blocks covering a carrier."""

    carrier: FinSet
    blocks: tuple

    def __post_init__(self):
        seen = []
        for b in self.blocks:
            if len(b) == 0:
                raise ValueError("partition blocks must be nonempty")
            if not b <= self.carrier:
                raise CarrierMismatch("block outside the carrier")
            seen.extend(b)
        if sorted(seen) != list(self.carrier):
            raise ValueError("blocks must be disjoint and cover the carrier")

    def block_of(self, x: Symbol) -> FinSet:
        for b in self.blocks:
            if x in b:
                return b
        raise CarrierMismatch("element outside the carrier", witness=(x,))


@dataclass(frozen=True)
class EndoReport:
    invariant_points: FinSet
    is_once_effective: bool
    stabilizes_at: Symbol | None
    nilpotent_at: tuple | None  # (fixed point, first n with f^n constant)
    iterates: tuple  # (f, f^2, ...) up to max_steps


def compose(g: FinMap, f: FinMap, strict: bool = True) -> FinMap:
    """g after f. Strict mode requires cod(f) = dom(g); general mode
    restricts to the largest domain on which the composite is defined."""
    if strict:
        if f.cod != g.dom:
            raise CompositionMismatch(
                "cod(f) != dom(g)", witness=(tuple(f.cod), tuple(g.dom))
            )
        return FinMap(f.dom, g.cod, {x: g.assign[f.assign[x]] for x in f.dom})
    hits = f.image().inter(g.dom)
    d = FinSet(x for x in f.dom if f.assign[x] in hits)
    return FinMap(d, g.cod, {x: g.assign[f.assign[x]] for x in d})


def classify(f: FinMap) -> dict:
    fibers = {z: f.preimage(finset(z)) for z in f.cod}
    monic = all(len(b) <= 1 for b in fibers.values())
    onto = all(len(b) >= 1 for b in fibers.values())
    return {"monic": monic, "onto": onto, "bijective": monic and onto}


def left_inverse(f: FinMap) -> FinMap:
    """l with l∘f = id. Off-image values take the least domain element."""
    c = classify(f)
    if not c["monic"]:
        raise NotMonic("no left inverse: map is not monic")
    if len(f.dom) == 0:
        raise NotMonic("empty domain admits no selection for off-image values")
    default = f.dom.elements[0]
    back = {f.assign[x]: x for x in f.dom}
    return FinMap(f.cod, f.dom, {y: back.get(y, default) for y in f.cod})


def right_inverse(f: FinMap) -> FinMap:
    """r with f∘r = id; preimage representatives are chosen least-first."""
    if not classify(f)["onto"]:
        raise NotOnto("no right inverse: map is not onto")
    return FinMap(
        f.cod, f.dom, {z: min(f.preimage(finset(z))) for z in f.cod}
    )


def inverse(f: FinMap) -> FinMap:
    if not classify(f)["bijective"]:
        raise NotBijective("no inverse: map is not bijective")
    return FinMap(f.cod, f.dom, {f.assign[x]: x for x in f.dom})


def fiber(f: FinMap, z: Symbol) -> FinSet:
    if z not in f.cod:
        raise CarrierMismatch("fiber point outside the codomain", witness=(z,))
    return f.preimage(finset(z))


def fiber_partition(f: FinMap) -> Partition:
    blocks = [fiber(f, z) for z in f.image()]
    return Partition(f.dom, tuple(sorted(blocks, key=lambda b: b.elements)))


def image_calculus(f: FinMap, A: FinSet, B: FinSet, families=()) -> LawReport:
    """Evaluate the image/preimage law set for subsets A ⊆ dom, B ⊆ cod
    and any number of subset families (over dom or cod)."""
    if not A <= f.dom:
        raise CarrierMismatch("A must be a subset of the domain")
    if not B <= f.cod:
        raise CarrierMismatch("B must be a subset of the codomain")
    r = LawReport("image-calculus")
    c = classify(f)
    fA = f.image(A)
    r.add(
        "img-adjoint",
        "fA ⊆ B iff A ⊆ f⁻¹B",
        (fA <= B) == (A <= f.preimage(B)),
        (tuple(A), tuple(B)),
    )
    r.add("img-unit", "A ⊆ f⁻¹fA", A <= f.preimage(fA), (tuple(A),))
    if c["monic"]:
        r.add("img-unit-monic", "monic: f⁻¹fA = A", f.preimage(fA) == A, (tuple(A),))
    r.add("img-counit", "ff⁻¹B ⊆ B", f.image(f.preimage(B)) <= B, (tuple(B),))
    if c["onto"]:
        r.add("img-counit-onto", "onto: ff⁻¹B = B", f.image(f.preimage(B)) == B, (tuple(B),))
    restricted = f.restrict(A)
    r.add(
        "img-restrict",
        "f|A⁻¹B = A ∩ f⁻¹B",
        restricted.preimage(B) == A.inter(f.preimage(B)),
        (tuple(A), tuple(B)),
    )
    for fam in families:
        members = list(fam)
        over_dom = all(m <= f.dom for m in members)
        over_cod = all(m <= f.cod for m in members)
        if not (over_dom or over_cod):
            raise CarrierMismatch("family members must share a carrier of f")
        if over_dom:
            union = FinSet(x for m in members for x in m)
            inter = f.dom
            for m in members:
                inter = inter.inter(m)
            im_union = FinSet(y for m in members for y in f.image(m))
            im_inter = f.cod
            for m in members:
                im_inter = im_inter.inter(f.image(m))
            r.add("img-union", "f(⋃X) = ⋃fX", f.image(union) == im_union)
            if members:
                r.add("img-inter", "f(⋂X) ⊆ ⋂fX", f.image(inter) <= im_inter)
                if c["monic"]:
                    r.add("img-inter-monic", "monic: f(⋂X) = ⋂fX", f.image(inter) == im_inter)
        if over_cod:
            union = FinSet(y for m in members for y in m)
            inter = f.cod
            for m in members:
                inter = inter.inter(m)
            pre_union = FinSet(x for m in members for x in f.preimage(m))
            pre_inter = f.dom
            for m in members:
                pre_inter = pre_inter.inter(f.preimage(m))
            r.add("pre-union", "f⁻¹(⋃Y) = ⋃f⁻¹Y", f.preimage(union) == pre_union)
            if members:
                r.add("pre-inter", "f⁻¹(⋂Y) = ⋂f⁻¹Y", f.preimage(inter) == pre_inter)
            if len(members) >= 2:
                m0, m1 = members[0], members[1]
                r.add(
                    "pre-diff",
                    "f⁻¹(Y0 − Y1) = f⁻¹Y0 − f⁻¹Y1",
                    f.preimage(m0.diff(m1)) == f.preimage(m0).diff(f.preimage(m1)),
                )
    return r


def fiber_union_check(f: FinMap, A: FinSet, B: FinSet) -> LawReport:
    """For monic f and B inside the image: fA = B iff A is the union of
    the fibers of B. Fibers are only meaningful for image points, so
    points of B outside Im f reduce the claim to one direction."""
    r = LawReport("fiber-union")
    fibers_of_B = FinSet(x for z in B for x in fiber(f, z))
    lhs = f.image(A) == B
    rhs = A == fibers_of_B
    if classify(f)["monic"] and B <= f.image():
        r.add("fib-prop", "monic: fA = B iff A = ⋃ fibers of B", lhs == rhs, (tuple(A), tuple(B)))
    else:
        r.add(
            "fib-prop-onedir",
            "fA = B implies A ⊆ ⋃ fibers of B",
            (not lhs) or A <= fibers_of_B,
            (tuple(A), tuple(B)),
        )
    return r


def decompose(f: FinMap):
    """Split f as immersion ∘ bijection ∘ projection through its fibers."""
    part = fiber_partition(f)
    block_names = {b: b.name() for b in part.blocks}
    middle = FinSet(block_names.values())
    p = FinMap(f.dom, middle, {x: block_names[part.block_of(x)] for x in f.dom})
    im = f.image()
    bij = FinMap(
        middle, im, {block_names[b]: f.assign[b.elements[0]] for b in part.blocks}
    )
    incl = FinMap(im, f.cod, {y: y for y in im})
    return p, bij, incl


def fold(op, seq):
    """Left fold of a binary table over a nonempty symbol sequence.

    Returns the total and the sequence of partial results."""
    seq = list(seq)
    if not seq:
        raise EmptyFold("fold of an empty sequence")
    acc = seq[0]
    partials = [acc]
    for x in seq[1:]:
        if (acc, x) not in op:
            raise CarrierMismatch("operation table missing a cell", witness=(acc, x))
        acc = op[(acc, x)]
        partials.append(acc)
    return acc, tuple(partials)


def iterate(f: FinMap, n: int) -> FinMap:
    if f.dom != f.cod:
        raise CompositionMismatch("iteration needs an endofunction")
    g = FinMap.identity(f.dom)
    for _ in range(n):
        g = compose(f, g)
    return g


def endo_analyze(f: FinMap, max_steps: int | None = None) -> EndoReport:
    """Dynamics of an endofunction: invariant points, once-effectiveness,
    stabilization and nilpotency, with the iterate sequence up to max_steps."""
    if f.dom != f.cod:
        raise CompositionMismatch("endo analysis needs dom = cod")
    if max_steps is None:
        max_steps = max(1, len(f.dom))
    inv = FinSet(x for x in f.dom if f.assign[x] == x)
    once = f.image() <= inv
    iterates = []
    g = f
    for _ in range(max_steps):
        iterates.append(g)
        g = compose(f, g)
    stabilizes_at = None
    nilpotent_at = None
    for a in inv:
        if all(_orbit_reaches(f, x, a) for x in f.dom):
            stabilizes_at = a
            break
    for n, g in enumerate(iterates, start=1):
        values = set(g.assign.values())
        if len(values) == 1:
            a = values.pop()
            if a in inv:
                nilpotent_at = (a, n)
            break
    return EndoReport(inv, once, stabilizes_at, nilpotent_at, tuple(iterates))


def _orbit_reaches(f: FinMap, x: Symbol, a: Symbol) -> bool:
    seen = set()
    while x not in seen:
        if x == a:
            return True
        seen.add(x)
        x = f.assign[x]
    return x == a


def natural_pair_check(F: FinMap, G: FinMap, sa: FinMap, sb: FinMap) -> LawReport:
    """Does G describe F after transforming source and target by sa, sb?"""
    r = LawReport("natural-pair")
    if sa.dom != F.dom or sa.cod != G.dom:
        raise CarrierMismatch("sa must map dom F onto dom G")
    if sb.dom != F.cod or sb.cod != G.cod:
        raise CarrierMismatch("sb must map cod F to cod G")
    if not classify(sa)["onto"]:
        raise NotOnto("sa must be onto for the pair to be well posed")
    ok = True
    witness = None
    for x in F.dom:
        if G.assign[sa.assign[x]] != sb.assign[F.assign[x]]:
            ok = False
            witness = (x,)
            break
    r.add("nat-pair", "G(sa x) = sb(F x) for all x", ok, witness)
    return r


def select(family, rule=min) -> FinMap:
    """A deterministic selection function: one element from each member.

    The domain carries member names (``FinSet.name``)."""
    members = sorted(set(family), key=lambda m: m.elements)
    for m in members:
        if len(m) == 0:
            raise EmptyMember("cannot select from an empty member")
    dom = FinSet(m.name() for m in members)
    cod = FinSet(x for m in members for x in m)
    by_name = {m.name(): m for m in members}
    return FinMap(dom, cod, {n: rule(by_name[n].elements) for n in dom})


def all_maps(dom: FinSet, cod: FinSet):
    """Every total map dom → cod, in lexicographic order of value tuples."""
    if len(dom) == 0:
        yield FinMap(dom, cod, {})
        return
    if len(cod) == 0:
        return
    for values in itertools.product(cod.elements, repeat=len(dom)):
        yield FinMap(dom, cod, dict(zip(dom.elements, values)))
