"""Closure operators, topologies, and bases on finite carriers.

Two closure constructions are shipped side by side: the strict
axiom checker (point-fixing plus additivity, which on a finite carrier
admits only the discrete model) and the closed-family machinery, where
closure is intersection of enclosing closed sets. The tension between
them is deliberate and documented in the reports, not papered over.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .core import FinSet, finset
from .errors import BadStructure, CarrierMismatch, NotClosedFamily, NotCovering
from .report import LawReport
from .settools import Family, inter_of, union_of


class ClosureOp:
    """A total table sending each subset of the carrier to a subset."""

    __slots__ = ("carrier", "table")

    def __init__(self, carrier: FinSet, table):
        table = dict(table)
        if set(table) != set(carrier.subsets()):
            raise CarrierMismatch("closure table must cover the whole power set")
        for a, b in table.items():
            if not b <= carrier:
                raise CarrierMismatch("closure value escapes the carrier", witness=(a.name(),))
        object.__setattr__(self, "carrier", carrier)
        object.__setattr__(self, "table", table)

    def __setattr__(self, name, value):
        raise AttributeError("ClosureOp is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, ClosureOp)
            and self.carrier == other.carrier
            and self.table == other.table
        )

    def __hash__(self):
        return hash((self.carrier, tuple(sorted(self.table.items(), key=lambda kv: kv[0].elements))))

    def __call__(self, A: FinSet) -> FinSet:
        return self.table[A]

    def closed_sets(self) -> Family:
        return Family(self.carrier, [A for A in self.table if self.table[A] == A])


def discrete_closure(carrier: FinSet) -> ClosureOp:
    return ClosureOp(carrier, {A: A for A in carrier.subsets()})


def closure_laws(op: ClosureOp) -> LawReport:
    """The lenient law set shared by both constructions: empty set,
    extensivity, monotonicity, idempotence, and the closed-family
    theorems."""
    r = LawReport("closure-laws")
    subs = list(op.carrier.subsets())
    r.add("clx-empty", "the empty set is closed", op(FinSet()) == FinSet())
    bad = next(((A.name(),) for A in subs if not A <= op(A)), None)
    r.add("clx-extensive", "every set sits inside its closure", bad is None, bad)
    bad = next(
        (
            (A.name(), B.name())
            for A in subs
            for B in subs
            if A <= B and not op(A) <= op(B)
        ),
        None,
    )
    r.add("clx-monotone", "closure preserves inclusion", bad is None, bad)
    bad = next(((A.name(),) for A in subs if op(op(A)) != op(A)), None)
    r.add("clx-idempotent", "closing twice adds nothing", bad is None, bad)
    closed = op.closed_sets()
    bad = next(
        (
            (a.name(), b.name())
            for a in closed.members
            for b in closed.members
            if a.union(b) not in closed.members
        ),
        None,
    )
    r.add("clx-closed-union", "finite unions of closed sets are closed", bad is None, bad)
    inter_ok = all(
        inter_of(combo, op.carrier) in closed.members
        for k in range(1, len(closed.members) + 1)
        for combo in itertools.combinations(sorted(closed.members, key=lambda s: s.elements), k)
    ) if len(op.carrier) <= 4 else all(
        a.inter(b) in closed.members for a in closed.members for b in closed.members
    )
    r.add("clx-closed-inter", "intersections of closed sets are closed", inter_ok)
    return r


def closure_check(op: ClosureOp) -> LawReport:
    """The strict functor-style axioms: unit and union preservation,
    point fixing, idempotence, plus the derived laws."""
    r = closure_laws(op)
    r = LawReport(
        "closure-strict",
        list(r.checks),
    )
    subs = list(op.carrier.subsets())
    bad = next(
        (
            (A.name(), B.name())
            for A in subs
            for B in subs
            if op(A.union(B)) != op(A).union(op(B))
        ),
        None,
    )
    r.add("cls-additive", "closure of a union is the union of closures", bad is None, bad)
    bad = next(((x,) for x in op.carrier if op(finset(x)) != finset(x)), None)
    r.add("cls-points", "singletons are their own closures", bad is None, bad)
    return r


def closure_from_closed(carrier: FinSet, C: Family) -> ClosureOp:
    """Closure as intersection of enclosing closed sets."""
    if C.carrier != carrier:
        raise CarrierMismatch("closed family lives over a different carrier")
    if FinSet() not in C.members or carrier not in C.members:
        raise NotClosedFamily("the empty set and the carrier must be closed")
    bad = next(
        (
            (a.name(), b.name())
            for a in C.members
            for b in C.members
            if a.inter(b) not in C.members
        ),
        None,
    )
    if bad is not None:
        raise NotClosedFamily("family is not intersection closed", witness=bad)
    bad = next(
        (
            (a.name(), b.name())
            for a in C.members
            for b in C.members
            if a.union(b) not in C.members
        ),
        None,
    )
    if bad is not None:
        raise NotClosedFamily("family is not union closed", witness=bad)
    table = {
        A: inter_of((D for D in C.members if A <= D), carrier)
        for A in carrier.subsets()
    }
    op = ClosureOp(carrier, table)
    rep = closure_laws(op)
    assert rep.passed, rep.render_text()
    assert op.closed_sets().members == C.members, (
        "the closed sets of the induced closure must be the input family"
    )
    return op


@dataclass(frozen=True)
class Topology:
    carrier: FinSet
    opens: Family


def check_topology(carrier: FinSet, opens: Family) -> Topology:
    if opens.carrier != carrier:
        raise CarrierMismatch("open family lives over a different carrier")
    ms = opens.members
    if FinSet() not in ms or carrier not in ms:
        raise BadStructure("the empty set and the carrier must be open")
    bad = next(
        ((a.name(), b.name()) for a in ms for b in ms if a.union(b) not in ms),
        None,
    )
    if bad is not None:
        raise BadStructure("opens are not union closed", witness=bad)
    bad = next(
        ((a.name(), b.name()) for a in ms for b in ms if a.inter(b) not in ms),
        None,
    )
    if bad is not None:
        raise BadStructure("opens are not intersection closed", witness=bad)
    # arbitrary unions: on a finite carrier, subfamily unions reduce to
    # pairwise ones; spot-verify the reduction
    if len(carrier) <= 3:
        assert all(
            union_of(combo) in ms
            for k in range(len(ms) + 1)
            for combo in itertools.combinations(sorted(ms, key=lambda s: s.elements), k)
        )
    return Topology(carrier, opens)


def open_duality(T: Topology) -> Family:
    """The closed sets; complementation is checked in both directions."""
    closed = Family(T.carrier, [s.complement_in(T.carrier) for s in T.opens.members])
    assert all(
        (s in T.opens.members) == (s.complement_in(T.carrier) in closed.members)
        for s in T.carrier.subsets()
    )
    return closed


def neighborhoods(T: Topology, x) -> Family:
    if x not in T.carrier:
        raise CarrierMismatch("point outside the carrier", witness=(x,))
    members = [
        N
        for N in T.carrier.subsets()
        if any(x in V and V <= N for V in T.opens.members)
    ]
    return Family(T.carrier, members)


def neighborhood_laws(T: Topology) -> LawReport:
    r = LawReport("neighborhoods")
    nbhd = {x: neighborhoods(T, x).members for x in T.carrier}
    bad = next(
        (
            (V.name(),)
            for V in T.carrier.subsets()
            if (V in T.opens.members) != all(V in nbhd[x] for x in V)
        ),
        None,
    )
    r.add(
        "nb-open-iff",
        "a set is open exactly when it neighbors each of its points",
        bad is None,
        bad,
    )
    r.add(
        "nb-superset",
        "supersets of neighborhoods are neighborhoods",
        all(
            all(
                N2 in nbhd[x]
                for N in nbhd[x]
                for N2 in T.carrier.subsets()
                if N <= N2
            )
            for x in T.carrier
        ),
    )
    return r


def point_base_check(T: Topology, x, Bx: Family) -> bool:
    """Bx is a point base of x: a family of open sets such that every
    neighborhood of x swallows a member through x."""
    if not Bx.members <= T.opens.members:
        return False
    nbhd = neighborhoods(T, x).members
    return all(any(x in U and U <= N for U in Bx.members) for N in nbhd)


def base_ops(carrier: FinSet, B: Family) -> dict:
    """The topology a base generates, the base criterion report, and the
    closure operator read off the base. The closure is asserted
    table-identical to the closed-family construction."""
    if B.carrier != carrier:
        raise CarrierMismatch("base lives over a different carrier")
    uncovered = next((x for x in carrier if not any(x in U for U in B.members)), None)
    if uncovered is not None:
        raise NotCovering("a point lies in no base member", witness=(uncovered,))
    # close under unions and intersections to reach a genuine topology;
    # a family that is already a base adds nothing in the second step
    opens = set(B.members) | {FinSet(), carrier}
    while True:
        new = set(opens)
        for a in opens:
            for b in opens:
                new.add(a.union(b))
                new.add(a.inter(b))
        if new == opens:
            break
        opens = new
    T = check_topology(carrier, Family(carrier, opens))
    r = LawReport("base")
    point_form = all(
        any(x in U and U <= V for U in B.members)
        for V in T.opens.members
        for x in V
    )
    union_form = all(
        V == union_of(U for U in B.members if U <= V)
        for V in T.opens.members
        if len(V) > 0
    )
    r.add(
        "bs-criterion-agree",
        "the union form and the pointwise form of the base criterion agree",
        point_form == union_form,
    )
    r.add(
        "bs-members-open",
        "base members are open",
        B.members <= T.opens.members,
    )
    table = {}
    for A in carrier.subsets():
        table[A] = FinSet(
            x
            for x in carrier
            if all(U.inter(A) for U in B.members if x in U)
        )
    cl = ClosureOp(carrier, table)
    if point_form:
        r.add(
            "bs-point-base",
            "a base is a point base of every point",
            all(point_base_check(T, x, B) for x in carrier),
        )
        closed = open_duality(T)
        from_closed = closure_from_closed(carrier, closed)
        r.add(
            "bs-closure-equivalence",
            "closure via base neighborhoods matches closure via closed sets",
            cl == from_closed,
        )
    else:
        r.add(
            "bs-subbase-only",
            "the family fails the base criterion; base-only laws are skipped",
            True,
        )
    return {"topology": T, "criterion": r, "closure": cl, "is_base": point_form}


@lru_cache(maxsize=None)
def _enumerate_topologies_cached(carrier: FinSet) -> tuple:
    subs = [s for s in carrier.subsets() if len(s) not in (0, len(carrier))]
    out = []
    for k in range(len(subs) + 1):
        for combo in itertools.combinations(subs, k):
            fam = Family(carrier, set(combo) | {FinSet(), carrier})
            ms = fam.members
            if all(a.union(b) in ms and a.inter(b) in ms for a in ms for b in ms):
                out.append(fam)
    return tuple(out)


def enumerate_topologies(carrier: FinSet) -> list:
    if len(carrier) > 4:
        from .errors import TooLarge

        raise TooLarge("topology enumeration capped at 4 points", witness=(len(carrier),))
    return list(_enumerate_topologies_cached(carrier))
