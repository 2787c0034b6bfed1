"""Structure documents: the text surface of the library.

A document is a restricted JSON profile — a single object with a
``kind`` key and a fixed, kind-specific key set. Sets are arrays of
strings, relations are arrays of pairs, operation tables are arrays of
triples, and nested structures (the groups of a homomorphism, the
categories of a functor) are full sub-documents. ``parse`` canonicalizes
on the way in, so ``render`` is a fixpoint: rendering a parsed document
and parsing it again gives an identical document, byte for byte.

``run_check`` routes a document to its kind's law suite; ``run_derive``
builds a new document from an old one (quotient group, opposite
category, generated filter, topology from a base, ...).
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .core import FinMap, FinSet, check_symbol, classify, compose
from .errors import ParseError, SchemaError, StructaError, TooLarge
from .report import LawReport

KINDS = (
    "set",
    "map",
    "poset",
    "semilattice",
    "category",
    "functor",
    "nattrans",
    "group",
    "hom",
    "action",
    "family",
    "filterbase",
    "closure",
    "topology",
    "base",
    "rational-window",
)


@dataclass(frozen=True)
class StructureDoc:
    """A parsed, canonicalized document: a kind and its payload tables."""

    kind: str
    body: tuple  # canonical (key, json-value) pairs, hashable

    def __getitem__(self, key):
        return dict(self.body)[key]

    def payload(self) -> dict:
        return {"kind": self.kind, **{k: _thaw(v) for k, v in self.body}}


def _freeze(v):
    if isinstance(v, list):
        return tuple(_freeze(x) for x in v)
    if isinstance(v, dict):
        return tuple(sorted((k, _freeze(x)) for k, x in v.items()))
    return v


def _thaw(v):
    if isinstance(v, tuple):
        if v and all(
            isinstance(p, tuple) and len(p) == 2 and isinstance(p[0], str) for p in v
        ) and _looks_like_doc(v):
            return {k: _thaw(x) for k, x in v}
        return [_thaw(x) for x in v]
    return v


def _looks_like_doc(pairs) -> bool:
    keys = [p[0] for p in pairs]
    return "kind" in keys


# ---------------------------------------------------------------------------
# schema validation


def _want_keys(body: dict, kind: str, keys: set):
    got = set(body) - {"kind"}
    if got != keys:
        missing = sorted(keys - got)
        extra = sorted(got - keys)
        raise SchemaError(
            "kind %r wants keys %s; missing %s, unexpected %s"
            % (kind, sorted(keys), missing, extra)
        )


def _symbol(v, where: str) -> str:
    if not isinstance(v, str):
        raise SchemaError("%s must be a string, got %r" % (where, v))
    try:
        return check_symbol(v)
    except StructaError as e:
        raise SchemaError("%s: %s" % (where, e))


def _symbol_list(v, where: str) -> list:
    if not isinstance(v, list):
        raise SchemaError("%s must be an array of strings" % where)
    out = [_symbol(x, where) for x in v]
    dup = sorted({x for x in out if out.count(x) > 1})
    if dup:
        raise SchemaError("%s has duplicate entries %s" % (where, dup))
    return sorted(out)


def _tuple_list(v, n: int, where: str) -> list:
    if not isinstance(v, list):
        raise SchemaError("%s must be an array of %d-tuples" % (where, n))
    out = []
    for row in v:
        if not isinstance(row, list) or len(row) != n:
            raise SchemaError("%s entries must be arrays of length %d" % (where, n))
        out.append([_symbol(x, where) for x in row])
    return out


def _declared(x, declared, where: str):
    if x not in declared:
        raise SchemaError("undeclared symbol %r in %s" % (x, where))
    return x


def _total_table(rows, left, right, values, where: str) -> list:
    """Rows [a, b, v] with (a, b) covering left x right exactly once."""
    seen = {}
    for a, b, v in rows:
        _declared(a, left, where)
        _declared(b, right, where)
        _declared(v, values, where)
        if (a, b) in seen:
            raise SchemaError("%s defines the cell (%s, %s) twice" % (where, a, b))
        seen[(a, b)] = v
    for a in left:
        for b in right:
            if (a, b) not in seen:
                raise SchemaError(
                    "%s is not total: missing the cell (%s, %s)" % (where, a, b)
                )
    return sorted([a, b, v] for (a, b), v in seen.items())


def _total_pairs(rows, keys, values, where: str) -> list:
    """Rows [k, v] with k covering ``keys`` exactly once."""
    seen = {}
    for k, v in rows:
        _declared(k, keys, where)
        _declared(v, values, where)
        if k in seen:
            raise SchemaError("%s assigns %r twice" % (where, k))
        seen[k] = v
    for k in keys:
        if k not in seen:
            raise SchemaError("%s is not total: no value for %r" % (where, k))
    return sorted([k, v] for k, v in seen.items())


def _subset_list(v, carrier, where: str) -> list:
    if not isinstance(v, list):
        raise SchemaError("%s must be an array of subsets" % where)
    out = []
    for sub in v:
        if not isinstance(sub, list):
            raise SchemaError("%s members must be arrays of strings" % where)
        members = [_symbol(x, where) for x in sub]
        for x in members:
            _declared(x, carrier, where)
        if len(set(members)) != len(members):
            raise SchemaError("%s member lists elements twice" % where)
        out.append(sorted(members))
    canon = sorted(out)
    for i in range(1, len(canon)):
        if canon[i] == canon[i - 1]:
            raise SchemaError("%s lists the subset %s twice" % (where, canon[i]))
    return canon


def _nested(body, key, kind, where: str) -> dict:
    sub = body.get(key)
    if not isinstance(sub, dict):
        raise SchemaError("%s must be a nested %r document" % (where, kind))
    if sub.get("kind") != kind:
        raise SchemaError("%s must have kind %r" % (where, kind))
    return _validate(sub)


def _v_set(body):
    _want_keys(body, "set", {"elements"})
    return {"elements": _symbol_list(body["elements"], "elements")}


def _v_map(body):
    _want_keys(body, "map", {"dom", "cod", "map"})
    dom = _symbol_list(body["dom"], "dom")
    cod = _symbol_list(body["cod"], "cod")
    rows = _tuple_list(body["map"], 2, "map")
    return {"dom": dom, "cod": cod, "map": _total_pairs(rows, dom, cod, "map")}


def _v_poset(body):
    _want_keys(body, "poset", {"carrier", "le"})
    carrier = _symbol_list(body["carrier"], "carrier")
    rows = _tuple_list(body["le"], 2, "le")
    for x, y in rows:
        _declared(x, carrier, "le")
        _declared(y, carrier, "le")
    pairs = sorted([x, y] for x, y in {(x, y) for x, y in rows})
    return {"carrier": carrier, "le": pairs}


def _v_op_table(body, kind):
    _want_keys(body, kind, {"carrier", "table"})
    carrier = _symbol_list(body["carrier"], "carrier")
    rows = _tuple_list(body["table"], 3, "table")
    return {
        "carrier": carrier,
        "table": _total_table(rows, carrier, carrier, carrier, "table"),
    }


def _v_category(body):
    _want_keys(body, "category", {"objects", "arrows", "identity", "comp"})
    objects = _symbol_list(body["objects"], "objects")
    arrows = _tuple_list(body["arrows"], 3, "arrows")
    names = []
    for n, s, t in arrows:
        _declared(s, objects, "arrows")
        _declared(t, objects, "arrows")
        names.append(n)
    if len(set(names)) != len(names):
        dup = sorted({n for n in names if names.count(n) > 1})
        raise SchemaError("arrows declares duplicate names %s" % dup)
    ident = _total_pairs(
        _tuple_list(body["identity"], 2, "identity"), objects, names, "identity"
    )
    comp_rows = _tuple_list(body["comp"], 3, "comp")
    seen = set()
    for g, f, v in comp_rows:
        _declared(g, names, "comp")
        _declared(f, names, "comp")
        _declared(v, names, "comp")
        if (g, f) in seen:
            raise SchemaError("comp defines the cell (%s, %s) twice" % (g, f))
        seen.add((g, f))
    return {
        "objects": objects,
        "arrows": sorted(arrows),
        "identity": ident,
        "comp": sorted(comp_rows),
    }


def _v_functor(body):
    _want_keys(body, "functor", {"src", "tgt", "on_obj", "on_arr"})
    src = _nested(body, "src", "category", "src")
    tgt = _nested(body, "tgt", "category", "tgt")
    src_arrows = [n for n, _, _ in src["arrows"]]
    tgt_arrows = [n for n, _, _ in tgt["arrows"]]
    return {
        "src": src,
        "tgt": tgt,
        "on_obj": _total_pairs(
            _tuple_list(body["on_obj"], 2, "on_obj"),
            src["objects"],
            tgt["objects"],
            "on_obj",
        ),
        "on_arr": _total_pairs(
            _tuple_list(body["on_arr"], 2, "on_arr"),
            src_arrows,
            tgt_arrows,
            "on_arr",
        ),
    }


def _v_nattrans(body):
    _want_keys(body, "nattrans", {"f", "g", "component"})
    f = _nested(body, "f", "functor", "f")
    g = _nested(body, "g", "functor", "g")
    if f["src"] != g["src"] or f["tgt"] != g["tgt"]:
        raise SchemaError("component families need parallel functors")
    tgt_arrows = [n for n, _, _ in f["tgt"]["arrows"]]
    return {
        "f": f,
        "g": g,
        "component": _total_pairs(
            _tuple_list(body["component"], 2, "component"),
            f["src"]["objects"],
            tgt_arrows,
            "component",
        ),
    }


def _v_hom(body):
    _want_keys(body, "hom", {"src", "tgt", "map"})
    src = _nested(body, "src", "group", "src")
    tgt = _nested(body, "tgt", "group", "tgt")
    rows = _tuple_list(body["map"], 2, "map")
    return {
        "src": src,
        "tgt": tgt,
        "map": _total_pairs(rows, src["carrier"], tgt["carrier"], "map"),
    }


def _v_action(body):
    _want_keys(body, "action", {"group", "carrier", "act"})
    group = _nested(body, "group", "group", "group")
    carrier = _symbol_list(body["carrier"], "carrier")
    rows = _tuple_list(body["act"], 3, "act")
    return {
        "group": group,
        "carrier": carrier,
        "act": _total_table(rows, group["carrier"], carrier, carrier, "act"),
    }


def _v_subset_family(body, kind):
    _want_keys(body, kind, {"carrier", "members"})
    carrier = _symbol_list(body["carrier"], "carrier")
    key = "opens" if kind == "topology" else "members"
    return {"carrier": carrier, "members": _subset_list(body["members"], carrier, key)}


def _v_topology(body):
    _want_keys(body, "topology", {"carrier", "opens"})
    carrier = _symbol_list(body["carrier"], "carrier")
    return {"carrier": carrier, "opens": _subset_list(body["opens"], carrier, "opens")}


def _v_closure(body):
    _want_keys(body, "closure", {"carrier", "table"})
    carrier = _symbol_list(body["carrier"], "carrier")
    if not isinstance(body["table"], list):
        raise SchemaError("table must be an array of [subset, subset] pairs")
    seen = {}
    for row in body["table"]:
        if not isinstance(row, list) or len(row) != 2:
            raise SchemaError("table entries must be [subset, subset] pairs")
        key = tuple(sorted(_subset_list([row[0]], carrier, "table")[0]))
        val = _subset_list([row[1]], carrier, "table")[0]
        if key in seen:
            raise SchemaError("table defines the cell {%s} twice" % ", ".join(key))
        seen[key] = val
    full = FinSet(carrier).subsets()
    for sub in full:
        if tuple(sub.elements) not in seen:
            raise SchemaError(
                "table is not total: missing the cell {%s}" % ", ".join(sub.elements)
            )
    return {
        "carrier": carrier,
        "table": sorted([list(k), v] for k, v in seen.items()),
    }


def _v_rational_window(body):
    _want_keys(body, "rational-window", {"window", "den"})
    for key in ("window", "den"):
        v = body[key]
        if not isinstance(v, int) or isinstance(v, bool) or v < 1:
            raise SchemaError("%s must be a positive integer" % key)
    return {"window": body["window"], "den": body["den"]}


_VALIDATORS = {
    "set": _v_set,
    "map": _v_map,
    "poset": _v_poset,
    "semilattice": lambda b: _v_op_table(b, "semilattice"),
    "category": _v_category,
    "functor": _v_functor,
    "nattrans": _v_nattrans,
    "group": lambda b: _v_op_table(b, "group"),
    "hom": _v_hom,
    "action": _v_action,
    "family": lambda b: _v_subset_family(b, "family"),
    "filterbase": lambda b: _v_subset_family(b, "filterbase"),
    "closure": _v_closure,
    "topology": _v_topology,
    "base": lambda b: _v_subset_family(b, "base"),
    "rational-window": _v_rational_window,
}


def _validate(payload: dict) -> dict:
    kind = payload.get("kind")
    if kind not in KINDS:
        raise SchemaError("unknown kind %r; expected one of %s" % (kind, list(KINDS)))
    return {"kind": kind, **_VALIDATORS[kind](payload)}


# ---------------------------------------------------------------------------
# parse and render


def parse_text(text: str) -> StructureDoc:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(e.msg, line=e.lineno, column=e.colno)
    if not isinstance(payload, dict):
        raise SchemaError("a document must be a JSON object with a 'kind' key")
    canon = _validate(payload)
    kind = canon.pop("kind")
    return StructureDoc(kind, _freeze(canon))


def parse(source: str) -> StructureDoc:
    """Parse a document from literal text (anything starting with '{')
    or from a file path."""
    if source.lstrip().startswith("{"):
        return parse_text(source)
    with open(source, encoding="utf-8") as fh:
        return parse_text(fh.read())


def render(doc: StructureDoc) -> str:
    return json.dumps(doc.payload(), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# documents -> library structures


def to_structure(doc: StructureDoc):
    """The library object a document denotes. Invalid structures raise
    the same errors the library constructors raise."""
    build = _BUILDERS[doc.kind]
    return build(doc)


def _b_set(doc):
    return FinSet(doc["elements"])


def _b_map(doc):
    return FinMap(
        FinSet(doc["dom"]), FinSet(doc["cod"]), {k: v for k, v in doc["map"]}
    )


def _b_poset(doc):
    from .order import Poset

    return Poset(FinSet(doc["carrier"]), {(x, y) for x, y in doc["le"]})


def _table(doc):
    return {(a, b): v for a, b, v in doc["table"]}


def _b_group(doc):
    from .group import check_group

    return check_group(_table(doc), FinSet(doc["carrier"]))


def _b_category(doc):
    from .category import FinCat

    return FinCat(
        doc["objects"],
        [tuple(a) for a in doc["arrows"]],
        {x: n for x, n in doc["identity"]},
        {(g, f): v for g, f, v in doc["comp"]},
    )


def _b_functor(doc):
    from .category import FunctorData

    return FunctorData(
        _b_category(_as_doc(doc["src"])),
        _b_category(_as_doc(doc["tgt"])),
        {k: v for k, v in doc["on_obj"]},
        {k: v for k, v in doc["on_arr"]},
    )


def _b_nattrans(doc):
    from .category import NatTransData

    return NatTransData(
        _b_functor(_as_doc(doc["f"])),
        _b_functor(_as_doc(doc["g"])),
        {k: v for k, v in doc["component"]},
    )


def _b_hom(doc):
    from .group import GroupHom

    src = _b_group(_as_doc(doc["src"]))
    tgt = _b_group(_as_doc(doc["tgt"]))
    f = FinMap(src.carrier, tgt.carrier, {k: v for k, v in doc["map"]})
    return GroupHom(src, tgt, f)


def _b_action(doc):
    from .group import GroupAction

    G = _b_group(_as_doc(doc["group"]))
    carrier = FinSet(doc["carrier"])
    table = {(g, x): y for g, x, y in doc["act"]}
    act = {
        g: FinMap(carrier, carrier, {x: table[(g, x)] for x in carrier})
        for g in G.carrier
    }
    return GroupAction(G, carrier, act)


def _b_family(doc):
    from .settools import Family

    return Family(FinSet(doc["carrier"]), [FinSet(m) for m in doc["members"]])


def _b_closure(doc):
    from .top import ClosureOp

    return ClosureOp(
        FinSet(doc["carrier"]),
        {FinSet(k): FinSet(v) for k, v in doc["table"]},
    )


def _b_topology(doc):
    from .settools import Family
    from .top import check_topology

    carrier = FinSet(doc["carrier"])
    return check_topology(carrier, Family(carrier, [FinSet(m) for m in doc["opens"]]))


def _as_doc(frozen_body) -> StructureDoc:
    pairs = dict(frozen_body)
    kind = pairs.pop("kind")
    return StructureDoc(kind, tuple(sorted(pairs.items())))


_BUILDERS = {
    "set": _b_set,
    "map": _b_map,
    "poset": _b_poset,
    "semilattice": lambda d: (_table(d), FinSet(d["carrier"])),
    "category": _b_category,
    "functor": _b_functor,
    "nattrans": _b_nattrans,
    "group": _b_group,
    "hom": _b_hom,
    "action": _b_action,
    "family": _b_family,
    "filterbase": _b_family,
    "closure": _b_closure,
    "topology": _b_topology,
    "base": _b_family,
    "rational-window": lambda d: (d["window"], d["den"]),
}


# ---------------------------------------------------------------------------
# library structures -> documents


def doc_set(A: FinSet) -> StructureDoc:
    return parse_text(json.dumps({"kind": "set", "elements": list(A.elements)}))


def doc_map(f: FinMap) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "map",
                "dom": list(f.dom.elements),
                "cod": list(f.cod.elements),
                "map": [[x, y] for x, y in f.assign.items()],
            }
        )
    )


def doc_poset(P) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "poset",
                "carrier": list(P.carrier.elements),
                "le": [[x, y] for x, y in sorted(P.pairs)],
            }
        )
    )


def doc_table(kind: str, table: dict, carrier: FinSet) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": kind,
                "carrier": list(carrier.elements),
                "table": [[a, b, v] for (a, b), v in sorted(table.items())],
            }
        )
    )


def doc_group(G) -> StructureDoc:
    return doc_table("group", G.op, G.carrier)


def doc_category(C) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "category",
                "objects": list(C.objects.elements),
                "arrows": [list(a) for a in C.arrows],
                "identity": [[x, n] for x, n in sorted(C.identity.items())],
                "comp": [[g, f, v] for (g, f), v in sorted(C.comp.items())],
            }
        )
    )


def doc_functor(F) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "functor",
                "src": doc_category(F.src).payload(),
                "tgt": doc_category(F.tgt).payload(),
                "on_obj": [[k, v] for k, v in sorted(F.on_obj.items())],
                "on_arr": [[k, v] for k, v in sorted(F.on_arr.items())],
            }
        )
    )


def doc_nattrans(n) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "nattrans",
                "f": doc_functor(n.F).payload(),
                "g": doc_functor(n.G).payload(),
                "component": [[k, v] for k, v in sorted(n.component.items())],
            }
        )
    )


def doc_hom(h) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "hom",
                "src": doc_group(h.src).payload(),
                "tgt": doc_group(h.tgt).payload(),
                "map": [[x, y] for x, y in h.map.assign.items()],
            }
        )
    )


def doc_action(A) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "action",
                "group": doc_group(A.group).payload(),
                "carrier": list(A.carrier.elements),
                "act": [
                    [g, x, A.act[g](x)] for g in A.group.carrier for x in A.carrier
                ],
            }
        )
    )


def doc_subsets(kind: str, carrier: FinSet, members) -> StructureDoc:
    key = "opens" if kind == "topology" else "members"
    return parse_text(
        json.dumps(
            {
                "kind": kind,
                "carrier": list(carrier.elements),
                key: sorted(list(m.elements) for m in members),
            }
        )
    )


def doc_closure(op) -> StructureDoc:
    return parse_text(
        json.dumps(
            {
                "kind": "closure",
                "carrier": list(op.carrier.elements),
                "table": [
                    [list(a.elements), list(b.elements)]
                    for a, b in sorted(
                        op.table.items(), key=lambda kv: kv[0].elements
                    )
                ],
            }
        )
    )


# ---------------------------------------------------------------------------
# check dispatch


def _guard(doc: StructureDoc, size: int, bound: int, what: str):
    if size > bound:
        raise TooLarge(
            "%s document exceeds the size bound (%d > %d); raise --max-size"
            % (what, size, bound),
            witness=(size, bound),
        )


def run_check(doc: StructureDoc, max_size: int | None = None) -> LawReport:
    """The law suite of the document's kind, as a report."""
    return _CHECKERS[doc.kind](doc, max_size)


def _ck_set(doc, max_size):
    A = _b_set(doc)
    r = LawReport("set")
    r.add("set-elements", "elements are distinct well-formed symbols", True)
    r.add(
        "set-subset-count",
        "a finite set has 2^n subsets",
        len(list(A.subsets())) == 2 ** len(A) if len(A) <= (max_size or 10) else True,
    )
    return r


def _ck_map(doc, max_size):
    f = _b_map(doc)
    r = LawReport("map")
    flags = classify(f)
    r.add("map-total", "the assignment covers exactly the domain", True)
    r.add(
        "map-classify",
        "monic and onto together are equivalent to bijective",
        flags["bijective"] == (flags["monic"] and flags["onto"]),
    )
    from .core import image_calculus

    r.merge(image_calculus(f, f.dom, f.cod))
    return r


def _ck_poset(doc, max_size):
    from .order import check_order

    rep = check_order(FinSet(doc["carrier"]), {(x, y) for x, y in doc["le"]})
    # totality distinguishes natural orders; it is not a poset law
    out = LawReport(rep.suite, [c for c in rep.checks if c.law != "total"])
    return out


def _ck_semilattice(doc, max_size):
    from .order import semilattice_report

    return semilattice_report(_table(doc), FinSet(doc["carrier"]))


def _ck_category(doc, max_size):
    from .category import check_category

    return check_category(_b_category(doc))


def _ck_functor(doc, max_size):
    from .category import check_category, check_functor

    F = _b_functor(doc)
    r = LawReport("functor")
    r.merge(check_category(F.src))
    r.merge(check_category(F.tgt))
    r.merge(check_functor(F))
    return r


def _ck_nattrans(doc, max_size):
    from .category import check_functor, check_nat

    n = _b_nattrans(doc)
    r = LawReport("nattrans")
    r.merge(check_functor(n.F))
    r.merge(check_functor(n.G))
    r.merge(check_nat(n))
    return r


def _ck_group(doc, max_size):
    from .group import group_axioms

    return group_axioms(_table(doc), FinSet(doc["carrier"]))


def _ck_hom(doc, max_size):
    from .group import group_axioms

    r = LawReport("hom")
    src_doc, tgt_doc = _as_doc(doc["src"]), _as_doc(doc["tgt"])
    r.merge(group_axioms(_table(src_doc), FinSet(src_doc["carrier"])))
    r.merge(group_axioms(_table(tgt_doc), FinSet(tgt_doc["carrier"])))
    if not r.passed:
        return r
    h = _b_hom(doc)
    bad = next(
        (
            (a, b)
            for a in h.src.carrier
            for b in h.src.carrier
            if h.map(h.src.op[(a, b)]) != h.tgt.op[(h.map(a), h.map(b))]
        ),
        None,
    )
    r.add("hom-mult", "f(ab) equals f(a)f(b)", bad is None, bad)
    r.add("hom-unit", "f sends unit to unit", h.map(h.src.unit) == h.tgt.unit)
    return r


def _ck_action(doc, max_size):
    from .group import action_check, group_axioms

    r = LawReport("action")
    g_doc = _as_doc(doc["group"])
    r.merge(group_axioms(_table(g_doc), FinSet(g_doc["carrier"])))
    if not r.passed:
        return r
    r.merge(action_check(_b_action(doc)))
    return r


def _ck_family(doc, max_size):
    from .settools import is_sigma_algebra, sigma_generate

    fam = _b_family(doc)
    _guard(doc, len(fam.carrier), max_size or 4, "family")
    r = LawReport("family")
    sigma = sigma_generate(fam.carrier, fam, guard=max_size or 4)
    r.add("fam-sigma-extends", "the generated sigma-algebra contains the family",
          fam.members <= sigma.members)
    r.add("fam-sigma-fixed", "the generated sigma-algebra is a fixed point",
          is_sigma_algebra(sigma))
    return r


def _ck_filterbase(doc, max_size):
    from .settools import generate_filter, is_filter, is_filter_base

    fam = _b_family(doc)
    _guard(doc, len(fam.carrier), max_size or 5, "filterbase")
    r = LawReport("filterbase")
    base_ok = is_filter_base(fam)
    r.add("fb-base", "pairwise intersections swallow a member", base_ok)
    if base_ok:
        F = generate_filter(fam)
        r.add("fb-filter", "the generated family is a filter", is_filter(F))
        r.add("fb-extends", "the generated filter contains the base",
              fam.members <= F.members)
    return r


def _ck_closure(doc, max_size):
    from .top import closure_laws

    _guard(doc, len(doc["carrier"]), max_size or 4, "closure")
    return closure_laws(_b_closure(doc))


def _ck_topology(doc, max_size):
    from .settools import Family
    from .top import check_topology, neighborhood_laws

    _guard(doc, len(doc["carrier"]), max_size or 5, "topology")
    carrier = FinSet(doc["carrier"])
    fam = Family(carrier, [FinSet(m) for m in doc["opens"]])
    r = LawReport("topology")
    try:
        T = check_topology(carrier, fam)
    except StructaError as e:
        r.add("top-axioms", "opens contain endpoints, unions, intersections",
              False, e.witness or (str(e),))
        return r
    r.add("top-axioms", "opens contain endpoints, unions, intersections", True)
    r.merge(neighborhood_laws(T))
    return r


def _ck_base(doc, max_size):
    from .top import base_ops

    fam = _b_family(doc)
    _guard(doc, len(fam.carrier), max_size or 5, "base")
    r = LawReport("base")
    try:
        out = base_ops(fam.carrier, fam)
    except StructaError as e:
        r.add("bs-covering", "every point lies in a base member",
              False, e.witness or (str(e),))
        return r
    r.add("bs-covering", "every point lies in a base member", True)
    r.merge(out["criterion"])
    return r


def _ck_rational_window(doc, max_size):
    from .numbers import dual_order_checks, embedding_check, int_group_check

    window, den = doc["window"], doc["den"]
    _guard(doc, window, max_size or 40, "rational-window")
    _guard(doc, den, max_size or 6, "rational-window")
    r = LawReport("rational-window")
    r.merge(int_group_check(window))
    r.merge(dual_order_checks(den))
    r.merge(embedding_check(den))
    return r


_CHECKERS = {
    "set": _ck_set,
    "map": _ck_map,
    "poset": _ck_poset,
    "semilattice": _ck_semilattice,
    "category": _ck_category,
    "functor": _ck_functor,
    "nattrans": _ck_nattrans,
    "group": _ck_group,
    "hom": _ck_hom,
    "action": _ck_action,
    "family": _ck_family,
    "filterbase": _ck_filterbase,
    "closure": _ck_closure,
    "topology": _ck_topology,
    "base": _ck_base,
    "rational-window": _ck_rational_window,
}


# ---------------------------------------------------------------------------
# derive dispatch


def _d_quotient(doc, args):
    from .group import check_group, is_normal, quotient, subgroup_check

    if not args:
        raise SchemaError("quotient needs the subgroup elements as arguments")
    G = _b_group(doc)
    H = subgroup_check(G, FinSet(args))
    if not is_normal(G, H):
        from .errors import NotNormal

        raise NotNormal("the subgroup is not normal", witness=tuple(sorted(args)))
    return doc_group(quotient(G, H))


def _d_opposite(doc, args):
    from .category import opposite_cat

    return doc_category(opposite_cat(_b_category(doc)))


def _d_filter(doc, args):
    from .settools import generate_filter

    return doc_subsets("family", FinSet(doc["carrier"]),
                       generate_filter(_b_family(doc)).members)


def _d_topology(doc, args):
    from .top import base_ops

    fam = _b_family(doc)
    T = base_ops(fam.carrier, fam)["topology"]
    return doc_subsets("topology", T.carrier, T.opens.members)


def _d_closure(doc, args):
    from .top import closure_from_closed, open_duality

    T = _b_topology(doc)
    return doc_closure(closure_from_closed(T.carrier, open_duality(T)))


def _d_cayley(doc, args):
    from .group import cayley

    return doc_hom(cayley(_b_group(doc)))


DERIVE_OPS = {
    "quotient": ("group", _d_quotient),
    "opposite": ("category", _d_opposite),
    "filter": ("filterbase", _d_filter),
    "topology": ("base", _d_topology),
    "closure": ("topology", _d_closure),
    "cayley": ("group", _d_cayley),
}


def run_derive(doc: StructureDoc, op: str, args=()) -> StructureDoc:
    """A new document computed from an old one."""
    if op not in DERIVE_OPS:
        raise SchemaError(
            "unknown derive op %r; known: %s" % (op, sorted(DERIVE_OPS))
        )
    kind, fn = DERIVE_OPS[op]
    if doc.kind != kind:
        raise SchemaError(
            "derive op %r wants a %r document, got %r" % (op, kind, doc.kind)
        )
    return fn(doc, list(args))
