"""The ``structa`` command line.

Commands: ``check`` runs a document's law suite, ``derive`` computes a
new document from an old one, ``suite`` runs a named acceptance bundle,
and ``formats`` prints the document schema and the law catalogue.

Exit codes: 0 when every check passes, 1 on a failed law, 2 on usage,
syntax, or schema errors. Output is deterministic: byte-identical across
runs and across ``--jobs`` settings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor

from .errors import ParseError, SchemaError, StructaError, TooLarge
from .report import LawReport

FORMAT_SPEC = """\
structa document format
=======================

A document is one JSON object (UTF-8) with a "kind" key and a fixed,
kind-specific key set. Building blocks:

  symbols   non-empty strings
  set       array of distinct symbols, e.g. ["a", "b"]
  subset    array of distinct symbols drawn from a declared carrier
  pairs     array of [key, value] symbol pairs; total over its key set
  table     array of [left, right, value] symbol triples; total over
            left x right (a missing cell is a schema error naming it)
  nested    a complete sub-document (object with its own "kind")

Kinds and their keys:

  set              elements: set
  map              dom: set; cod: set; map: pairs dom -> cod
  poset            carrier: set; le: array of [x, y] relation pairs
  semilattice      carrier: set; table: total operation table
  category         objects: set; arrows: array of [name, src, tgt];
                   identity: pairs object -> arrow; comp: array of
                   [g, f, g_after_f] (defined cells only)
  functor          src: nested category; tgt: nested category;
                   on_obj: pairs; on_arr: pairs
  nattrans         f: nested functor; g: nested functor (parallel);
                   component: pairs object -> target arrow
  group            carrier: set; table: total operation table
  hom              src: nested group; tgt: nested group; map: pairs
  action           group: nested group; carrier: set;
                   act: total table group-element x point -> point
  family           carrier: set; members: array of subsets
  filterbase       carrier: set; members: array of subsets
  closure          carrier: set; table: array of [subset, subset]
                   pairs, total over the power set
  topology         carrier: set; opens: array of subsets
  base             carrier: set; members: array of subsets
  rational-window  window: positive integer; den: positive integer

Canonical form: keys sorted, two-space indent, element lists and table
rows sorted, one trailing newline. parse canonicalizes, so a rendered
document round-trips byte-identically.

Derive operations (structa derive <op> <file> [args]):

  quotient   group + normal subgroup elements -> group
  opposite   category -> category
  filter     filterbase -> family (the generated filter)
  topology   base -> topology
  closure    topology -> closure (via the closed sets)
  cayley     group -> hom (the regular-representation embedding)
"""


def _law_catalogue():
    """Every law id with its statement, collected from representative
    reports of each module."""
    from .core import FinMap, FinSet, finset, image_calculus, fiber_union_check
    from .category import (
        check_category,
        check_contravariant,
        check_functor,
        check_nat,
        check_set_functor,
        constant_functor,
        from_poset,
        hom_functors,
        identity_functor,
        identity_nat,
        interchange_check,
        op_universe_check,
        yoneda_embedding,
    )
    from .group import (
        abelianization_check,
        action_check,
        cyclic_group,
        group_axioms,
        regular_action,
        stabilizer_suite,
        transfer_check,
        zp_field,
        linear_space_check,
        cyclic_subgroup,
        hom_check,
    )
    from .numbers import dual_order_checks, embedding_check, int_group_check
    from .order import (
        chain_poset,
        check_order,
        galois_check,
        lattice_from_poset,
        lattice_laws,
        completeness_laws,
        semilattice_report,
    )
    from .settools import (
        Family,
        family_image_laws,
        nest_identities,
        power_functor_check,
        refinement_laws,
        set_law_suite,
        ultrafilter_suite,
    )
    from .top import (
        base_ops,
        check_topology,
        closure_check,
        discrete_closure,
        neighborhood_laws,
    )
    from .docs import parse_text, run_check

    ab = finset("a", "b")
    f = FinMap(ab, ab, {"a": "b", "b": "a"})
    P2 = chain_poset(["a", "b"])
    C2 = from_poset(P2)
    Z2 = cyclic_group(2)
    lt = lattice_from_poset(P2)
    reports = [
        image_calculus(f, ab, ab, families=([ab], [finset("a")])),
        fiber_union_check(f, ab, ab),
        check_order(ab, P2.pairs),
        semilattice_report(lt.join, ab),
        lattice_laws(lt),
        completeness_laws(P2),
        galois_check(FinMap.identity(ab), FinMap.identity(ab), P2, P2),
        check_category(C2),
        check_functor(identity_functor(C2)),
        check_contravariant(constant_functor(C2, C2, "a")),
        check_nat(identity_nat(identity_functor(C2))),
        check_set_functor(hom_functors(C2, "a")[0]),
        op_universe_check([C2]),
        yoneda_embedding(C2),
        interchange_check(
            identity_nat(identity_functor(C2)),
            identity_nat(identity_functor(C2)),
            identity_nat(identity_functor(C2)),
            identity_nat(identity_functor(C2)),
        ),
        group_axioms(Z2.op, Z2.carrier),
        transfer_check(hom_check(Z2, Z2, FinMap.identity(Z2.carrier)), finset("g0")),
        abelianization_check(Z2, cyclic_subgroup(Z2, "g0")),
        action_check(regular_action(Z2)),
        stabilizer_suite(regular_action(Z2), "g0"),
        linear_space_check(
            zp_field(2),
            Z2,
            {
                "k0": FinMap.constant(Z2.carrier, Z2.carrier, "g0"),
                "k1": FinMap.identity(Z2.carrier),
            },
        ),
        int_group_check(4),
        dual_order_checks(2),
        embedding_check(2),
        power_functor_check(f, f),
        family_image_laws(f, Family(ab, [finset("a")]), Family(ab, [finset("b")])),
        set_law_suite(ab, ab, ab, Family(ab, [finset("a")])),
        nest_identities([finset("a"), ab], ab),
        refinement_laws(ab),
        ultrafilter_suite(ab),
        closure_check(discrete_closure(ab)),
        neighborhood_laws(check_topology(ab, Family(ab, [finset(), finset("a"), ab]))),
        base_ops(ab, Family(ab, [finset("a"), finset("b")]))["criterion"],
        run_check(parse_text('{"kind": "set", "elements": ["a"]}')),
        run_check(
            parse_text(
                '{"kind": "hom", "src": %s, "tgt": %s, "map": [["g0", "g0"], ["g1", "g1"]]}'
                % (_group_json(Z2), _group_json(Z2))
            )
        ),
    ]
    seen = {}
    for rep in reports:
        for c in rep.checks:
            seen.setdefault(c.law, c.statement)
    return dict(sorted(seen.items()))


def _group_json(G):
    return json.dumps(
        {
            "kind": "group",
            "carrier": list(G.carrier.elements),
            "table": [[a, b, v] for (a, b), v in sorted(G.op.items())],
        }
    )


def _build_parser():
    p = argparse.ArgumentParser(
        prog="structa",
        description="exact finite structures with machine-checked laws",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="emit JSON reports")
        sp.add_argument(
            "--max-size", type=int, default=None, metavar="N",
            help="override enumeration guards",
        )
        sp.add_argument(
            "--seed", type=int, default=None, metavar="N",
            help="seed for randomized checks (env: STRUCTA_SEED)",
        )
        sp.add_argument(
            "--jobs", type=int, default=1, metavar="N",
            help="run independent checks on N workers",
        )

    ck = sub.add_parser("check", help="run a document's law suite")
    ck.add_argument("files", nargs="+", metavar="FILE")
    common(ck)

    dv = sub.add_parser("derive", help="compute a new document")
    dv.add_argument("op", metavar="OP")
    dv.add_argument("file", metavar="FILE")
    dv.add_argument("args", nargs="*", metavar="ARG")
    dv.add_argument("-o", "--output", default=None, metavar="OUT")
    common(dv)

    st = sub.add_parser("suite", help="run a named acceptance bundle")
    st.add_argument("name", metavar="NAME")
    common(st)

    fm = sub.add_parser("formats", help="print the document schema")
    common(fm)
    return p


def _seed_from(ns) -> int:
    if ns.seed is not None:
        return ns.seed
    env = os.environ.get("STRUCTA_SEED")
    return int(env) if env else 0


def _emit_report(name: str, report: LawReport, as_json: bool, out):
    if as_json:
        out.write(json.dumps({"target": name, **report.to_json()},
                             sort_keys=True, indent=2) + "\n")
    else:
        out.write("== %s\n%s\n" % (name, report.render_text()))


def _cmd_check(ns, out) -> int:
    from .docs import parse, run_check

    def one(path):
        return run_check(parse(path), max_size=ns.max_size)

    if ns.jobs > 1:
        with ThreadPoolExecutor(max_workers=ns.jobs) as pool:
            reports = list(pool.map(one, ns.files))
    else:
        reports = [one(p) for p in ns.files]
    for path, rep in zip(ns.files, reports):
        _emit_report(path, rep, ns.json, out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_derive(ns, out) -> int:
    from .docs import parse, render, run_derive

    doc = run_derive(parse(ns.file), ns.op, ns.args)
    text = render(doc)
    if ns.output:
        with open(ns.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    return 0


def _cmd_suite(ns, out) -> int:
    from .suites import run_suite

    rep = run_suite(
        ns.name, seed=_seed_from(ns), max_size=ns.max_size, jobs=ns.jobs
    )
    _emit_report(ns.name, rep, ns.json, out)
    return 0 if rep.passed else 1


def _cmd_formats(ns, out) -> int:
    catalogue = _law_catalogue()
    if ns.json:
        out.write(json.dumps({"schema": FORMAT_SPEC, "laws": catalogue},
                             sort_keys=True, indent=2) + "\n")
        return 0
    out.write(FORMAT_SPEC)
    out.write("\nLaw catalogue (law id: statement)\n")
    out.write("=================================\n\n")
    width = max(len(law) for law in catalogue)
    for law, statement in catalogue.items():
        out.write("  %-*s  %s\n" % (width, law, statement))
    return 0


_COMMANDS = {
    "check": _cmd_check,
    "derive": _cmd_derive,
    "suite": _cmd_suite,
    "formats": _cmd_formats,
}


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return _COMMANDS[ns.command](ns, sys.stdout)
    except ParseError as e:
        where = ""
        if e.line is not None:
            where = " (line %s, column %s)" % (e.line, e.column)
        print("parse error: %s%s" % (e, where), file=sys.stderr)
        return 2
    except (SchemaError, TooLarge) as e:
        print("error: %s" % e, file=sys.stderr)
        return 2
    except StructaError as e:
        print("failed: %s" % e, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
