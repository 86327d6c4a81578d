"""Command-line interface.

Exit codes: 0 for success or a positive verdict, 1 for a well-formed negative
verdict or structured absence (no morphism, no extension), 2 for parse or
validation errors and violated preconditions.
"""

import argparse
import json
import sys as _sys

from .analysis import analyze
from .biadd import (
    derive_multiplication_indexed,
    derive_multiplication_single,
    is_free_report,
)
from .closure import monoid_closure
from .core import adjoin_omega, minimal_core, product
from .derive import derive_addition
from .dsl import emit_system, parse_odot, parse_system
from .errors import CountingSystemError, ParseError
from .morphisms import (
    FreeElement,
    free_eval,
    initiality_report,
    morphism_find,
    relabel_index_set,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _load(path, auto_core=False):
    with open(path, encoding="utf-8") as fh:
        doc = parse_system(fh.read())
    if auto_core:
        doc.system = minimal_core(doc.system)
    return doc


def _tsv_table(labels, table, out):
    print("\t" + "\t".join(labels), file=out)
    for i, row in enumerate(table):
        print(labels[i] + "\t" + "\t".join(labels[j] for j in row), file=out)


def _report_lines(pairs, out):
    for key, value in pairs:
        print(f"{key}: {value}", file=out)


def _cmd_validate(args, out, err):
    doc = _load(args.file, args.auto_core)
    print(f"ok: {doc.name} ({doc.system.size} elements, "
          f"{len(doc.system.index_set)} maps)", file=out)
    return EXIT_OK


def _cmd_analyze(args, out, err):
    doc = _load(args.file, args.auto_core)
    rep = analyze(doc.system)
    if args.json:
        payload = {
            "name": doc.name,
            "minimal": rep.minimal,
            "core_size": rep.core_size,
            "dedekind": rep.dedekind,
            "initial": rep.initial,
            "maps": {
                lab: {
                    "injective": fl.injective,
                    "surjective": fl.surjective,
                    "bijective": fl.bijective,
                }
                for lab, fl in rep.map_flags.items()
            },
        }
        if rep.initial_diagnostics is not None:
            payload["initial_conditions"] = [
                {
                    "label": c.label,
                    "morphism_to_padded": c.morphism_to_padded,
                    "core_size": c.core_size,
                    "core_dedekind": c.core_dedekind,
                }
                for c in rep.initial_diagnostics.conditions
            ]
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return EXIT_OK
    pairs = [
        ("name", doc.name),
        ("minimal", rep.minimal),
        ("core_size", rep.core_size),
    ]
    if rep.dedekind is not None:
        pairs.append(("dedekind", rep.dedekind))
    pairs.append(("initial", rep.initial))
    for lab, fl in rep.map_flags.items():
        pairs.append(
            (f"map {lab}",
             f"injective={fl.injective} surjective={fl.surjective} "
             f"bijective={fl.bijective}")
        )
    _report_lines(pairs, out)
    return EXIT_OK


def _cmd_core(args, out, err):
    doc = _load(args.file)
    core = minimal_core(doc.system)
    out.write(emit_system(core, name=doc.name + "_core"))
    return EXIT_OK


def _cmd_closure(args, out, err):
    doc = _load(args.file, args.auto_core)
    tm = monoid_closure(doc.system)
    if args.json:
        payload = {
            "size": tm.size,
            "generators": tm.gen_index,
            "words": [list(w) for w in tm.words],
        }
        if args.full:
            payload["comp"] = [list(row) for row in tm.comp]
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return EXIT_OK
    _report_lines([("size", tm.size)], out)
    for lab, idx in tm.gen_index.items():
        print(f"generator {lab}: {idx}", file=out)
    if args.full:
        labels = [str(i) for i in range(tm.size)]
        _tsv_table(labels, tm.comp, out)
    return EXIT_OK


def _cmd_add(args, out, err):
    doc = _load(args.file, args.auto_core)
    t = derive_addition(doc.system)
    _tsv_table(doc.system.carrier.labels, t.op, out)
    return EXIT_OK


def _cmd_mul(args, out, err):
    doc = _load(args.file, args.auto_core)
    sys_ = doc.system
    t = derive_addition(sys_)
    if args.odot:
        with open(args.odot, encoding="utf-8") as fh:
            odot = parse_odot(fh.read(), index_set=sys_.index_set)
        res = derive_multiplication_indexed(sys_, t, odot)
        if not res.ok:
            msg = "no multiplication: required endomorphism missing " \
                  f"at label {res.failing_label!r}"
            if res.conflict is not None:
                msg += f" ({res.conflict.describe()})"
            print(msg, file=err)
            return EXIT_NEGATIVE
        mult = res.table
    else:
        if len(sys_.index_set) != 1:
            print("error: multi-map system needs --odot", file=err)
            return EXIT_ERROR
        mult = derive_multiplication_single(sys_, t)
    _tsv_table(sys_.carrier.labels, mult.op, out)
    return EXIT_OK


def _cmd_morphism(args, out, err):
    src_doc = _load(args.src, args.auto_core)
    dst_doc = _load(args.dst)
    src = src_doc.system
    if args.relabel:
        mapping = dict(
            pair.split("=", 1) for pair in args.relabel.split(",")
        )
        src = relabel_index_set(src, mapping)
    m = morphism_find(src, dst_doc.system)
    if m is None:
        print("no morphism: image propagation conflicts", file=err)
        return EXIT_NEGATIVE
    src_labels = src.carrier.labels
    dst_labels = dst_doc.system.carrier.labels
    for i, j in enumerate(m.map):
        print(f"{src_labels[i]}\t{dst_labels[j]}", file=out)
    return EXIT_OK


def _cmd_product(args, out, err):
    a = _load(args.a)
    b = _load(args.b)
    sys_ = product(a.system, b.system)
    out.write(emit_system(sys_, name=f"{a.name}_x_{b.name}"))
    return EXIT_OK


def _cmd_omega(args, out, err):
    doc = _load(args.file)
    out.write(emit_system(adjoin_omega(doc.system), name=doc.name + "_omega"))
    return EXIT_OK


def _cmd_free_eval(args, out, err):
    doc = _load(args.file, args.auto_core)
    counts = {}
    if args.multiset.strip():
        for part in args.multiset.split(","):
            lab, _, num = part.partition(":")
            counts[lab.strip()] = counts.get(lab.strip(), 0) + int(num)
    e = FreeElement.of(counts)
    idx = free_eval(doc.system, e)
    print(doc.system.carrier.labels[idx], file=out)
    return EXIT_OK


def _cmd_initial(args, out, err):
    doc = _load(args.file, args.auto_core)
    rep = initiality_report(doc.system)
    if args.json:
        payload = {
            "initial": rep.initial,
            "conditions": [
                {
                    "label": c.label,
                    "morphism_to_padded": c.morphism_to_padded,
                    "core_size": c.core_size,
                    "core_injective": c.core_injective,
                    "base_in_core_image": c.base_in_core_image,
                    "core_dedekind": c.core_dedekind,
                }
                for c in rep.conditions
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return EXIT_OK
    _report_lines([("initial", rep.initial)], out)
    for c in rep.conditions:
        print(
            f"label {c.label}: morphism_to_padded={c.morphism_to_padded} "
            f"core_size={c.core_size} core_dedekind={c.core_dedekind} "
            f"core_injective={c.core_injective} "
            f"base_in_core_image={c.base_in_core_image}",
            file=out,
        )
    return EXIT_OK


def _cmd_free_report(args, out, err):
    doc = _load(args.file, args.auto_core)
    sys_ = doc.system
    t = derive_addition(sys_)
    gens = tuple(f(sys_.base) for f in sys_.maps)
    rep = is_free_report(t, gens)
    if args.json:
        payload = {
            "free": rep.free,
            "direct_sum": rep.direct_sum.ok,
            "cyclic": [
                {
                    "label": sys_.index_set[c.label_index],
                    "generator": c.generator,
                    "submonoid_size": len(c.submonoid),
                    "free": c.free,
                    "injective": c.injective,
                    "zero_in_image": c.zero_in_image,
                }
                for c in rep.cyclic
            ],
        }
        print(json.dumps(payload, indent=2, sort_keys=True), file=out)
        return EXIT_OK
    _report_lines(
        [("free", rep.free), ("direct_sum", rep.direct_sum.ok)], out
    )
    for c in rep.cyclic:
        lab = sys_.index_set[c.label_index]
        print(
            f"label {lab}: free={c.free} submonoid_size={len(c.submonoid)} "
            f"injective={c.injective} zero_in_image={c.zero_in_image}",
            file=out,
        )
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="countsys",
        description="derive and verify the algebra of finite counting systems",
    )
    p.add_argument(
        "--auto-core",
        action="store_true",
        help="replace a non-minimal input by its minimal core",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, **files):
        sp = sub.add_parser(name)
        for arg in files.get("files", ["file"]):
            sp.add_argument(arg)
        sp.set_defaults(fn=fn)
        return sp

    add("validate", _cmd_validate)
    sp = add("analyze", _cmd_analyze)
    sp.add_argument("--json", action="store_true")
    add("core", _cmd_core)
    sp = add("closure", _cmd_closure)
    sp.add_argument("--full", action="store_true")
    sp.add_argument("--json", action="store_true")
    add("add", _cmd_add)
    sp = add("mul", _cmd_mul)
    sp.add_argument("--odot")
    sp = add("morphism", _cmd_morphism, files=["src", "dst"])
    sp.add_argument("--relabel", help="old=new[,old=new...] for SRC labels")
    add("product", _cmd_product, files=["a", "b"])
    add("omega", _cmd_omega)
    sp = add("free-eval", _cmd_free_eval)
    sp.add_argument("--multiset", required=True, help='e.g. "s:3,t:1"')
    sp = add("initial", _cmd_initial)
    sp.add_argument("--json", action="store_true")
    sp = add("free-report", _cmd_free_report)
    sp.add_argument("--json", action="store_true")
    return p


def run_cli(argv, out=None, err=None):
    out = out if out is not None else _sys.stdout
    err = err if err is not None else _sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.fn(args, out, err)
    except ParseError as exc:
        print(f"parse error: {exc}", file=err)
        return EXIT_ERROR
    except CountingSystemError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR


def main():
    raise SystemExit(run_cli(_sys.argv[1:]))


if __name__ == "__main__":
    main()
