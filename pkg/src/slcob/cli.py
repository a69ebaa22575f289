"""Command-line interface.

Commands: msl {group,table}, cf {homology,dump}, op apply, witt table,
kq table, charnum hypersurface, verify, dump.  Output is deterministic
(fixed orderings, sorted JSON keys).  Exit codes: 0 success, 1 internal or
I/O failure, 2 usage, 3 verification failure.

Configuration: an optional key=value file (--config); command-line flags
win over file values.  Recognized keys: truncation, field, q, format.
"""

import argparse
import csv
import json
import os
import sys

from . import charnum, msl, mu
from .conner_floyd import ConnerFloyd
from .fgl import FGLContext
from .kq import KQPresentation
from .mu import MUBasis
from .operations import (apply_operation, boundary_partial, delta_op,
                         landweber_novikov)
from .partitions import partitions_of
from .verify import run_suite
from .witt import field_descriptor, witt_data

MAX_TRUNCATION = 16


def load_config(path):
    out = {}
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError("bad config line: %r" % line)
            key, _, value = line.partition("=")
            out[key.strip()] = value.strip()
    return out


def effective_settings(args):
    cfg = {}
    if getattr(args, "config", None):
        cfg = load_config(args.config)
    trunc = int(getattr(args, "truncation", None) or cfg.get("truncation", 12))
    if not (2 <= trunc <= MAX_TRUNCATION):
        raise ValueError("truncation must be between 2 and %d" % MAX_TRUNCATION)
    field = getattr(args, "field", None) or cfg.get("field")
    q = getattr(args, "q", None) or (int(cfg["q"]) if "q" in cfg else None)
    fmt = getattr(args, "format", None) or cfg.get("format", "text")
    return trunc, field, q, fmt


_FIXTURES = {}


def fixtures(truncation):
    if truncation not in _FIXTURES:
        ctx = FGLContext(truncation)
        basis = MUBasis(ctx)
        _FIXTURES[truncation] = (ctx, basis, ConnerFloyd(ctx, basis))
    return _FIXTURES[truncation]


def emit(data, fmt, csv_rows=None):
    if fmt == "json":
        print(json.dumps(data, sort_keys=True, indent=2))
    elif fmt == "csv" and csv_rows is not None:
        writer = csv.writer(sys.stdout)
        for row in csv_rows:
            writer.writerow(row)
    else:
        _emit_text(data)


def _emit_text(data, indent=0):
    pad = "  " * indent
    if isinstance(data, dict):
        for key in data:
            value = data[key]
            if isinstance(value, (dict, list)):
                print("%s%s:" % (pad, key))
                _emit_text(value, indent + 1)
            else:
                print("%s%s: %s" % (pad, key, value))
    elif isinstance(data, list):
        for value in data:
            _emit_text(value, indent)
    else:
        print("%s%s" % (pad, data))


# -- class labels -------------------------------------------------------------


def parse_class_label(label, ctx, basis):
    """Grammar: cpN | hI_J | hypN_D | products joined with '*' |
    xI monomials (basis generators)."""
    cls = mu.MUClass.unit()
    for token in label.split("*"):
        token = token.strip()
        if token.startswith("cp"):
            cls = cls * mu.cpn_class(ctx, int(token[2:]))
        elif token.startswith("hyp"):
            a, d = token[3:].split("_")
            cls = cls * charnum.hypersurface_class(int(a), int(d)).mu_class
        elif token.startswith("h"):
            i, j = token[1:].split("_")
            cls = cls * mu.milnor_hypersurface_class(ctx, int(i), int(j))
        elif token.startswith("x"):
            cls = cls * basis.generators[int(token[1:])]
        else:
            raise ValueError("unknown class label %r" % token)
    return cls


def class_report(cls, basis):
    coeffs = {"*".join("b%d" % i for i in p) or "1": c for p, c in cls.hb}
    out = {
        "degree": cls.degree,
        "hurewicz": coeffs,
    }
    if cls.degree >= 1 and not cls.is_zero():
        out["s_number"] = mu.s_number(cls)
    if not cls.is_zero():
        tangent = mu.hurewicz_to_chern_numbers(cls)
        out["tangent_chern_numbers"] = {
            "+".join(map(str, k)) if k else "()": v for k, v in tangent.items()}
    return out


# -- commands ------------------------------------------------------------------


def cmd_msl(args):
    trunc, field, q, fmt = effective_settings(args)
    if not field:
        raise ValueError("msl requires --field")
    fd = field_descriptor(field, q)
    if args.msl_cmd == "group":
        n = args.n
        if n < 0 or n > trunc - 1:
            raise ValueError("degree out of range 0..%d" % (trunc - 1))
        if args.m:
            group = msl.msl_off_diagonal(fd, n, args.m)
            data = {"n": n, "m": args.m, "group": group.to_json()}
        else:
            data = msl.msl_diagonal(fd, n).to_json()
        emit(data, fmt)
    else:  # table
        rows = msl.intro_table_rows(fd)
        data = [{"n": r["n"], "symbolic": r["symbolic"],
                 "group": r["group"].to_json(), "normal_form": str(r["group"])}
                for r in rows]
        csv_rows = [["n", "symbolic", "normal_form"]] + [
            [r["n"], r["symbolic"], r["normal_form"]] for r in data]
        emit(data, fmt, csv_rows)
    return 0


def cmd_cf(args):
    trunc, _, _, fmt = effective_settings(args)
    ctx, basis, cf = fixtures(trunc)
    max_n = args.max_degree if args.max_degree is not None else trunc - 1
    if max_n > trunc - 1:
        raise ValueError("homology needs degree + 1 within the truncation")
    if args.cf_cmd == "homology":
        rows = []
        for n in range(0, max_n + 1):
            rows.append({
                "n": n,
                "rank_Z": cf.cycles_in_lattice(n).cols,
                "rank_B": cf.boundaries_in_lattice(n).cols,
                "H": cf.homology(n).to_json(),
                "H_normal_form": str(cf.homology(n)),
            })
        csv_rows = [["n", "rank_Z", "rank_B", "H"]] + [
            [r["n"], r["rank_Z"], r["rank_B"], r["H_normal_form"]] for r in rows]
        emit(rows, fmt, csv_rows)
    else:  # dump
        return dump_cf(args.out, cf, max_n)
    return 0


def dump_cf(outdir, cf, max_n):
    os.makedirs(outdir, exist_ok=True)
    for n in range(1, max_n + 1):
        path = os.path.join(outdir, "delta_matrix_%d.csv" % n)
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            for row in cf.delta_matrix(n).entries:
                writer.writerow(row)
    path = os.path.join(outdir, "homology.csv")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["n", "rank_Z", "rank_B", "H"])
        for n in range(0, max_n):
            writer.writerow([n, cf.cycles_in_lattice(n).cols,
                             cf.boundaries_in_lattice(n).cols,
                             str(cf.homology(n))])
    return 0


def cmd_op(args):
    trunc, _, _, fmt = effective_settings(args)
    ctx, basis, _ = fixtures(trunc)
    name = args.name
    if name == "partial":
        op = boundary_partial(ctx)
    elif name == "delta":
        op = delta_op(ctx)
    elif name.startswith("s"):
        omega = tuple(int(x) for x in name[1:].split(",") if x)
        op = landweber_novikov(omega)
    else:
        raise ValueError("unknown operation %r" % name)
    cls = parse_class_label(args.cls, ctx, basis)
    result = apply_operation(ctx, op, cls)
    data = {
        "operation": name,
        "input": class_report(cls, basis),
        "result": class_report(result, basis),
    }
    emit(data, fmt)
    return 0


def cmd_witt(args):
    _, field, q, fmt = effective_settings(args)
    fd = field_descriptor(field or "c", q)
    wr = witt_data(fd)
    data = {
        "field": fd.kind,
        "GW": wr.gw.to_json(),
        "W": wr.w.to_json(),
        "ideal_powers": {str(m): wr.fundamental_ideal_power(m).to_json()
                         for m in range(0, 4)},
        "two_primary_torsion_of_I": wr.two_primary_torsion_of_ideal(1).to_json(),
    }
    emit(data, fmt)
    return 0


def cmd_kq(args):
    _, field, q, fmt = effective_settings(args)
    fd = field_descriptor(field or "c", q)
    pres = KQPresentation(fd)
    rows = [{"n": n, "group": str(pres.kq_diagonal(n)),
             "witt_theory": str(pres.kw_diagonal(n))}
            for n in range(0, args.max_degree + 1)]
    csv_rows = [["n", "group", "witt_theory"]] + [
        [r["n"], r["group"], r["witt_theory"]] for r in rows]
    emit(rows, fmt, csv_rows)
    return 0


def cmd_charnum(args):
    trunc, _, _, fmt = effective_settings(args)
    v = charnum.hypersurface_class(args.ambient, args.degree)
    if v.dimension > trunc:
        raise ValueError("dimension exceeds truncation")
    data = v.to_json()
    if v.dimension >= 2:
        _, _, cf = fixtures(trunc)
        try:
            data["generator_verdict"] = charnum.generator_check_msu(v.mu_class, cf)
        except charnum.NotACycle:
            data["generator_verdict"] = "not in the cycle lattice"
    data["note"] = ("calabi_yau_symbolic certifies only the vanishing of the "
                    "degree-1 tangent class in the ambient model")
    emit(data, fmt)
    return 0


def cmd_verify(args):
    trunc, field, q, _ = effective_settings(args)
    checks = run_suite(args.suite, kind=field, q=q, max_degree=args.max_degree or trunc)
    failures = 0
    for name, ok, detail in checks:
        line = "%s %s" % ("PASS" if ok else "FAIL", name)
        if detail and not ok:
            line += " [%s]" % detail
        print(line)
        failures += 0 if ok else 1
    print("%d checks, %d failures" % (len(checks), failures))
    return 0 if failures == 0 else 3


def cmd_dump(args):
    trunc, _, _, _ = effective_settings(args)
    ctx, basis, cf = fixtures(trunc)
    outdir = args.out
    os.makedirs(outdir, exist_ok=True)
    # basis and tangent-number tables
    with open(os.path.join(outdir, "mu_basis.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["degree", "partition", "hurewicz"])
        for n in range(0, trunc + 1):
            for omega, cls in basis.basis(n):
                writer.writerow([n, "+".join(map(str, omega)) or "()", str(cls)])
    with open(os.path.join(outdir, "chern_numbers.csv"), "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["degree", "basis_partition", "number_partition", "value"])
        for n in range(1, trunc + 1):
            for omega, cls in basis.basis(n):
                tangent = mu.hurewicz_to_chern_numbers(cls)
                for p in partitions_of(n):
                    writer.writerow([n, "+".join(map(str, omega)),
                                     "+".join(map(str, p)), tangent.get(p, 0)])
    dump_cf(outdir, cf, trunc - 1)
    for kind in ("c", "r", "fq1", "fq3"):
        fd = field_descriptor(kind)
        wr = witt_data(fd)
        with open(os.path.join(outdir, "witt_%s.json" % kind), "w") as fh:
            json.dump({"GW": wr.gw.to_json(), "W": wr.w.to_json(),
                       "I": wr.fundamental_ideal_power(1).to_json()},
                      fh, sort_keys=True, indent=2)
    print("wrote tables to %s" % outdir)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="slcob",
        description="Exact computation of the geometric diagonal of special "
                    "linear cobordism.")
    parser.add_argument("--config", help="key=value configuration file")
    parser.add_argument("--truncation", type=int, help="weight bound (2..16)")
    parser.add_argument("--format", choices=["text", "json", "csv"])
    sub = parser.add_subparsers(dest="command", required=True)

    p_msl = sub.add_parser("msl", help="diagonal and off-diagonal groups")
    msl_sub = p_msl.add_subparsers(dest="msl_cmd", required=True)
    p_group = msl_sub.add_parser("group")
    p_group.add_argument("--field", required=True)
    p_group.add_argument("--q", type=int)
    p_group.add_argument("--n", type=int, required=True)
    p_group.add_argument("--m", type=int, default=0)
    p_group.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_group.set_defaults(func=cmd_msl)
    p_table = msl_sub.add_parser("table")
    p_table.add_argument("--field", required=True)
    p_table.add_argument("--q", type=int)
    p_table.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_table.set_defaults(func=cmd_msl)

    p_cf = sub.add_parser("cf", help="Conner-Floyd complex")
    cf_sub = p_cf.add_subparsers(dest="cf_cmd", required=True)
    p_hom = cf_sub.add_parser("homology")
    p_hom.add_argument("--max-degree", type=int)
    p_hom.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_hom.set_defaults(func=cmd_cf)
    p_cfd = cf_sub.add_parser("dump")
    p_cfd.add_argument("--max-degree", type=int)
    p_cfd.add_argument("--out", required=True)
    p_cfd.set_defaults(func=cmd_cf)

    p_op = sub.add_parser("op", help="apply a cohomological operation")
    op_sub = p_op.add_subparsers(dest="op_cmd", required=True)
    p_apply = op_sub.add_parser("apply")
    p_apply.add_argument("--name", required=True,
                         help="partial | delta | s<i[,j,...]>")
    p_apply.add_argument("--class", dest="cls", required=True)
    p_apply.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_apply.set_defaults(func=cmd_op)

    p_witt = sub.add_parser("witt", help="Witt ring tables")
    witt_sub = p_witt.add_subparsers(dest="witt_cmd", required=True)
    p_wt = witt_sub.add_parser("table")
    p_wt.add_argument("--field", required=True)
    p_wt.add_argument("--q", type=int)
    p_wt.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_wt.set_defaults(func=cmd_witt)

    p_kq = sub.add_parser("kq", help="Hermitian K-theory diagonal")
    kq_sub = p_kq.add_subparsers(dest="kq_cmd", required=True)
    p_kt = kq_sub.add_parser("table")
    p_kt.add_argument("--field", required=True)
    p_kt.add_argument("--q", type=int)
    p_kt.add_argument("--max-degree", type=int, default=16)
    p_kt.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_kt.set_defaults(func=cmd_kq)

    p_cn = sub.add_parser("charnum", help="characteristic numbers")
    cn_sub = p_cn.add_subparsers(dest="cn_cmd", required=True)
    p_hy = cn_sub.add_parser("hypersurface")
    p_hy.add_argument("--ambient", type=int, required=True)
    p_hy.add_argument("--degree", type=int, required=True)
    p_hy.add_argument("--json", dest="format", action="store_const", const="json",
                         default=argparse.SUPPRESS)
    p_hy.set_defaults(func=cmd_charnum)

    p_ver = sub.add_parser("verify", help="verification suites")
    p_ver.add_argument("--suite", default="all",
                       choices=["leibniz", "cf-pattern", "subring", "table",
                                "kq", "witt-oracle", "all"])
    p_ver.add_argument("--field")
    p_ver.add_argument("--q", type=int)
    p_ver.add_argument("--max-degree", type=int)
    p_ver.set_defaults(func=cmd_verify)

    p_dump = sub.add_parser("dump", help="write all tables to a directory")
    p_dump.add_argument("--out", required=True)
    p_dump.set_defaults(func=cmd_dump)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, AssertionError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2 if isinstance(exc, (ValueError, KeyError)) else 1
    except OSError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
