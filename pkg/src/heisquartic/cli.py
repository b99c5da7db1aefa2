"""Command-line entry point: `heisquartic <subcommand> [options]`.

Every subcommand prints a JSON report (inputs, outputs, checks) on stdout.
`--json PATH` writes the same report to a file and `--csv PATH` writes the
subcommand's matrix, when it has one. Exit status: 0 when all checks pass,
1 when a check fails, 2 on bad usage.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import acceptance, conicconfig, family, heisgroup, kleinlines, kummer, lattice
from .exactalg.field import FieldElement
from .exactalg.poly import MPoly, xyzw


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    subcommand: str
    inputs: dict = field(default_factory=dict)
    outputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    wall_time: float = 0.0
    timings: dict = field(default_factory=dict)  # per-step seconds, dropped with --no-timing
    matrix: tuple = None  # (rows, labels) for --csv

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def to_dict(self, timing=True):
        d = {
            "subcommand": self.subcommand,
            "inputs": jsonable(self.inputs),
            "outputs": jsonable(self.outputs),
            "checks": [jsonable(c.to_dict()) for c in self.checks],
            "pass": self.passed,
        }
        if timing:
            d["wall_time_s"] = round(self.wall_time, 3)
            if self.timings:
                d["timings_s"] = {k: round(v, 3) for k, v in self.timings.items()}
        return d


def jsonable(obj):
    """Exact JSON: rationals as "num/den", field elements as tower plus coordinates."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return f"{obj.numerator}/{obj.denominator}"
    if isinstance(obj, FieldElement):
        return obj.to_json()
    if isinstance(obj, MPoly):
        return {"nvars": obj.nvars, "terms": obj.to_json()}
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, float):
        return obj
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def matrix_csv(matrix, labels):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([""] + list(labels))
    for lab, row in zip(labels, matrix):
        w.writerow([lab] + [jsonable(v) for v in row])
    return buf.getvalue()


def read_matrix_csv(path):
    """Integer matrix from CSV; a label header row and label column are detected and skipped."""
    with open(path, newline="") as fh:
        rows = [r for r in csv.reader(fh) if r]
    if not rows:
        raise UsageError(f"{path} is empty")

    def is_int(s):
        try:
            int(s)
            return True
        except ValueError:
            return False

    if not all(is_int(c) for c in rows[0][1:]) or rows[0][0] == "":
        rows = rows[1:]
    if rows and not is_int(rows[0][0]):
        rows = [r[1:] for r in rows]
    try:
        return [[int(c) for c in r] for r in rows]
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from None


def parse_vector(text, n=None, what="vector"):
    try:
        v = tuple(Fraction(c.strip()) for c in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse {what} {text!r}") from None
    if n is not None and len(v) != n:
        raise UsageError(f"{what} needs {n} comma-separated entries, got {len(v)}")
    return v


def _label(g):
    return heisgroup.label_name(g)


# -- subcommands

def cmd_group(args, rep):
    mats, center, labs = heisgroup.enumerate_group()
    rep.outputs = {
        "order": len(mats),
        "center": center,
        "labels": [_label(g) for g in labs],
        "symplectic_gram": heisgroup.symplectic_gram(),
    }
    rep.checks = acceptance.group_structure()


def cmd_fixlines(args, rep):
    rep.outputs = {
        "fix_lines": [
            {"owner": _label(L.owner), "eigenvalue": L.eigenvalue, "span": L.span}
            for L in heisgroup.all_fix_lines()
        ]
    }
    rep.checks = acceptance.fix_lines()


def cmd_planes(args, rep):
    iso, aniso = heisgroup.classify_planes()
    rep.outputs = {
        "isotropic": [[_label(g) for g in p.nonzero()] for p in iso],
        "anisotropic": [[_label(g) for g in p.nonzero()] for p in aniso],
        "orthogonal_pairs": [
            [[_label(g) for g in p.nonzero()], [_label(g) for g in q.nonzero()]]
            for p, q in heisgroup.orthogonal_pairs()
        ],
    }
    if args.members:
        rep.outputs["tetrahedron_parameters"] = [family.tetrahedron_parameter(p) for p in iso]
        rep.outputs["quadric_parameters"] = [family.quadric_parameter(pair) for pair in heisgroup.orthogonal_pairs()]
        rep.checks = acceptance.tetrahedra_quadrics()
    else:
        rep.checks = [acceptance.check("isotropic / anisotropic planes", (15, 20), (len(iso), len(aniso)))]


def _parameter(args):
    if args.u and args.abcde:
        raise UsageError("give either --u or --abcde, not both")
    if args.abcde:
        lam = parse_vector(args.abcde, 5, "--abcde")
        return family.abcde_to_u(lam)
    if args.u:
        u = parse_vector(args.u, 6, "--u")
        try:
            family._check_u(u)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return u
    return None


def cmd_discriminant(args, rep):
    u = _parameter(args)
    if u is None:
        raise UsageError("discriminant needs --u or --abcde")
    rep.inputs = {"u": u}
    d = family.singular_discriminant(u)
    rep.outputs = {
        "discriminant": d,
        "singular": d == 0,
        "segre_value": family.segre_value(u),
        "abcde": family.u_to_abcde(u),
    }


def cmd_loci(args, rep):
    rep.outputs = {"segre_nodes": family.segre_nodes(), "t_points": family.t_points()}
    u = _parameter(args)
    if u is not None:
        rep.inputs = {"u": u}
        rep.outputs["membership"] = {
            "segre_cubic": family.segre_membership(u),
            "segre_node": family.is_segre_node(u),
            "nieto_quintic": family.nieto_membership(u),
            "nieto_singular": family.nieto_singular_at(u),
        }
    rep.checks = [
        acceptance.check("Segre nodes", 10, len(rep.outputs["segre_nodes"])),
        acceptance.check("T-points", 15, len(rep.outputs["t_points"])),
    ]


def cmd_igusa(args, rep):
    rep.inputs = {"points": args.points, "seed": args.seed}
    ker = family.igusa_relation(npoints=args.points, seed=args.seed)
    rep.outputs = {"kernel_dimension": len(ker)}
    if len(ker) == 1:
        rep.outputs["relation"] = family.igusa_relation_poly(ker[0])
    rep.checks = [acceptance.check("kernel dimension", 1, len(ker))]


def cmd_hessian(args, rep):
    u = _parameter(args)
    if u is None:
        rep.checks = acceptance.hessians()
        return
    rep.inputs = {"u": u}
    h = family.hessian_surface(u)
    rep.outputs = {"hessian": h, "proportional_to_xyzw_squared": h.is_proportional(_xyzw_squared())}


def _xyzw_squared():
    x, y, z, w = xyzw()
    return (x * y * z * w) ** 2


def cmd_seed_kummer(args, rep):
    p = parse_vector(args.p, 4, "--p")
    rep.inputs = {"p": p}
    try:
        s = kummer.build_seed(p)
    except kummer.SeedError as exc:
        raise UsageError(str(exc)) from None
    rep.outputs = {
        "parameter": s.param,
        "nodes": s.nodes16,
        "tropes": s.tropes16,
        "incidence": [[int(b) for b in row] for row in s.incidence],
    }
    rep.matrix = ([[int(b) for b in row] for row in s.incidence], [f"n{i}" for i in range(16)])
    rep.checks = [
        acceptance.check("parameter on the Segre cubic", True, family.segre_membership(s.param)),
        acceptance.check("nodes per trope", [6] * 16, [len(s.nodes_on(t)) for t in range(16)]),
        acceptance.check("tropes per node", [6] * 16, [len(s.tropes_through(n)) for n in range(16)]),
    ]


def cmd_conics(args, rep):
    p = parse_vector(args.p, 4, "--p")
    if args.node == "q0":
        q = family.Q0
    else:
        q = parse_vector(args.node, 6, "--node")
        if not family.is_segre_node(q):
            raise UsageError(f"{args.node} is not a Segre node")
    t = Fraction(args.t) if args.t is not None else None
    rep.inputs = {"p": p, "node": q, "t": t}
    try:
        _, result = kummer.conic_slice(p, q, t)
    except (kummer.SeedError, kummer.SplittingError) as exc:
        raise UsageError(str(exc)) from None
    rep.outputs = {
        "u": result.u,
        "t": result.t,
        "tower": result.tower.descriptor(),
        "conics": [{"plane": c.plane, "form": c.matrix} for c in result.conics],
    }
    rep.checks = [acceptance.check(name, True, v) for name, v in kummer.verify_slice(result).items()]


def _points(text):
    parts = text.split(";")
    if len(parts) != 2:
        raise UsageError("--from-points expects 'a0,a1,a2,a3;b0,b1,b2,b3'")
    return parse_vector(parts[0], 4, "point"), parse_vector(parts[1], 4, "point")


def cmd_klein(args, rep):
    a, b = _points(args.from_points)
    rep.inputs = {"a": a, "b": b}
    try:
        p = kleinlines.plucker_from_points(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    x = kleinlines.klein_from_plucker(p)
    rep.outputs = {"plucker": p, "klein": x}
    rep.checks = [
        acceptance.check("Plucker relation", True, kleinlines.plucker_relation(p) == 0),
        acceptance.check("Klein quadric", True, kleinlines.quadric_value(x) == 0),
    ]


def cmd_coplanar(args, rep):
    a, b = _points(args.x)
    c, d = _points(args.y)
    rep.inputs = {"x": [a, b], "y": [c, d]}
    x = kleinlines.klein_from_points(a, b)
    y = kleinlines.klein_from_points(c, d)
    meet = kleinlines.coplanar(x, y)
    rep.outputs = {"meet": meet, "pairing": kleinlines.bilinear(x, y)}
    rep.checks = [acceptance.check("agrees with the rank test", kleinlines.lines_meet_by_rank(a, b, c, d), meet)]


def cmd_fermat_lines(args, rep):
    lines = kleinlines.fermat_lines()
    gram = kleinlines.intersection_gram(lines)
    rep.outputs = {"lines": [list(line) for line in lines]}
    rep.matrix = (gram, [f"L{i}" for i in range(len(lines))])
    rep.checks = acceptance.fermat_lines()


def cmd_config_matrix(args, rep):
    M, det, conv, conics = conicconfig.submatrix_M()
    rep.outputs = {"convention": conv, "det": det}
    if args.full320:
        curves, G = conicconfig.gram_full320(include_h=True)
        rep.matrix = (G, [c.label() for c in curves])
        rep.outputs["size"] = len(curves)
    elif args.submatrix == "paper":
        rep.matrix = (M, [f"{c.ordinal}:({heisgroup.label_index(c.a)},{heisgroup.label_index(c.b)})" for c in conics])
    else:
        conics = conicconfig.reducible_conics()
        N = conicconfig.gram_reducible(conics)
        rep.matrix = (N, [f"{c.ordinal}:({heisgroup.label_index(c.a)},{heisgroup.label_index(c.b)})" for c in conics])
    rep.checks = [
        acceptance.check("M reproduced", [list(r) for r in conicconfig.REFERENCE_M], M),
        acceptance.check("det M", -512, det),
    ]


def cmd_lattice(args, rep):
    src = args.source
    if src == "lambda15":
        gram = [list(r) for r in lattice.LAMBDA15]
    elif src == "paperM":
        gram = [list(r) for r in conicconfig.REFERENCE_M]
    else:
        try:
            gram = read_matrix_csv(src)
        except OSError as exc:
            raise UsageError(str(exc)) from None
    rep.inputs = {"from": src}
    try:
        L = lattice.GramLattice(gram)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    info = lattice.lattice_invariants(L.gram, min_search=args.min_search)
    rep.outputs = info
    if src == "lambda15":
        rep.checks = [
            acceptance.check("det", 512, info["det"]),
            acceptance.check("even", True, info["even"]),
            acceptance.check("signature", [15, 0], info["signature"]),
        ]
    elif src == "paperM":
        h = lattice.solve_integral(L.gram, [2] * L.rank)
        comp = lattice.orth_complement(L, h)
        sub = [h] + comp.basis
        rep.outputs["index_checks"] = {
            "h": h,
            "h_squared": L.norm(h),
            "complement_det": comp.det(),
            "disc_ratio": Fraction(lattice.det_exact(lattice.restrict_gram(L.gram, sub)), info["det"]),
            "index": lattice.sublattice_index(sub, L.gram),
        }
        rep.checks = [
            acceptance.check("det", -512, info["det"]),
            acceptance.check("signature", [1, 15], info["signature"]),
            acceptance.check("h^2", 4, L.norm(h)),
            acceptance.check("index", 2, rep.outputs["index_checks"]["index"]),
        ]


def cmd_verify_all(args, rep):
    only = None
    if args.only:
        only = [s for item in args.only for s in item.split(",") if s]
    try:
        acceptance.select(only)
    except KeyError as exc:
        raise UsageError(exc.args[0]) from None
    rep.inputs = {"only": only, "seed": args.seed}
    results = acceptance.run(only, seed=args.seed)
    rep.outputs = {
        "criteria": [
            {"number": r.number, "title": r.title, "pass": r.passed, "error": r.error}
            for r in results
        ]
    }
    rep.timings = {str(r.number): r.seconds for r in results}
    for r in results:
        for c in r.checks:
            rep.checks.append(acceptance.Check(f"[{r.number}] {c.name}", c.expected, c.actual, c.passed))
        if r.error:
            rep.checks.append(acceptance.Check(f"[{r.number}] raised", None, r.error, False))
        print(f"{'PASS' if r.passed else 'FAIL'}  {r.number:2d}. {r.title}  ({r.seconds:.1f}s)", file=sys.stderr)


# -- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", metavar="PATH", help="also write the JSON report here")
    common.add_argument("--csv", metavar="PATH", help="write the matrix output (if any) as CSV")
    common.add_argument("--seed", type=int, default=0, help="seed for randomised checks")
    common.add_argument("--quiet", action="store_true", help="do not print the report on stdout")
    common.add_argument("--no-timing", action="store_true", help="omit wall time, for byte-stable reports")

    parser = argparse.ArgumentParser(prog="heisquartic", description="Exact computations on Heisenberg-invariant quartic surfaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        p = sub.add_parser(name, parents=[common], help=help_)
        p.set_defaults(func=func)
        return p

    add("group", cmd_group, "the group H22 and its symplectic form")
    add("fixlines", cmd_fixlines, "the 30 fix lines")
    p = add("planes", cmd_planes, "planes of F2^4")
    p.add_argument("--members", action="store_true", help="also match tetrahedra and quadrics to parameters")
    for name, func, help_ in (
        ("discriminant", cmd_discriminant, "singularity discriminant of X_u"),
        ("loci", cmd_loci, "Segre nodes, T-points and membership tests"),
        ("hessian", cmd_hessian, "Hessian of X_u (default: the axis checks)"),
    ):
        p = add(name, func, help_)
        p.add_argument("--u", help="u0,...,u5 with sum 0")
        p.add_argument("--abcde", help="A,B,C,D,E")
    p = add("igusa-relation", cmd_igusa, "quartic relation among the invariants by interpolation")
    p.add_argument("--points", type=int, default=80)
    p = add("seed-kummer", cmd_seed_kummer, "Kummer member singular at a point")
    p.add_argument("--p", default="1,2,3,4")
    p = add("conics", cmd_conics, "32 conics on a smooth member near a Kummer surface")
    p.add_argument("--p", default="1,2,3,4")
    p.add_argument("--node", default="q0", help="Segre node (q0 or six coordinates)")
    p.add_argument("--t", help="line parameter (default: first admissible of 1, 2, ...)")
    p = add("klein", cmd_klein, "Plucker and Klein coordinates of a line")
    p.add_argument("--from-points", required=True, help="'a0,a1,a2,a3;b0,b1,b2,b3'")
    p = add("coplanar", cmd_coplanar, "do two lines meet")
    p.add_argument("--x", required=True, help="first line as two points")
    p.add_argument("--y", required=True, help="second line as two points")
    add("fermat-lines", cmd_fermat_lines, "the 48 lines on the Fermat quartic")
    p = add("config-matrix", cmd_config_matrix, "intersection matrices of the conic configuration")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--full320", action="store_true", help="Gram matrix of all 320 conics and h")
    g.add_argument("--submatrix", choices=["paper"], help="the 16x16 matrix M")
    p = add("lattice-invariants", cmd_lattice, "det, signature, parity of a Gram matrix")
    p.add_argument("--from", dest="source", default="lambda15", help="lambda15, paperM or a CSV file")
    p.add_argument("--min-search", type=int, default=None, help="search bound for the minimum norm")
    p = add("verify-all", cmd_verify_all, "run the acceptance suite")
    p.add_argument("--only", action="append", help="criterion number or name (repeatable, comma lists ok)")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with 2 on bad usage
    rep = RunReport(args.command)
    t0 = time.perf_counter()
    try:
        args.func(args, rep)
    except UsageError as exc:
        print(f"heisquartic {args.command}: error: {exc}", file=sys.stderr)
        return 2
    rep.wall_time = time.perf_counter() - t0
    text = json.dumps(rep.to_dict(timing=not args.no_timing), indent=2)
    if not args.quiet:
        print(text)
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(text + "\n")
    if args.csv:
        if rep.matrix is None:
            print(f"heisquartic {args.command}: no matrix output for --csv", file=sys.stderr)
            return 2
        with open(args.csv, "w", newline="") as fh:
            fh.write(matrix_csv(*rep.matrix))
    return 0 if rep.passed else 1


if __name__ == "__main__":
    sys.exit(main())
