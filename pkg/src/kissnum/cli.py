"""Command-line front end: ``kissnum bounds | verify | construct``.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 embedding search or equalization precondition failure.
"""

import argparse
import csv
import io
import json
import math
import sys
import warnings

import numpy as np

from kissnum import bounds, hyptrig, ribbon, systoles
from kissnum.errors import EmbeddingNotFoundError, EqualizationError, ValidationError

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_PRECONDITION = 0, 1, 2, 3


def fmt(x):
    """Round floats to 12 significant digits, recursively."""
    if isinstance(x, float):
        return float(f"{x:.12g}")
    if isinstance(x, dict):
        return {k: fmt(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [fmt(v) for v in x]
    if isinstance(x, np.generic):
        return fmt(x.item())
    return x


def parse_grid(text, integer=False):
    """Parse ``a``, ``a,b,c``, ``a..b`` (unit step), ``a..b:step`` or ``a..b:logN``."""
    values = []
    for part in text.split(","):
        part = part.strip()
        if ".." not in part:
            values.append(float(part))
            continue
        lo_s, rest = part.split("..", 1)
        hi_s, _, step_s = rest.partition(":")
        lo, hi = float(lo_s), float(hi_s)
        if hi < lo:
            raise ValueError(f"empty range {part!r}")
        if step_s.startswith("log"):
            count = int(step_s[3:])
            if count < 1 or lo <= 0:
                raise ValueError(f"bad log grid {part!r}")
            values.extend(np.geomspace(lo, hi, count).tolist())
            continue
        step = float(step_s) if step_s else 1.0
        if step <= 0:
            raise ValueError(f"non-positive step in {part!r}")
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        values.extend(lo + k * step for k in range(count))
    if not values:
        raise ValueError("empty grid")
    if integer:
        if any(v != int(v) for v in values):
            raise ValueError(f"expected integers in {text!r}")
        return [int(v) for v in values]
    return values


def _emit(text, out):
    if out:
        with open(out, "w", newline="") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(obj):
    return json.dumps(fmt(obj), indent=2) + "\n"


def _dump_csv(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([f"{v:.12g}" if isinstance(v, float) else v for v in row])
    return buf.getvalue()


# -- bounds ----------------------------------------------------------------------


def bound_rows(genera, lengths, r_prime=bounds.ASINH_1):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", bounds.AreaBoundWarning)
        return [bounds.bound_report(g, l, r_prime).as_dict() for g in genera for l in lengths]


def cmd_bounds(args):
    rows = bound_rows(args.genus, args.length, args.r_prime)
    if args.format == "csv":
        header = list(rows[0])
        text = _dump_csv(header, [[r[k] for k in header] for r in rows])
    else:
        text = _dump_json({"rows": rows})
    _emit(text, args.out)
    return EXIT_OK


# -- verify ----------------------------------------------------------------------


def identity_errors(grid, fault=0.0, genera=range(2, 101)):
    """Worst case per check over the grid.

    Identities report the maximal relative error (pass iff <= tol);
    strict inequalities lhs < rhs report the maximal ratio lhs/rhs
    (pass iff < 1).
    """
    scale = 1.0 + fault
    results = {}

    def record(name, kind, l, value, tol):
        best = results.setdefault(name, {"kind": kind, "worst": -math.inf, "at": None, "tol": tol})
        if value > best["worst"]:
            best["worst"], best["at"] = value, l

    for l in grid:
        d = hyptrig.pants_adjacent_distance(l, l, l) * scale
        ch = math.cosh(l / 2)
        record("symmetric_pants", "identity", l, abs(math.cosh(d) * (ch - 1) - ch) / ch, 1e-12)
        two_r = 2 * bounds.systolic_radius(l)
        record("systolic_collar", "identity", l, abs(d - two_r) / two_r, 1e-12)
        lhs = math.sinh(l / 4) / math.sinh(l / 2) * scale
        rhs = 1 / (2 * math.cosh(l / 4))
        record("double_angle", "identity", l, abs(lhs - rhs) / rhs, 1e-14)
        sin_theta = math.sin(bounds.min_angle(l)) * scale
        record("min_angle", "identity", l, abs(sin_theta * 2 * math.cosh(l / 4) - 1), 1e-14)

    with warnings.catch_warnings():
        warnings.simplefilter("ignore", bounds.AreaBoundWarning)
        for l in grid:
            if l < bounds.SHORT_REGIME:
                continue
            area = hyptrig.disk_area(bounds.systolic_radius(l) / 2) / scale
            record("area_minorant", "inequality", l, math.pi / 4 * math.exp(-l / 2) / area, 1.0)
            for g in genera:
                f = bounds.cover_count_bound(bounds.BoundQuery(g, l)) * scale
                record("cover_bound", "inequality", l, f / (16 * (g - 1) * math.exp(l / 2)), 1.0)
    return results


def check_passed(res):
    if res["kind"] == "identity":
        return res["worst"] <= res["tol"]
    return res["worst"] < res["tol"]


def cmd_verify(args):
    results = identity_errors(args.grid, fault=args.inject_fault)
    ok = True
    for name, res in results.items():
        passed = check_passed(res)
        ok &= passed
        label = "max_rel_error" if res["kind"] == "identity" else "max_ratio"
        where = "" if passed else f" at l={res['at']:.12g}"
        print(f"{'PASS' if passed else 'FAIL'} {name:16s} {label}={res['worst']:.9g} limit={res['tol']:.0e}{where}")
    print(f"{len(args.grid)} grid points; {'all checks hold' if ok else 'verification failed'}")
    return EXIT_OK if ok else EXIT_FAIL


# -- construct -------------------------------------------------------------------


def _equalization(report, epsilon, seed):
    rng = np.random.default_rng(seed)
    k = report.qualifying_count
    lengths = rng.uniform(3 - 6 * epsilon, 3.0, size=k)
    trace = systoles.equalize_lengths(lengths, report.matrix, epsilon)
    return {
        "epsilon": epsilon,
        "seed": seed,
        "initial": list(trace.initial),
        "steps": [{"max_set": list(s.max_set), "width": s.width} for s in trace.steps],
        "step_count": len(trace.steps),
        "final_length": trace.final[0] if trace.final else None,
        "all_equal": len(set(trace.final)) <= 1,
    }


def construct_complete(rs, epsilon, seed):
    report = systoles.count_qualifying(rs)
    out = {
        "kind": "complete_graph",
        "surface": ribbon.genus(rs).__dict__,
        "report": report.summary(),
        "growth_ratio": systoles.growth_ratio(report) if report.genus > 0 else None,
        "cycles": [c.as_dict() for c in report.cycles],
        "intersection_matrix": report.matrix.values.tolist(),
        "rotation": ribbon.dumps_rotation(rs),
    }
    if report.connected:
        out["equalization"] = _equalization(report, epsilon, seed)
    else:
        print("warning: crossing graph disconnected; equalization skipped", file=sys.stderr)
        out["equalization"] = None
    return out, report.matrix.values


def construct_generic(rs):
    summary = ribbon.genus(rs)
    cycles = []
    for bound in range(1, rs.vertex_count + 1):
        cycles = systoles.enumerate_short_cycles(rs, bound)
        if cycles:
            break
    qualifying = [c for c in cycles if systoles.is_qualifying(c, rs)]
    matrix, distinct = systoles.mod2_matrix_and_distinctness(qualifying, rs)
    out = {
        "kind": "rotation_system",
        "surface": summary.__dict__,
        "girth": len(cycles[0]) if cycles else None,
        "short_cycle_count": len(cycles),
        "qualifying_count": len(qualifying),
        "homology_distinct": distinct,
        "connected": systoles.intersection_graph_connected(qualifying, matrix),
        "cycles": [c.as_dict() for c in qualifying],
        "intersection_matrix": matrix.values.tolist(),
    }
    return out, matrix.values


def cmd_construct(args):
    try:
        if args.npod is not None:
            result = systoles.npod_systole_report(args.npod)
            result["kind"] = "npod"
            matrix = np.array(result["intersection_matrix"])
        else:
            if args.rotation:
                rs = ribbon.read_rotation(args.rotation)
            else:
                rs = ribbon.complete_graph_embedding(args.n, seed=args.seed)
            if ribbon.is_complete_graph(rs):
                result, matrix = construct_complete(rs, args.epsilon, args.seed)
            else:
                result, matrix = construct_generic(rs)
    except EmbeddingNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except EqualizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except (ValidationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "csv":
        k = len(matrix)
        text = _dump_csv(["cycle"] + [f"c{j}" for j in range(k)], [[f"c{i}"] + list(map(int, matrix[i])) for i in range(k)])
    else:
        text = _dump_json(result)
    _emit(text, args.out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------


def build_parser():
    parser = argparse.ArgumentParser(prog="kissnum", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_type(integer=False):
        def parse(text):
            try:
                return parse_grid(text, integer)
            except ValueError as exc:
                raise argparse.ArgumentTypeError(str(exc)) from exc

        return parse

    def positive(text):
        value = float(text)
        if not value > 0:
            raise argparse.ArgumentTypeError("must be positive")
        return value

    def epsilon(text):
        value = float(text)
        if not 0 < value < 1 / 6:
            raise argparse.ArgumentTypeError("epsilon must lie in (0, 1/6)")
        return value

    p = sub.add_parser("bounds", help="tabulate systole count bounds over a (genus, length) grid")
    p.add_argument("--genus", type=grid_type(integer=True), required=True)
    p.add_argument("--length", type=grid_type(), required=True)
    p.add_argument("--r-prime", type=positive, default=bounds.ASINH_1)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="check the trigonometric identities and inequalities")
    p.add_argument("--grid", type=grid_type(), default=parse_grid("0.1..30:log50"))
    p.add_argument("--inject-fault", type=float, default=0.0, metavar="REL",
                   help="multiply computed sides by (1 + REL); a negative control")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("construct", help="build an embedded graph and analyze its short cycles")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--n", type=int, help="complete graph K_n")
    src.add_argument("--npod", type=int, metavar="M", help="single vertex with 4M half-edges")
    src.add_argument("--rotation", help="rotation-system file")
    p.add_argument("--epsilon", type=epsilon, default=0.05)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "grid", None) is not None and any(x <= 0 for x in args.grid):
        parser.error("grid lengths must be positive")
    if getattr(args, "length", None) is not None and any(x <= 0 for x in args.length):
        parser.error("lengths must be positive")
    if getattr(args, "genus", None) is not None and any(g < 2 for g in args.genus):
        parser.error("genus must be >= 2")
    if getattr(args, "n", None) is not None and args.n < 4:
        parser.error("--n must be >= 4")
    if getattr(args, "npod", None) is not None and args.npod < 1:
        parser.error("--npod must be >= 1")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
