"""Command-line front end.

Exit codes: 0 success or verified, 1 verification failed, 2 invalid input,
3 a resource cap was exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

from .errors import CapExceededError, NotHookError, SuperschurError
from .partitions import Partition, hook_instances, is_hook, partitions_up_to
from .polynomials import SparsePolynomial, schur_super_det, schur_super_tableau
from .polytopes import (
    DEFAULT_VERTEX_CAP,
    build_system,
    enumerate_lattice,
    enumerate_vertices,
    maximize_linear,
    rado_check,
    verify_snp,
)
from .tu import DEFAULT_TU_CAP, certify_atilde_tu, certify_matrix, load_matrix

EXIT_OK, EXIT_FAILED, EXIT_INVALID, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(tok) for tok in text.split(",")]
    except ValueError:
        raise UsageError(f"not a comma-separated integer list: {text!r}") from None


def _shape(args) -> Partition:
    if args.shape is None:
        raise UsageError("--shape is required")
    try:
        return Partition(_int_list(args.shape))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _kl(args) -> tuple[int, int]:
    if args.k is None or args.l is None:
        raise UsageError("--k and --l are required")
    if args.k < 0 or args.l < 0:
        raise UsageError("--k and --l must be nonnegative")
    return args.k, args.l


def _jobs(args) -> int:
    if args.jobs is not None:
        jobs = args.jobs
    else:
        try:
            jobs = int(os.environ.get("SUPERSCHUR_JOBS", "1"))
        except ValueError:
            raise UsageError("SUPERSCHUR_JOBS must be an integer") from None
    if jobs < 1:
        raise UsageError("parallelism degree must be at least 1")
    return jobs


def _fmt_number(x: Fraction) -> int | str:
    return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _point_header(k: int, l: int) -> list[str]:
    return [f"a{i + 1}" for i in range(k)] + [f"b{j + 1}" for j in range(l)]


class Output:
    def __init__(self, args):
        self.fmt = args.format
        self.path = args.out

    def write(self, text: str) -> None:
        if not text.endswith("\n"):
            text += "\n"
        if self.path:
            with open(self.path, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)

    def json(self, obj: Any) -> None:
        self.write(json.dumps(obj, ensure_ascii=False))

    def csv(self, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> None:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        self.write(buf.getvalue())


def _poly_block(p: SparsePolynomial, k: int) -> dict:
    block = p.to_dict()
    block["expression"] = p.format(k)
    return block


def cmd_compute(args, out: Output) -> int:
    lam = _shape(args)
    k, l = _kl(args)
    if not is_hook(lam, k, l):
        print(f"warning: {list(lam)} is not a ({k},{l})-hook partition; S_lambda is 0", file=sys.stderr)
    method = args.method
    polys: dict[str, SparsePolynomial] = {}
    if method in ("tableau", "both"):
        polys["tableau"] = schur_super_tableau(lam, k, l)
    if method in ("det", "both"):
        polys["det"] = schur_super_det(lam, k, l)
    if out.fmt == "csv":
        header = _point_header(k, l) + ["coef"]
        name = "tableau" if "tableau" in polys else "det"
        out.csv(header, [list(e) + [str(c)] for e, c in polys[name].items()])
        return EXIT_OK
    result: dict[str, Any] = {"shape": list(lam), "k": k, "l": l, "method": method}
    for name, p in polys.items():
        result[name] = _poly_block(p, k)
    if method == "both":
        result["equal"] = polys["tableau"] == polys["det"]
    out.json(result)
    return EXIT_OK


def _emit_points(out: Output, k: int, l: int, points: Sequence[Sequence[Any]], meta: dict) -> None:
    if out.fmt == "csv":
        out.csv(_point_header(k, l), points)
    else:
        out.json({**meta, "count": len(points), "points": [list(p) for p in points]})


def cmd_support(args, out: Output) -> int:
    lam = _shape(args)
    k, l = _kl(args)
    pts = sorted(schur_super_tableau(lam, k, l).support())
    _emit_points(out, k, l, pts, {"shape": list(lam), "k": k, "l": l})
    return EXIT_OK


def cmd_lattice(args, out: Output) -> int:
    lam = _shape(args)
    k, l = _kl(args)
    pts = list(enumerate_lattice(build_system(lam, k, l)))
    _emit_points(out, k, l, pts, {"shape": list(lam), "k": k, "l": l})
    return EXIT_OK


def cmd_vertices(args, out: Output) -> int:
    lam = _shape(args)
    k, l = _kl(args)
    verts = sorted(enumerate_vertices(build_system(lam, k, l), args.cap_vertex_dim))
    pts = [[_fmt_number(x) for x in v] for v in verts]
    integral = all(x.denominator == 1 for v in verts for x in v)
    _emit_points(out, k, l, pts, {"shape": list(lam), "k": k, "l": l, "integral": integral})
    return EXIT_OK


def cmd_maximize(args, out: Output) -> int:
    lam = _shape(args)
    k, l = _kl(args)
    if args.c is None:
        raise UsageError("--c is required")
    c = _int_list(args.c)
    point, value = maximize_linear(build_system(lam, k, l), c)
    if out.fmt == "csv":
        out.csv(_point_header(k, l) + ["value"], [list(point) + [value]])
    else:
        out.json({"shape": list(lam), "k": k, "l": l, "c": c, "point": list(point), "value": value})
    return EXIT_OK


# sweep workers live at module level so they pickle for the process pool

def _snp_task(inst: tuple[tuple[int, ...], int, int, int]) -> dict:
    lam, k, l, cap = inst
    return verify_snp(lam, k, l, cap).to_dict()


def _tu_task(inst: tuple[tuple[int, ...], int, int, int]) -> dict:
    lam, k, l, cap = inst
    return certify_atilde_tu(lam, k, l, cap).to_dict()


def _rado_task(inst: tuple[tuple[int, ...], int]) -> dict:
    mu, k = inst
    return rado_check(mu, k).to_dict()


def _run_sweep(task: Callable[[Any], dict], instances: list, jobs: int) -> list[dict]:
    if jobs == 1 or len(instances) < 2:
        return [task(i) for i in instances]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(task, instances, chunksize=8))


def _sweep_bounds(args) -> tuple[int, int, int]:
    bounds = (args.max_size, args.max_k, args.max_l)
    if any(b is None for b in bounds):
        raise UsageError("--sweep needs --max-size, --max-k and --max-l")
    if any(b < 0 for b in bounds):
        raise UsageError("sweep bounds must be nonnegative")
    return bounds  # type: ignore[return-value]


def _emit_sweep(out: Output, kind: str, bounds: dict, reports: list[dict]) -> int:
    failed = [r for r in reports if not r["passed"]]
    if out.fmt == "csv":
        names = list(reports[0]["checks"]) if reports else []
        rows = []
        for r in reports:
            p = r["params"]
            rows.append(
                [" ".join(map(str, p["shape"])), p.get("k", ""), p.get("l", ""), r["passed"]]
                + [r["checks"][n] for n in names]
                + [json.dumps(r["counterexample"])]
            )
        out.csv(["shape", "k", "l", "passed"] + names + ["counterexample"], rows)
    else:
        out.json(
            {
                "kind": kind,
                "sweep": bounds,
                "instances": len(reports),
                "passed": len(reports) - len(failed),
                "failed": len(failed),
                "reports": reports,
            }
        )
    return EXIT_OK if not failed else EXIT_FAILED


def _emit_report(out: Output, report: dict) -> None:
    if out.fmt == "csv":
        names = list(report["checks"])
        out.csv(["passed"] + names + ["counterexample"], [[report["passed"]] + [report["checks"][n] for n in names] + [json.dumps(report["counterexample"])]])
    else:
        out.json(report)


def cmd_verify_snp(args, out: Output) -> int:
    cap = args.cap_vertex_dim
    if args.sweep:
        max_size, max_k, max_l = _sweep_bounds(args)
        if max_k + max_l > cap:
            raise CapExceededError(f"sweep reaches dimension {max_k + max_l} > vertex cap {cap}")
        instances = [(tuple(lam), k, l, cap) for lam, k, l in hook_instances(max_size, max_k, max_l)]
        reports = _run_sweep(_snp_task, instances, _jobs(args))
        return _emit_sweep(out, "snp", {"max_size": max_size, "max_k": max_k, "max_l": max_l}, reports)
    lam = _shape(args)
    k, l = _kl(args)
    report = verify_snp(lam, k, l, cap).to_dict()
    if args.direct:
        from .saturation import direct_saturation

        report["direct"] = direct_saturation(lam, k, l).to_dict()
    _emit_report(out, report)
    return EXIT_OK if report["passed"] else EXIT_FAILED


def cmd_tu(args, out: Output) -> int:
    cap = args.cap_tu
    if args.matrix:
        try:
            with open(args.matrix, encoding="utf-8") as fh:
                matrix = load_matrix(fh.read())
        except (OSError, ValueError) as exc:
            raise UsageError(f"cannot read matrix: {exc}") from None
        report = certify_matrix(matrix, cap)
    elif args.sweep:
        max_size, max_k, max_l = _sweep_bounds(args)
        instances = [(tuple(lam), k, l, cap) for lam, k, l in hook_instances(max_size, max_k, max_l)]
        reports = _run_sweep(_tu_task, instances, _jobs(args))
        code = _emit_sweep(out, "tu", {"max_size": max_size, "max_k": max_k, "max_l": max_l}, reports)
        if code == EXIT_OK and any("exhaustive" in r["skipped"] for r in reports):
            return EXIT_CAP
        return code
    else:
        lam = _shape(args)
        k, l = _kl(args)
        report = certify_atilde_tu(lam, k, l, cap)
    data = report.to_dict()
    _emit_report(out, data)
    if not data["passed"]:
        return EXIT_FAILED
    if "exhaustive" in data["skipped"]:
        return EXIT_CAP
    return EXIT_OK


def cmd_rado(args, out: Output) -> int:
    if args.sweep:
        if args.max_size is None or args.max_k is None:
            raise UsageError("rado --sweep needs --max-size and --max-k")
        instances = [(tuple(mu), k) for mu in partitions_up_to(args.max_size) for k in range(len(mu), args.max_k + 1)]
        reports = _run_sweep(_rado_task, instances, _jobs(args))
        return _emit_sweep(out, "rado", {"max_size": args.max_size, "max_k": args.max_k}, reports)
    mu = _shape(args)
    if args.k is None:
        raise UsageError("--k is required")
    report = rado_check(mu, args.k).to_dict()
    _emit_report(out, report)
    return EXIT_OK if report["passed"] else EXIT_FAILED


COMMANDS = {
    "compute": (cmd_compute, "supersymmetric Schur polynomial by tableaux and/or determinant"),
    "support": (cmd_support, "exponent vectors of S_lambda"),
    "lattice": (cmd_lattice, "integer points of the hook polyhedron H"),
    "vertices": (cmd_vertices, "exact vertices of H"),
    "verify-snp": (cmd_verify_snp, "saturation certificate chain for one shape or a sweep"),
    "tu": (cmd_tu, "total unimodularity of the hook system or of a matrix file"),
    "rado": (cmd_rado, "classical l = 0 support description"),
    "maximize": (cmd_maximize, "maximise a linear objective over the lattice points of H"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--shape", help="comma-separated parts; empty string is the empty partition")
    common.add_argument("--k", type=int, help="number of x-variables")
    common.add_argument("--l", type=int, help="number of y-variables")
    common.add_argument("--method", choices=("tableau", "det", "both"), default="tableau")
    common.add_argument("--sweep", action="store_true")
    common.add_argument("--max-size", type=int)
    common.add_argument("--max-k", type=int)
    common.add_argument("--max-l", type=int)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--cap-vertex-dim", type=int, default=DEFAULT_VERTEX_CAP)
    common.add_argument("--cap-tu", type=int, default=DEFAULT_TU_CAP)
    common.add_argument("--jobs", type=int, help="worker processes for sweeps (default $SUPERSCHUR_JOBS or 1)")
    common.add_argument("--matrix", help="JSON file holding an array of integer rows")
    common.add_argument("--c", help="comma-separated objective vector")
    common.add_argument("--out", help="write output to this file instead of stdout")
    common.add_argument("--direct", action="store_true", help="verify-snp: add the LP-based direct saturation check")

    parser = argparse.ArgumentParser(prog="superschur", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    if args.cap_vertex_dim < 1 or args.cap_tu < 1:
        print("error: caps must be at least 1", file=sys.stderr)
        return EXIT_INVALID
    handler = COMMANDS[args.command][0]
    try:
        return handler(args, Output(args))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (NotHookError, SuperschurError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
