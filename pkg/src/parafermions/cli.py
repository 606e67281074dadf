"""Command-line front end.

Subcommands emit machine-readable documents on stdout:

* ``smatrix``  - any of the S-matrix constructions
* ``verify``   - residual table for the consistency checks
* ``fusion``   - Verlinde fusion tensor
* ``dims``     - conformal dimensions and quantum dimensions
* ``sectors``  - label enumerations
* ``interfere``- sampled interference curve with monodromy header

Exit codes: 0 success, 1 usage or label error, 2 resource cap exceeded,
3 verification failure. Complex numbers serialize as [re, im] pairs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import coset as co
from . import fullcft as fc
from . import fusion as fu
from . import interferometry as it
from . import lie
from . import smatrix as sm
from .errors import LabelError, ParafermionError, WeylCapError

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_CAP = 2
EXIT_VERIFY = 3


class _Parser(argparse.ArgumentParser):
    # usage errors must exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _complex_pairs(matrix: np.ndarray):
    return [[[z.real, z.imag] for z in row] for row in matrix]


def document(kind: str, k: int, basis, payload: dict) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "k": k,
        "kind": kind,
        "basis": [str(lab) for lab in basis],
        **payload,
    }


def emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc))
    else:
        print(to_csv(doc), end="")


def to_csv(doc: dict) -> str:
    """Flatten a document to CSV: metadata comments, then data rows with
    complex entries as re/im column pairs."""
    buf = io.StringIO()
    writer = csv.writer(buf)
    for key in ("schema_version", "k", "kind"):
        writer.writerow([f"# {key}", doc[key]])
    if "matrix" in doc:
        header = ["label"]
        for lab in doc["basis"]:
            header += [f"{lab} re", f"{lab} im"]
        writer.writerow(header)
        for lab, row in zip(doc["basis"], doc["matrix"]):
            flat = [lab]
            for re_im in row:
                flat += [repr(re_im[0]), repr(re_im[1])]
            writer.writerow(flat)
    elif "curve" in doc:
        writer.writerow(["alpha", "sigma_xx"])
        for alpha, sigma in doc["curve"]:
            writer.writerow([repr(alpha), repr(sigma)])
    else:
        for key, value in doc.items():
            if key in ("schema_version", "k", "kind"):
                continue
            writer.writerow([key, json.dumps(value)])
    return buf.getvalue()


def parse_document(text: str) -> dict:
    return json.loads(text)


def matrix_from_document(doc: dict) -> np.ndarray:
    rows = doc["matrix"]
    return np.array([[complex(re, im) for re, im in row] for row in rows])


_SMATRIX_BUILDERS = {
    "su2k": lambda k, tol, cap: sm.s_su2k(k, tolerance=tol),
    "suk2-oracle": lambda k, tol, cap: sm.s_suk2_weylkac(k, cap=cap, tolerance=tol),
    "suk2-compact": lambda k, tol, cap: sm.s_suk2_compact(k, tolerance=tol),
    "coset": lambda k, tol, cap: co.coset_s_compact(k, tolerance=tol).s,
    "coset-lm": lambda k, tol, cap: co.coset_s_via_su2k_u1(k, tolerance=tol),
    "u1": lambda k, tol, cap: fc.s_u1(k, tolerance=tol),
    "full-product": lambda k, tol, cap: fc.full_s_product(k, tolerance=tol),
    "full-compact": lambda k, tol, cap: fc.full_s_compact(k, tolerance=tol),
}


def cmd_smatrix(args) -> int:
    s = _SMATRIX_BUILDERS[args.which](args.k, args.tolerance, args.weyl_cap)
    doc = document("smatrix", args.k, s.labels, {
        "which": args.which,
        "tolerance": s.tolerance,
        "matrix": _complex_pairs(s.entries),
    })
    emit(doc, args.format)
    return EXIT_OK


def _check_oracle(k, tol, cap):
    return sm.s_suk2_weylkac(k, cap=cap, tolerance=tol).max_abs_diff(
        sm.s_suk2_compact(k, tolerance=tol))


def _check_coset_four_way(k, tol):
    four = [sm.s_suk2_compact(k, tolerance=tol),
            co.coset_s_compact(k, tolerance=tol).s,
            co.coset_s_phase_form(k, tolerance=tol),
            co.coset_s_via_su2k_u1(k, tolerance=tol)]
    return max(a.max_abs_diff(b) for a in four for b in four)


def _theory(name, k, tol):
    if name == "su2k":
        s = sm.s_su2k(k, tolerance=tol)
        t = fu.TData({l: sm.dim_su2k(l, k) for l in s.labels},
                     Fraction(3 * k, k + 2))
    elif name == "coset":
        cdata = co.coset_s_compact(k, tolerance=tol)
        s, t = cdata.s, fu.TData(cdata.dims, cdata.central_charge)
    else:
        s = fc.full_s_product(k, tolerance=tol)
        t = fu.TData(fc.full_dims(k), fc.full_central_charge(k))
    return s, t


def _check_verlinde_coset(k, tol):
    ring = fu.verlinde(co.coset_s_compact(k, tolerance=tol).s)
    for a in ring.labels:
        for b in ring.labels:
            if fu.fusion_coset_closed(a, b) != ring.product(a, b):
                return 1
    return 0


def _check_verlinde_su2k(k, tol):
    ring = fu.verlinde(sm.s_su2k(k, tolerance=tol))
    for a in ring.labels:
        for b in ring.labels:
            closed = {c: 1 for c in fu.fusion_su2k_closed(a, b, k)}
            if closed != dict(ring.product(a, b)):
                return 1
    return 0


def _check_verlinde_full(k, tol):
    fu.verlinde(fc.full_s_product(k, tolerance=tol))  # raises on failure
    return 0


def _verify_checks(k: int, tol: float, cap: int, targets=None):
    """Evaluate the named consistency checks, lazily so untargeted ones
    (in particular the capped oracle) never run."""
    plan = [("oracle-vs-compact", lambda: (_check_oracle(k, tol, cap), None)),
            ("coset-four-way", lambda: (_check_coset_four_way(k, tol), None))]

    reports = {}

    for name in ("su2k", "coset", "full"):
        def make(name=name, which=None):
            def run(which=which):
                if name not in reports:
                    reports[name] = fu.verify_modular_relations(
                        *_theory(name, k, tol))
                rep = reports[name]
                if which == "unitarity":
                    return rep.unitarity_defect, None
                if which == "s2":
                    ok = (rep.conjugation_is_permutation
                          and rep.s2_defect < tol and rep.c2_defect < tol)
                    return rep.s2_defect, ok
                return rep.st3_defect, None
            return run
        plan.append((f"unitarity-{name}", make(which="unitarity")))
        plan.append((f"s2-{name}", make(which="s2")))
        plan.append((f"st3-{name}", make(which="st3")))

    plan += [
        ("verlinde-vs-closed-coset",
         lambda: (_check_verlinde_coset(k, tol), None)),
        ("verlinde-vs-closed-su2k",
         lambda: (_check_verlinde_su2k(k, tol), None)),
        ("verlinde-full-integrality",
         lambda: (_check_verlinde_full(k, tol), None)),
        ("full-dual-construction",
         lambda: (fc.full_s_product(k, tolerance=tol).max_abs_diff(
             fc.full_s_compact(k, tolerance=tol)), None)),
        ("filling-factor",
         lambda: (0 if fc.filling_factor(fc.gram_matrix(k))
                  == Fraction(k, k + 2) else 1, None)),
    ]
    if targets:
        plan = [(n, f) for n, f in plan
                if any(n.startswith(t) or t in n for t in targets)]
    checks = []
    for name, run in plan:
        residual, ok = run()
        residual = float(residual)
        checks.append((name, residual, residual < tol if ok is None else ok))
    return checks


def cmd_verify(args) -> int:
    checks = _verify_checks(args.k, args.tolerance, args.weyl_cap,
                            targets=args.targets)
    if args.targets and not checks:
        print(f"no checks match targets {args.targets}", file=sys.stderr)
        return EXIT_USAGE
    doc = document("verify", args.k, [c[0] for c in checks], {
        "tolerance": args.tolerance,
        "checks": [{"name": n, "residual": r, "passed": p}
                   for n, r, p in checks],
        "passed": all(p for _, _, p in checks),
    })
    emit(doc, args.format)
    if not doc["passed"]:
        failing = [n for n, _, p in checks if not p]
        print(f"failing checks: {', '.join(failing)}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def cmd_fusion(args) -> int:
    if args.which == "coset":
        s = co.coset_s_compact(args.k, tolerance=args.tolerance).s
    elif args.which == "su2k":
        s = sm.s_su2k(args.k, tolerance=args.tolerance)
    else:
        s = fc.full_s_product(args.k, tolerance=args.tolerance)
    ring = fu.verlinde(s)
    doc = document("fusion", args.k, ring.labels, {
        "which": args.which,
        "vacuum_index": ring.vacuum_index,
        "tensor": ring.tensor.tolist(),
    })
    emit(doc, args.format)
    return EXIT_OK


def cmd_dims(args) -> int:
    cdata = co.coset_s_compact(args.k, tolerance=args.tolerance)
    qdims = fu.quantum_dimensions(cdata.s)
    doc = document("dims", args.k, cdata.s.labels, {
        "central_charge": str(cdata.central_charge),
        "conformal_dimensions": [str(cdata.dims[w]) for w in cdata.s.labels],
        "quantum_dimensions": [qdims[w] for w in cdata.s.labels],
        "total_quantum_dimension": fu.total_quantum_dimension(cdata.s),
    })
    emit(doc, args.format)
    return EXIT_OK


def cmd_sectors(args) -> int:
    sectors = fc.enumerate_sectors(args.k)
    doc = document("sectors", args.k, sectors, {
        "count": len(sectors),
        "coset_primaries": co.count_primaries(args.k),
        "neutral_labels": [str(s.neutral) for s in sectors],
        "filling_factor": str(fc.filling_factor(fc.gram_matrix(args.k))),
    })
    emit(doc, args.format)
    return EXIT_OK


def _parse_label(text: str, labels, k: int):
    for lab in labels:
        if str(lab) == text.strip():
            return lab
    valid = ", ".join(str(lab) for lab in labels)
    raise LabelError(f"label {text!r} not valid for k={k}; valid: {valid}")


def cmd_interfere(args) -> int:
    if args.which == "coset":
        s = co.coset_s_compact(args.k, tolerance=args.tolerance).s
    else:
        s = fc.full_s_product(args.k, tolerance=args.tolerance)
    bulk = _parse_label(args.bulk, s.labels, args.k)
    probe = _parse_label(args.probe, s.labels, args.k)
    pattern = it.sigma_xx_curve(s, probe, bulk, args.t1, args.t2, args.samples)
    mono = pattern.monodromy
    doc = document("interference", args.k, [str(probe), str(bulk)], {
        "which": args.which,
        "monodromy": [mono.value.real, mono.value.imag],
        "visibility": mono.magnitude,
        "t1": [args.t1.real, args.t1.imag],
        "t2": [args.t2.real, args.t2.imag],
        "curve": [[a, s_] for a, s_ in zip(pattern.alpha_samples,
                                           pattern.sigma_xx)],
    })
    emit(doc, args.format)
    return EXIT_OK


def _complex_arg(text: str) -> complex:
    try:
        return complex(text.replace(" ", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="parafermions",
                     description="Modular data of Z_k parafermion "
                                 "Read-Rezayi states")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--tolerance", type=float, default=sm.DEFAULT_TOLERANCE)
        p.add_argument("--weyl-cap", type=int, default=lie.DEFAULT_WEYL_CAP)

    p = sub.add_parser("smatrix", parents=[], help="emit an S matrix")
    common(p)
    p.add_argument("--which", choices=sorted(_SMATRIX_BUILDERS),
                   required=True)
    p.set_defaults(func=cmd_smatrix)

    p = sub.add_parser("verify", help="run consistency checks")
    common(p)
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--all", action="store_true")
    group.add_argument("--targets", nargs="+")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("fusion", help="emit a Verlinde fusion tensor")
    common(p)
    p.add_argument("--which", choices=("coset", "su2k", "full"),
                   default="coset")
    p.set_defaults(func=cmd_fusion)

    p = sub.add_parser("dims", help="emit conformal and quantum dimensions")
    common(p)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("sectors", help="enumerate sectors and lattice data")
    common(p)
    p.set_defaults(func=cmd_sectors)

    p = sub.add_parser("interfere", help="sample an interference curve")
    common(p)
    p.add_argument("--which", choices=("coset", "full"), default="coset")
    p.add_argument("--bulk", required=True,
                   help='label string, e.g. "0,1" (coset) or "1,1" (full)')
    p.add_argument("--probe", required=True)
    p.add_argument("--t1", type=_complex_arg, default=1 + 0j)
    p.add_argument("--t2", type=_complex_arg, default=1 + 0j)
    p.add_argument("--samples", type=int, default=64)
    p.set_defaults(func=cmd_interfere)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except WeylCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (LabelError, ParafermionError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
