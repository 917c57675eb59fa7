"""Command-line interface: ``analyze``, ``generate`` and ``verify``.

Exit codes: 0 success, 1 counterexample found, 2 parse or I/O error,
3 contract violation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import fileformat as ff
from . import floatmode as fm
from . import generators as gen
from . import matrix as mx
from . import verify as vf
from .report import SQUARE_ONLY, ContractViolation, analyze

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_PARSE = 2
EXIT_CONTRACT = 3

MODE_ENV = "BICOMPLEX_MODE"


def _err(msg: str) -> None:
    print(f"error: {msg}", file=sys.stderr)


# -- analyze ------------------------------------------------------------------------

def cmd_analyze(args: argparse.Namespace) -> int:
    try:
        doc = ff.load(args.path)
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE
    except ff.ParseError as exc:
        _err(f"{args.path}: {exc}")
        return EXIT_PARSE
    mode = args.mode or os.environ.get(MODE_ENV, "exact")
    if mode not in ("exact", "float"):
        _err(f"unknown mode {mode!r}")
        return EXIT_CONTRACT
    try:
        report = analyze(doc, mode, args.tol, tuple(args.check or ()))
    except (ContractViolation, mx.MatrixContractError) as exc:
        _err(str(exc))
        return EXIT_CONTRACT
    sys.stdout.write(report.to_json() if args.format == "structured" else report.to_text())
    return EXIT_OK


# -- generate -----------------------------------------------------------------------

def _component_kinds(args) -> tuple[gen.Kind, gen.Kind, dict]:
    if args.kind == "nilpotent":
        if args.k is None:
            raise gen.BadSpec("--k is required for nilpotent instances")
        k1 = args.k
        k2 = args.k2 if args.k2 is not None else k1
        return (gen.Nilpotent(k1), gen.Nilpotent(k2),
                {"index": max(k1, k2), "component_indices": [k1, k2]})
    if args.kind == "idempotent":
        if args.r is None:
            raise gen.BadSpec("--r is required for idempotent instances")
        r1 = args.r
        r2 = args.r2 if args.r2 is not None else r1
        return gen.Idempotent(r1), gen.Idempotent(r2), {"rank": [r1, r2]}
    if args.kind == "invertible":
        return gen.Invertible(), gen.Invertible(), {}
    return gen.Arbitrary(), gen.Arbitrary(), {"entry_bound": args.entry_bound}


def generate_instance(args, index: int) -> tuple[mx.BicomplexMatrix, dict]:
    kind1, kind2, certificate = _component_kinds(args)
    inst_seed = gen.derive_seed(args.seed, index)
    comps = [gen.generate(gen.GenSpec(gen.derive_seed(inst_seed, side), args.n, kind,
                                      entry_bound=args.entry_bound))
             for side, kind in ((0, kind1), (1, kind2))]
    a = mx.compose(comps[0].matrix, comps[1].matrix)
    if args.kind == "invertible":
        certificate = {"det": [comps[0].certificate["det"], comps[1].certificate["det"]]}
    metadata = {
        "rng": gen.RNG_ALGORITHM,
        "seed": args.seed,
        "instance": index,
        "kind": args.kind,
        "n": args.n,
        "entry_bound": args.entry_bound,
        "certificate": certificate,
    }
    return a, metadata


def cmd_generate(args: argparse.Namespace) -> int:
    if args.count < 1:
        _err("--count must be positive")
        return EXIT_CONTRACT
    out_dir = Path(args.out_dir)
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        for i in range(args.count):
            a, metadata = generate_instance(args, i)
            value = ff.to_dict(a, encoding=args.encoding, metadata=metadata)
            if args.operator:
                value["kind"] = "operator"
            path = out_dir / f"{args.kind}-n{args.n}-seed{args.seed}-{i:03d}.json"
            path.write_text(json.dumps(value, indent=2) + "\n")
            cert = " ".join(f"{k}={v}" for k, v in metadata["certificate"].items())
            print(f"{path}: kind={args.kind} n={args.n} {cert}".rstrip())
    except gen.BadSpec as exc:
        _err(str(exc))
        return EXIT_CONTRACT
    except OSError as exc:
        _err(str(exc))
        return EXIT_PARSE
    return EXIT_OK


# -- verify -------------------------------------------------------------------------

def _write_counterexample(out_dir: Path, failure: vf.Failure, seed: int) -> Optional[Path]:
    if failure.witness is None:
        return None
    out_dir.mkdir(parents=True, exist_ok=True)
    path = out_dir / f"counterexample-{failure.check}-{failure.instance:04d}.json"
    metadata = {
        "rng": gen.RNG_ALGORITHM,
        "seed": seed,
        "check": failure.check,
        "instance": failure.instance,
        "instance_seed": failure.seed,
        "identity": failure.identity,
        "detail": failure.detail,
        "certificate": failure.certificate,
    }
    ff.save(path, failure.witness, metadata=metadata)
    return path


def _verify_files(paths: Sequence[str], fmt: str) -> int:
    status = EXIT_OK
    records = []
    for p in paths:
        try:
            doc = ff.load(p)
        except (OSError, ff.ParseError) as exc:
            _err(f"{p}: {exc}")
            return EXIT_PARSE
        if doc.kind == "basis":
            _err(f"{p}: basis documents carry no checkable instance")
            return EXIT_CONTRACT
        failures = vf.check_instance(doc.matrix, doc.metadata.get("certificate"))
        check_name = doc.metadata.get("check")
        if check_name and "instance_seed" in doc.metadata:
            # replay the harness check that produced this counterexample
            check = next((c for c in vf.CHECKS if c.name == check_name), None)
            if check is not None:
                try:
                    check.run(doc.metadata["instance_seed"])
                except vf.Counterexample as exc:
                    failures.append(f"{check_name}: {exc}")
        if failures:
            status = EXIT_COUNTEREXAMPLE
        records.append({"file": str(p), "passed": not failures, "failures": failures})
    if fmt == "structured":
        sys.stdout.write(json.dumps({"report": "bicomplex-instance-check", "version": 1,
                                     "files": records}, indent=2) + "\n")
    else:
        for rec in records:
            print(f"{'PASS' if rec['passed'] else 'FAIL'} {rec['file']}")
            for identity in rec["failures"]:
                print(f"  failing identity: {identity}")
    return status


def cmd_verify(args: argparse.Namespace) -> int:
    if args.instance:
        return _verify_files(args.instance, args.format)
    try:
        checks = vf.select(args.suite)
    except ValueError as exc:
        _err(str(exc))
        return EXIT_CONTRACT
    if args.instances < 1:
        _err("--instances must be positive")
        return EXIT_CONTRACT
    results = vf.run_checks(checks, args.instances, args.seed, jobs=args.jobs)
    out_dir = Path(args.out_dir)
    records = []
    for res in results:
        fails = []
        for f in res.failures:
            path = _write_counterexample(out_dir, f, args.seed)
            fails.append({"instance": f.instance, "identity": f.identity, "detail": f.detail,
                          "file": str(path) if path else None})
        records.append({"check": res.check, "suite": res.suite, "instances": res.instances,
                        "passed": res.passed, "failures": fails})
    ok = all(r["passed"] for r in records)
    if args.format == "structured":
        doc = {"report": "bicomplex-verification", "version": 1, "suite": args.suite,
               "seed": args.seed, "instances": args.instances, "rng": gen.RNG_ALGORITHM,
               "passed": ok, "checks": records}
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")
    else:
        for r in records:
            print(f"{'PASS' if r['passed'] else 'FAIL'} {r['check']} ({r['instances']} instances)")
            for f in r["failures"]:
                print(f"  instance {f['instance']}: {f['identity']} {f['detail']}".rstrip())
                if f["file"]:
                    print(f"  counterexample written to {f['file']}")
        print(f"{'all checks passed' if ok else 'counterexamples found'} "
              f"(suite={args.suite}, seed={args.seed})")
    return EXIT_OK if ok else EXIT_COUNTEREXAMPLE


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bicomplex", description="Exact bicomplex linear algebra")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="report predicates of a matrix or operator file")
    p.add_argument("path")
    p.add_argument("--mode", choices=("exact", "float"), default=None,
                   help=f"arithmetic mode (default: ${MODE_ENV} or exact)")
    p.add_argument("--tol", type=float, default=fm.DEFAULT_TOL, help="float-mode tolerance")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--check", action="append", choices=SQUARE_ONLY,
                   help="require a square-only predicate; rectangular input is then a contract violation")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("generate", help="write certified random instances")
    p.add_argument("--kind", required=True, choices=("nilpotent", "idempotent", "invertible", "arbitrary"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="nilpotency index of the minus component")
    p.add_argument("--k2", type=int, help="nilpotency index of the plus component (default: --k)")
    p.add_argument("--r", type=int, help="rank of the minus component")
    p.add_argument("--r2", type=int, help="rank of the plus component (default: --r)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--entry-bound", type=int, default=10)
    p.add_argument("--encoding", choices=ff.ENCODINGS, default="idempotent")
    p.add_argument("--operator", action="store_true", help="write kind=operator documents")
    p.add_argument("--out-dir", default=".")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify", help="check the theorems on seeded instances")
    p.add_argument("--suite", default="all", choices=("all",) + vf.SUITES)
    p.add_argument("--instances", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--out-dir", default="counterexamples",
                   help="directory for serialized counterexamples")
    p.add_argument("--instance", action="append",
                   help="re-verify a stored instance or counterexample file instead of generating")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
