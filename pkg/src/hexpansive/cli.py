"""Command-line front end.

Exit codes: 0 success, 2 domain-negative (not expansive, verification
failed), 1 input error, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import corpus
from .errors import HExpansiveError, NotExpansiveError, ParseError, PreconditionError, TheoremViolationError
from .generator import PlantSpec, plant
from .io import (
    PairDocument,
    decomposition_to_json,
    matrix_to_json,
    parse_matrix_document,
    parse_pair,
    report_to_json,
)
from .krein import HPair, classify, defect, unobservable_subspace
from .linalg import inverse
from .matrix import format_blocks
from .structure import (
    decompose,
    neutral_core,
    selfadjoint_decompose,
    unitary_compression,
    verify,
)
from .subspace import Subspace

EXIT_OK, EXIT_INPUT, EXIT_NEGATIVE, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError("unreadable-file", exc.strerror or str(exc), path) from None


def _write(path: str, payload: dict) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _int_list(text: str, count: int, what: str) -> tuple:
    try:
        vals = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"{what} must be {count} comma-separated integers") from None
    if len(vals) != count or any(v < 0 for v in vals):
        raise UsageError(f"{what} must be {count} comma-separated nonnegative integers")
    return vals


def _load_pair(path: str) -> HPair:
    doc = parse_pair(_read(path))
    return HPair(doc.A, doc.H)


def _emit_report(report, out) -> None:
    for c in report.checks:
        out.write(f"  {'PASS' if c.passed else 'FAIL'}  {c.name}\n")
        if c.witness is not None:
            for line in format_blocks(c.witness).splitlines():
                out.write(f"        {line}\n")
    out.write(f"  all checks pass: {report.all_pass}\n")


def _emit_decomposition(dec, out) -> None:
    a22, h22, unitary_part = unitary_compression(dec)
    out.write(f"dims (m, m1, m2, m3) = {dec.dims}\n")
    out.write("S =\n" + format_blocks(dec.S, [dec.S.rows], dec.dims) + "\n")
    out.write("S^-1 A S =\n" + format_blocks(dec.transformed_A, dec.dims) + "\n")
    out.write("S* H S =\n" + format_blocks(dec.transformed_H, dec.dims) + "\n")
    out.write("S* D S =\n" + format_blocks(dec.transformed_D, dec.dims) + "\n")
    out.write("unitary compression A22 =\n" + format_blocks(a22) + "\n")
    out.write("H22 =\n" + format_blocks(h22) + "\n")
    out.write(f"unitary part (A12 = 0): {unitary_part}\n")
    out.write("verification:\n")
    _emit_report(dec.report, out)


# ---------------------------------------------------------------------------
# subcommands


def cmd_check(args, out) -> int:
    p = _load_pair(args.pair)
    cls = classify(p)
    inertia = cls.defect_inertia.astuple()
    if args.json:
        out.write(json.dumps({
            "expansive": cls.expansive,
            "unitary": cls.unitary,
            "selfadjoint": cls.selfadjoint,
            "defect_inertia": {"pos": inertia[0], "neg": inertia[1], "zero": inertia[2]},
            "defect": matrix_to_json(defect(p)),
        }, indent=2) + "\n")
    else:
        out.write(f"n: {p.n}\n")
        out.write(f"expansive: {str(cls.expansive).lower()}\n")
        out.write(f"unitary: {str(cls.unitary).lower()}\n")
        out.write(f"selfadjoint: {str(cls.selfadjoint).lower()}\n")
        out.write(f"defect inertia (pos, neg, zero): {inertia}\n")
        out.write("defect A*HA - H =\n" + format_blocks(defect(p)) + "\n")
    return EXIT_OK if cls.expansive else EXIT_NEGATIVE


def cmd_decompose(args, out) -> int:
    p = _load_pair(args.pair)
    try:
        dec = decompose(p, complement_seed=args.randomize_complement)
    except NotExpansiveError as exc:
        out.write(f"not expansive: defect inertia (pos, neg, zero) = {exc.inertia.astuple()}\n")
        return EXIT_NEGATIVE
    except TheoremViolationError as exc:
        out.write(f"theorem violation: {exc}\n")
        _emit_report(exc.report, out)
        return EXIT_NEGATIVE
    payload = decomposition_to_json(dec)
    if args.out:
        _write(args.out, payload)
    if args.json:
        out.write(json.dumps(payload, indent=2) + "\n")
    else:
        _emit_decomposition(dec, out)
    return EXIT_OK if dec.report.all_pass else EXIT_NEGATIVE


def cmd_verify(args, out) -> int:
    dims = _int_list(args.dims, 4, "--dims")
    p = _load_pair(args.pair)
    s = parse_matrix_document(_read(args.transform), key="S")
    report = verify(p, s, dims)
    if args.json:
        out.write(json.dumps(report_to_json(report), indent=2) + "\n")
    else:
        out.write(f"dims (m, m1, m2, m3) = {dims}\n")
        _emit_report(report, out)
    return EXIT_OK if report.all_pass else EXIT_NEGATIVE


def cmd_generate(args, out) -> int:
    m, m1, m3 = _int_list(args.dims, 3, "--dims")
    if args.bound < 1:
        raise UsageError("--bound must be a positive integer")
    if not 0 <= args.seed < 2**64:
        raise UsageError("--seed must be an unsigned 64-bit integer")
    planted = plant(PlantSpec(m, m1, m3, entry_bound=args.bound, seed=args.seed, complex_entries=args.complex))
    doc = PairDocument(
        planted.pair.A,
        planted.pair.H,
        {
            "source": "generate",
            "seed": args.seed,
            "bound": args.bound,
            "dims": list(planted.dims),
            "S_true": matrix_to_json(planted.S_true),
        },
    )
    if args.out:
        _write(args.out, doc.to_json())
    else:
        out.write(json.dumps(doc.to_json(), indent=2) + "\n")
    return EXIT_OK


def cmd_selfadjoint(args, out) -> int:
    p = _load_pair(args.pair)
    basis = parse_matrix_document(_read(args.invariant), key="N")
    n_space = Subspace.span(basis, p.n)
    try:
        dec = selfadjoint_decompose(p, n_space)
    except PreconditionError as exc:
        out.write(f"precondition failed: {exc}\n")
        return EXIT_NEGATIVE
    except TheoremViolationError as exc:
        out.write(f"theorem violation: {exc}\n")
        _emit_report(exc.report, out)
        return EXIT_NEGATIVE
    if args.json:
        out.write(json.dumps({
            "dims": list(dec.dims),
            "S": matrix_to_json(dec.S),
            "blocks": {f"A{i}{j}": matrix_to_json(dec.A(i, j)) for i in range(1, 5) for j in range(1, 5)},
            "H22": matrix_to_json(dec.H22),
            "H44": matrix_to_json(dec.H44),
            "verification": report_to_json(dec.report),
        }, indent=2) + "\n")
    else:
        at = inverse(dec.S) @ p.A @ dec.S
        out.write(f"dims (m, m1, m2, m3) = {dec.dims}\n")
        out.write("S^-1 A S =\n" + format_blocks(at, dec.dims) + "\n")
        out.write("S* H S =\n" + format_blocks(dec.S.adjoint() @ p.H @ dec.S, dec.dims) + "\n")
        out.write("verification:\n")
        _emit_report(dec.report, out)
    return EXIT_OK if dec.report.all_pass else EXIT_NEGATIVE


def run_example(ex: corpus.ExampleRecord) -> list[tuple[str, bool, str]]:
    """Reproduce one worked example; rows are ``(check, passed, counts)``.

    Rows with ``counts == "info"`` are reported but do not affect the
    outcome; they cover statements that do not hold as printed.
    """
    p = ex.pair
    rows = []
    d = defect(p)
    rows.append(("defect", d == ex.defect, "yes"))
    cls = classify(p)
    rows.append(("expansive", cls.expansive, "yes"))
    if ex.unitary:
        rows.append(("unitary", cls.unitary, "yes"))
    n_space = unobservable_subspace(d, p.A)
    rows.append(("N", n_space == ex.N, "yes"))
    rows.append(("M", neutral_core(n_space, p.H) == ex.M, "yes"))
    try:
        dec = decompose(p)
    except HExpansiveError:
        rows.append(("decompose", False, "yes"))
        return rows
    rows.append(("dims", dec.dims == ex.dims, "yes"))
    rows.append(("verify(decomposition)", dec.report.all_pass, "yes"))
    a22, h22, unitary_part = unitary_compression(dec)
    if ex.A22 is not None:
        rows.append(("compression", a22 == ex.A22 and h22 == ex.H22, "yes"))
    if ex.is_unitary_part is not None:
        rows.append(("unitary part", unitary_part == ex.is_unitary_part, "yes"))
    if ex.S is not None:
        s_inv = inverse(ex.S)
        rows.append(("printed S^-1 A S", s_inv @ p.A @ ex.S == ex.S_inv_A_S, "yes"))
        rows.append(("printed S* H S", ex.S.adjoint() @ p.H @ ex.S == ex.S_star_H_S, "yes"))
        report = verify(p, ex.S, ex.dims)
        note = "yes" if report.all_pass else "info"
        failed = ",".join(c.name for c in report.failed())
        rows.append((f"verify(printed S){' fails: ' + failed if failed else ''}", report.all_pass, note))
    return rows


def cmd_examples(args, out) -> int:
    ids = [args.id] if args.id is not None else sorted(corpus.EXAMPLES)
    ok_all = True
    payload = []
    for k in ids:
        try:
            ex = corpus.get_example(k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rows = run_example(ex)
        ok = all(passed for _, passed, counts in rows if counts == "yes")
        ok_all &= ok
        dec = decompose(ex.pair) if ok else None
        if args.json:
            payload.append({
                "id": k,
                "pass": ok,
                "dims": list(dec.dims) if dec else None,
                "checks": [{"name": n, "pass": p, "counts": c == "yes"} for n, p, c in rows],
            })
            continue
        out.write(f"Example {k}: {'PASS' if ok else 'FAIL'}\n")
        for name, passed, counts in rows:
            tag = "PASS" if passed else ("note" if counts == "info" else "FAIL")
            out.write(f"  {tag:4}  {name}\n")
        if dec is not None:
            a22, h22, up = unitary_compression(dec)
            out.write(f"  dims (m, m1, m2, m3) = {dec.dims}\n")
            out.write("  compression A22 =\n" + _indent(format_blocks(a22)) + "\n")
            out.write("  compression H22 =\n" + _indent(format_blocks(h22)) + "\n")
    if args.json:
        out.write(json.dumps({"all_pass": ok_all, "examples": payload}, indent=2) + "\n")
    return EXIT_OK if ok_all else EXIT_NEGATIVE


def _indent(text: str, pad: str = "    ") -> str:
    return "\n".join(pad + line for line in text.splitlines())


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")

    parser = _Parser(prog="hexpansive", description="Structure of H-expansive matrices in exact arithmetic.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("check", parents=[common], help="classify a pair and print the defect inertia")
    p.add_argument("pair")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", parents=[common], help="compute the four-space decomposition")
    p.add_argument("pair")
    p.add_argument("--out")
    p.add_argument("--randomize-complement", type=int, metavar="SEED")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify", parents=[common], help="check a given transform against every identity")
    p.add_argument("pair")
    p.add_argument("--transform", required=True)
    p.add_argument("--dims", required=True, help="m,m1,m2,m3")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", parents=[common], help="emit a planted H-expansive pair")
    p.add_argument("--dims", required=True, help="m,m1,m3")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--bound", type=int, default=3)
    p.add_argument("--complex", action="store_true", help="complex entries")
    p.add_argument("--out")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("selfadjoint", parents=[common], help="block form of an H-selfadjoint matrix")
    p.add_argument("pair")
    p.add_argument("--invariant", required=True, help="matrix whose columns span N")
    p.set_defaults(func=cmd_selfadjoint)

    p = sub.add_parser("examples", parents=[common], help="run the worked examples")
    p.add_argument("--id", type=int)
    p.set_defaults(func=cmd_examples)
    return parser


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except ParseError as exc:
        sys.stderr.write(f"input error [{exc.code}]: {exc}\n")
        return EXIT_INPUT
    except HExpansiveError as exc:
        sys.stderr.write(f"input error [{exc.code}]: {exc}\n")
        return EXIT_INPUT


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
