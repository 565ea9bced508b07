"""Command line entry point.

Exit codes: 0 success (including equivalent or distinguished pairs),
1 negative result, 2 bad usage or invalid input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from pathlib import Path

from . import pinned, report
from .cover import cover_lift
from .diagram import validate
from .errors import DiagramError, ParseError, SpunLinkError
from .fileformat import parse, serialize
from .invariants import alinking_equivalent, descriptor, weak_alinking_equivalent
from .obstruction import SCAN_DEGREES, is_prime_power, obstruct, scan

EXIT_OK, EXIT_NEGATIVE, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class _Fail(Exception):
    def __init__(self, code, message):
        super().__init__(message)
        self.code = code


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _Fail(EXIT_IO, f"{path}: {exc.strerror or exc}")
    try:
        diagram, lines = parse(text)
    except ParseError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: parse error: {exc}")
    try:
        validate(diagram)
    except DiagramError as exc:
        if exc.index is not None and exc.index < len(lines):
            where = f"line {lines[exc.index]}"
        else:
            where = "end of file"
        raise _Fail(EXIT_USAGE, f"{path}: {where}: {type(exc).__name__}: {exc}")
    except ValueError as exc:
        raise _Fail(EXIT_USAGE, f"{path}: {exc}")
    return diagram


def _summary(diagram):
    comps = validate(diagram).components
    circles = sum(1 for c in comps if c.kind == "circle")
    arcs = len(comps) - circles
    noun = "component" if len(comps) == 1 else "components"
    return f"{len(comps)} {noun}: {circles} circle{'s' * (circles != 1)}, {arcs} arc{'s' * (arcs != 1)}"


def cmd_validate(args, out):
    diagram = _load(args.file)
    out.write(_summary(diagram) + "\n")
    return EXIT_OK


def cmd_invariants(args, out):
    doc = report.invariants_doc(_load(args.file))
    out.write(report.dumps(doc) if args.json else report.invariants_text(doc))
    return EXIT_OK


def cmd_cover(args, out):
    diagram = _load(args.file)
    if not diagram.is_annular:
        raise _Fail(EXIT_USAGE, f"{args.file}: covers need an annular diagram")
    if args.p < 1:
        raise _Fail(EXIT_USAGE, f"cover degree must be >= 1, got {args.p}")
    lifted, prov = cover_lift(diagram, args.p, args.keep_branch)
    doc = report.provenance_doc(prov)
    prov_text = report.dumps(doc) if args.json else report.provenance_text(doc)
    if args.output:
        try:
            Path(args.output).write_text(serialize(lifted))
        except OSError as exc:
            raise _Fail(EXIT_IO, f"{args.output}: {exc.strerror or exc}")
        out.write(prov_text)
    else:
        out.write(serialize(lifted))
        out.write("".join(f"# {line}\n" for line in prov_text.splitlines()))
    return EXIT_OK


def _first_difference(d1, d2):
    if len(d1) != len(d2):
        return f"component counts differ: {len(d1)} vs {len(d2)}"
    for i in range(len(d1)):
        if d1.genera[i] != d2.genera[i]:
            return f"genus of component {i}: {d1.genera[i]} vs {d2.genera[i]}"
    for i in range(len(d1)):
        for j in range(len(d1)):
            if i != j and d1.alk[i][j] != d2.alk[i][j]:
                return f"alk({i}, {j}): {d1.alk[i][j]} vs {d2.alk[i][j]}"
    return None


def cmd_compare(args, out):
    d1, d2 = descriptor(_load(args.file_a)), descriptor(_load(args.file_b))
    if args.weak:
        witness = weak_alinking_equivalent(d1, d2)
        if witness is None:
            v1 = sorted(Counter(v for row in d1.alk for v in row).items())
            v2 = sorted(Counter(v for row in d2.alk for v in row).items())
            out.write("NOT weakly alinking-equivalent: no genus-preserving permutation matches\n")
            out.write(f"alinking value counts: {v1} vs {v2}\n")
            return EXIT_NEGATIVE
    else:
        if not alinking_equivalent(d1, d2):
            out.write(f"NOT alinking-equivalent: {_first_difference(d1, d2)}\n")
            return EXIT_NEGATIVE
        witness = tuple(range(len(d1)))
    kind = "weakly alinking-equivalent" if args.weak else "alinking-equivalent"
    out.write(f"{kind}; witness {list(witness)}\n")
    for i, k in enumerate(witness):
        out.write(f"  {d1.labels[i]} -> {d2.labels[k]}\n")
    return EXIT_OK


def cmd_obstruct(args, out):
    a, b = _load(args.file_a), _load(args.file_b)
    for path, d in ((args.file_a, a), (args.file_b, b)):
        if not d.is_annular:
            raise _Fail(EXIT_USAGE, f"{path}: the obstruction needs annular diagrams")
    if args.scan:
        verdict = scan(a, b)
    else:
        if not is_prime_power(args.p):
            raise _Fail(EXIT_USAGE, f"p={args.p} is not a prime power; the cover argument needs p = q^e")
        verdict = obstruct(a, b, args.p)
    out.write(verdict.summary() + "\n")
    if verdict.cover_A is not None:
        for name, desc in (("A", verdict.cover_A), ("B", verdict.cover_B)):
            rows = report.matrix_rows(desc.alk, len(desc))
            out.write(f"\ncover of {name}\n{report.format_matrix(desc.labels, rows)}\n")
    if verdict.witness is not None:
        out.write(f"\nwitness {list(verdict.witness)}\n")
    if not verdict.distinguished and args.scan:
        out.write(f"tried p in {list(SCAN_DEGREES)}; larger prime powers may still succeed\n")
    return EXIT_OK if verdict.distinguished else EXIT_NEGATIVE


def cmd_paper(args, out):
    checks = pinned.run(args.case)
    width = max(len(c.name) for c in checks)
    failed = None
    for c in checks:
        mark = "ok  " if c.ok else "FAIL"
        out.write(f"{mark} [{c.case}] {c.name.ljust(width)}  expected {c.expected!r}  computed {c.computed!r}\n")
        if not c.ok and failed is None:
            failed = c
    if failed is not None:
        out.write(f"first failure: [{failed.case}] {failed.name}\n")
        return EXIT_NEGATIVE
    out.write(f"all {len(checks)} checks hold\n")
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="spunlink", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a diagram file and summarize its components")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("invariants", help="genera, linking and alinking matrices")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("cover", help="p-fold covering-link along the branch")
    p.add_argument("file")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--keep-branch", action="store_true")
    p.add_argument("-o", "--output")
    p.add_argument("--json", action="store_true", help="provenance as JSON")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("compare", help="(weak) alinking-equivalence of two diagrams")
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--weak", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("obstruct", help="non-cobordance test via covering-links")
    p.add_argument("file_a")
    p.add_argument("file_b")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("-p", type=int)
    g.add_argument("--scan", action="store_true", help=f"try p in {list(SCAN_DEGREES)}")
    p.set_defaults(func=cmd_obstruct)

    p = sub.add_parser("paper", help="rerun the pinned example checks")
    p.add_argument("--case", choices=("fig6.2", "family", "main", "all"), default="all")
    p.set_defaults(func=cmd_paper)
    return ap


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except _Fail as exc:
        sys.stderr.write(f"spunlink: {exc}\n")
        return exc.code
    except SpunLinkError as exc:
        sys.stderr.write(f"spunlink: {type(exc).__name__}: {exc}\n")
        return EXIT_USAGE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
