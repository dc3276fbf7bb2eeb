"""Command-line front end.

Exit status: 0 when the checked property holds (or the input is valid),
1 when it fails, 2 on malformed input or bad usage.
"""

from __future__ import annotations

import argparse
import dataclasses
import hashlib
import json
import sys
import time
from typing import Any, Callable, Sequence

from archcat import archimedean, arrow, semigroup, thin
from archcat.core import CategoryError, Decision, FiniteCategory, validate_category
from archcat.formats import FormatError, load

EXIT_HOLDS, EXIT_FAILS, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    """Input file is readable but unusable for the requested command."""


@dataclasses.dataclass
class Outcome:
    status: int
    result: Any
    lines: list[str]
    digest: str | None = None


def _jsonable(value: Any) -> Any:
    if isinstance(value, arrow.Square):
        return {"name": value.name, **dataclasses.asdict(value)}
    if dataclasses.is_dataclass(value) and not isinstance(value, type):
        return {f.name: _jsonable(getattr(value, f.name)) for f in dataclasses.fields(value)}
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _digest(raw: bytes) -> str:
    return "sha256:" + hashlib.sha256(raw).hexdigest()


def _load(path: str):
    kind, structure, raw = load(path)
    return kind, structure, _digest(raw)


def _category(path: str) -> tuple[FiniteCategory, str]:
    kind, structure, digest = _load(path)
    if kind == "semigroup":
        raise InputError("expected a category or preorder file, got a semigroup")
    if kind == "preorder":
        problems = thin.validate_preorder(structure)
        if problems:
            raise InputError(f"invalid preorder: {problems[0]}")
        return thin.to_category(structure), digest
    problems = validate_category(structure)
    if problems:
        raise InputError(f"invalid category: {problems[0]}")
    return structure, digest


def _violations(vs) -> list[dict]:
    return [{"kind": v.kind, "names": list(v.names), "message": v.message} for v in vs]


def _decision_lines(label: str, d: Decision) -> list[str]:
    lines = [f"{label}: {'holds' if d.holds else 'fails'}"]
    if d.witness is not None:
        lines.append(f"witness: {_show(d.witness)}")
    if d.counterexample is not None:
        lines.append(f"counterexample: {_show(d.counterexample)}")
    stats = getattr(d, "stats", None)
    if stats:
        lines.append("stats: " + ", ".join(f"{k}={v}" for k, v in stats.items()))
    return lines


def _show(value: Any) -> str:
    if isinstance(value, (list, tuple)):
        return ", ".join(_show(v) for v in value)
    return str(value)


def _decided(label: str, d: Decision, digest: str | None = None) -> Outcome:
    return Outcome(
        EXIT_HOLDS if d.holds else EXIT_FAILS, _jsonable(d), _decision_lines(label, d), digest
    )


# subcommand handlers


def cmd_validate(args) -> Outcome:
    kind, structure, digest = _load(args.file)
    if kind == "category":
        vs = validate_category(structure)
    elif kind == "preorder":
        vs = thin.validate_preorder(structure)
    else:
        vs = semigroup.validate_semigroup(structure)
    lines = [f"{kind}: {'valid' if not vs else f'{len(vs)} violation(s)'}"]
    lines += [f"  {v}" for v in vs]
    result = {"kind": kind, "valid": not vs, "violations": _violations(vs)}
    return Outcome(EXIT_FAILS if vs else EXIT_HOLDS, result, lines, digest)


def cmd_arrow(args) -> Outcome:
    c, digest = _category(args.file)
    ac = arrow.build_arrow_category(c)
    valid = not validate_category(ac.derived)
    lines = [
        f"objects: {len(ac.derived.objects)}",
        f"squares: {len(ac.squares)}",
        f"arrow category valid: {'yes' if valid else 'no'}",
    ]
    lines += [f"  {s.name}" for s in ac.squares.values()]
    result = {
        "objects": list(ac.derived.objects),
        "squares": [_jsonable(s) for s in ac.squares.values()],
        "valid": valid,
    }
    return Outcome(EXIT_HOLDS if valid else EXIT_FAILS, result, lines, digest)


def cmd_unit_equiv(args) -> Outcome:
    c, digest = _category(args.file)
    return _decided(
        f"{args.f} ~ {args.g}", arrow.is_unitary_equivalent(c, args.f, args.g), digest
    )


def cmd_submorphism(args) -> Outcome:
    c, digest = _category(args.file)
    return _decided(
        f"{args.f} submorphism of {args.g}", arrow.is_submorphism(c, args.f, args.g), digest
    )


def cmd_nv(args) -> Outcome:
    c, digest = _category(args.file)
    closure = archimedean.nv_closure(c, args.v)
    lines = [
        f"unit: {closure.unit}",
        f"generators: {_show(closure.generators)}",
        f"members: {_show(closure.members)}",
    ]
    return Outcome(EXIT_HOLDS, _jsonable(closure), lines, digest)


def cmd_bounded(args) -> Outcome:
    c, digest = _category(args.file)
    ms = args.m if args.m else c.names
    return _decided("bounded", archimedean.is_bounded_class(c, ms), digest)


def cmd_arch1(args) -> Outcome:
    c, digest = _category(args.file)
    return _decided("arch1", archimedean.is_archimedean_composition(c), digest)


def cmd_arch2(args) -> Outcome:
    c, digest = _category(args.file)
    return _decided("arch2", archimedean.is_archimedean_bounded(c), digest)


def cmd_preorder(args) -> Outcome:
    kind, p, digest = _load(args.file)
    if kind != "preorder":
        raise InputError(f"expected a preorder file, got a {kind}")
    if args.close:
        p = thin.close(p)
    problems = thin.validate_preorder(p)
    if args.check == "validate":
        lines = ["preorder: valid" if not problems else f"{len(problems)} violation(s)"]
        lines += [f"  {v}" for v in problems]
        result = {"kind": "preorder", "valid": not problems, "violations": _violations(problems)}
        return Outcome(EXIT_FAILS if problems else EXIT_HOLDS, result, lines, digest)
    if problems:
        raise InputError(f"invalid preorder: {problems[0]}")
    if args.check == "classes":
        classes = thin.equiv_classes(p)
        lines = [f"{x} ~ {r}" for x, r in classes.items()]
        return Outcome(EXIT_HOLDS, {"classes": classes}, lines, digest)
    if args.check == "bounded":
        return _decided("bounded", thin.is_bounded_preorder(p), digest)
    if args.check == "discrete":
        return _decided("discrete", Decision(thin.is_discrete(p)), digest)
    c = thin.to_category(p)
    if args.check == "arch1":
        return _decided("arch1", archimedean.is_archimedean_composition(c), digest)
    return _decided("arch2", archimedean.is_archimedean_bounded(c), digest)


def cmd_semigroup(args) -> Outcome:
    kind, s, digest = _load(args.file)
    if kind != "semigroup":
        raise InputError(f"expected a semigroup file, got a {kind}")
    problems = semigroup.validate_semigroup(s, monotone=args.monotone)
    if args.check == "validate":
        lines = ["semigroup: valid" if not problems else f"{len(problems)} violation(s)"]
        lines += [f"  {v}" for v in problems]
        result = {"kind": "semigroup", "valid": not problems, "violations": _violations(problems)}
        return Outcome(EXIT_FAILS if problems else EXIT_HOLDS, result, lines, digest)
    if problems:
        raise InputError(f"invalid semigroup: {problems[0]}")
    if args.check == "positives":
        pos = semigroup.positives(s)
        return Outcome(EXIT_HOLDS, {"positives": list(pos)}, [f"positives: {_show(pos)}"], digest)
    if args.check == "multiples":
        if args.x is None:
            raise InputError("multiples needs -x <element>")
        ms = semigroup.multiples(s, args.x)
        line = f"multiples of {ms.base}: {_show(ms.members)}"
        return Outcome(EXIT_HOLDS, _jsonable(ms), [line], digest)
    if args.check == "unit":
        return _decided("unit", semigroup.archimedean_unit(s), digest)
    if args.check == "bounded-multiples":
        d = semigroup.archimedean_bounded_multiples(s, bound_in_E=args.bound_in_E)
        return _decided("bounded-multiples", d, digest)
    same = semigroup.check_13_14_equiv(s, bound_in_E=args.bound_in_E)
    return _decided("one-sided and two-sided forms agree", Decision(same), digest)


def cmd_verify(args) -> Outcome:
    if args.property == "prop1":
        report = thin.verify_prop1(args.size)
    elif args.property == "prop2":
        report = thin.verify_prop2(args.size)
    else:
        report = semigroup.verify_lemma1(args.size, bound_in_E=args.bound_in_E)
    lines = [f"{report.passed}/{report.checked} {'pass' if report.ok else 'FAIL'}"]
    lines += [f"{k}: {v}" for k, v in report.details.items()]
    if report.counterexample is not None:
        lines.append("counterexample: " + json.dumps(report.counterexample, sort_keys=True))
    result = _jsonable(report)
    result["ok"] = report.ok
    return Outcome(EXIT_HOLDS if report.ok else EXIT_FAILS, result, lines)


def cmd_enumerate(args) -> Outcome:
    ps = [p.to_dict() for p in thin.enumerate_preorders(args.size)]
    lines = [f"{len(ps)} preorders on {args.size} elements"]
    lines += [json.dumps(p["pairs"]) for p in ps]
    return Outcome(EXIT_HOLDS, {"count": len(ps), "preorders": ps}, lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "machine"), default=argparse.SUPPRESS,
        help="text (default) or machine-readable JSON",
    )

    parser = argparse.ArgumentParser(
        prog="archcat", description="Archimedean conditions on finite categories."
    )
    parser.add_argument("--format", choices=("text", "machine"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, handler: Callable, help: str, file: bool = True):
        p = sub.add_parser(name, parents=[common], help=help)
        if file:
            p.add_argument("file")
        p.set_defaults(handler=handler, label=name)
        return p

    add("validate", cmd_validate, "check the laws of a category, preorder or semigroup")
    add("arrow", cmd_arrow, "build the arrow category")
    p = add("unit-equiv", cmd_unit_equiv, "are two morphisms unitary equivalent")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p = add("submorphism", cmd_submorphism, "is f a submorphism of g")
    p.add_argument("-f", required=True)
    p.add_argument("-g", required=True)
    p = add("nv", cmd_nv, "multiples of a unit morphism")
    p.add_argument("-v", required=True)
    p = add("bounded", cmd_bounded, "is a family of morphisms bounded (default: all)")
    p.add_argument("-m", action="append", default=[])
    add("arch1", cmd_arch1, "one unit's multiples dominate every morphism")
    add("arch2", cmd_arch2, "bounded multiples force an identity")

    p = add("preorder", cmd_preorder, "checks on a preorder file")
    p.add_argument(
        "--close", action="store_true", help="take the reflexive-transitive closure first"
    )
    p.add_argument(
        "check", choices=("validate", "classes", "bounded", "discrete", "arch1", "arch2")
    )

    p = add("semigroup", cmd_semigroup, "checks on an ordered semigroup file")
    p.add_argument("--monotone", action="store_true", help="also require + to be monotone")
    p.add_argument("--bound-in-E", dest="bound_in_E", action="store_true",
                   help="search upper bounds among all elements")
    p.add_argument("-x", help="element for the multiples check")
    p.add_argument(
        "check",
        choices=("validate", "positives", "multiples", "unit", "bounded-multiples", "equiv"),
    )

    p = add("verify", cmd_verify, "exhaustive sweeps", file=False)
    p.add_argument("property", choices=("prop1", "prop2", "lemma1"))
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--bound-in-E", dest="bound_in_E", action="store_true")

    p = add("enumerate", cmd_enumerate, "list labeled preorders", file=False)
    p.add_argument("what", choices=("preorders",))
    p.add_argument("--size", type=int, required=True)
    return parser


def _command_name(args) -> str:
    for extra in ("property", "check", "what"):
        if hasattr(args, extra):
            return f"{args.label} {getattr(args, extra)}"
    return args.label


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_HOLDS

    start = time.perf_counter()
    try:
        outcome = args.handler(args)
    except FormatError as e:
        print(f"error: malformed input at {e}", file=err)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT
    except (InputError, CategoryError, thin.PreorderError, semigroup.SemigroupError) as e:
        print(f"error: {e}", file=err)
        return EXIT_INPUT
    elapsed = round((time.perf_counter() - start) * 1000, 3)

    if args.format == "machine":
        report = {
            "command": _command_name(args),
            "input_digest": outcome.digest,
            "result": outcome.result,
            "status": outcome.status,
            "elapsed_ms": elapsed,
        }
        out.write(json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n")
    else:
        for line in outcome.lines:
            print(line, file=out)
    return outcome.status


def main() -> None:
    sys.exit(run())
