"""Command-line front end.

Every subcommand reads one JSON instance (a file path, or ``-`` for stdin) and
writes one JSON document carrying a ``schema`` field.  ``--pretty`` switches to
human-readable text.

Exit codes: 0 success, 1 a law failed (``check``), 2 unreadable or invalid input,
3 instance above the size cap.
"""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Any

from . import fock, graphs, laws, setcomp, topology
from .errors import CapacityError, DomainError
from .lincomb import LinComb, as_fraction, format_fraction

SCHEMA = "twistbialg/1"
MAX_VERTICES = 7

EXIT_OK, EXIT_LAW_FAILED, EXIT_INPUT, EXIT_CAPACITY = 0, 1, 2, 3

KINDS = ("graph", "quasiposet", "setcomp")


@dataclass(frozen=True)
class Instance:
    kind: str
    value: Any


def _check_labels(groups: list, what: str) -> None:
    seen = set()
    kinds = set()
    for g in groups:
        if not isinstance(g, list):
            raise DomainError(f"each {what} must be a list of labels")
        inside = set()
        for lab in g:
            if isinstance(lab, bool) or not isinstance(lab, (int, str)):
                raise DomainError(f"label {lab!r} is neither an integer nor a string")
            if lab in inside:
                raise DomainError(f"duplicate label {lab!r} inside {what} {g}")
            if lab in seen:
                raise DomainError(f"overlapping {what}s: label {lab!r} appears in more than one")
            inside.add(lab)
            kinds.add(type(lab))
        seen |= inside
    if len(kinds) > 1:
        raise DomainError("labels must be all integers or all strings")


def parse_instance(data: bytes | str) -> Instance:
    """Decode and validate one instance document."""
    try:
        doc = json.loads(data)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise DomainError(f"not valid JSON: {exc}") from None
    kind = None
    if isinstance(doc, dict) and "kind" in doc:
        kind = doc["kind"]
        if kind not in KINDS:
            raise DomainError(f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
        if kind == "setcomp":
            doc = doc.get("blocks", doc.get("composition"))
    elif isinstance(doc, list):
        kind = "setcomp"
    elif isinstance(doc, dict) and ("blocks" in doc or "edges" in doc):
        kind = "graph"
    elif isinstance(doc, dict) and ("classes" in doc or "covers" in doc):
        kind = "quasiposet"
    else:
        raise DomainError('cannot tell the instance kind; add "kind" or use blocks/edges, classes/covers, or a list')

    if kind == "graph":
        _check_labels(doc.get("blocks", []), "block")
        return Instance(kind, graphs.from_json(doc))
    if kind == "quasiposet":
        _check_labels(doc.get("classes", []), "class")
        return Instance(kind, topology.from_json(doc))
    if not isinstance(doc, list):
        raise DomainError("a set composition is a list of label lists")
    _check_labels(doc, "block")
    return Instance(kind, setcomp.from_json(doc))


def _size(inst: Instance) -> int:
    if inst.kind == "graph":
        return graphs.deg(inst.value)
    if inst.kind == "quasiposet":
        return topology.cl(inst.value)
    return len(inst.value)


def _require(inst: Instance, *kinds: str) -> None:
    if inst.kind not in kinds:
        raise DomainError(f"this command needs a {' or '.join(kinds)}, got a {inst.kind}")
    if _size(inst) > MAX_VERTICES:
        raise CapacityError(f"instance has {_size(inst)} vertices; the command-line cap is {MAX_VERTICES}")


# -- encoders ------------------------------------------------------------

def encode(obj: Any) -> Any:
    if isinstance(obj, graphs.BlockGraph):
        return graphs.to_json(obj)
    if isinstance(obj, topology.QuasiPoset):
        return topology.to_json(obj)
    if isinstance(obj, tuple) and all(isinstance(b, tuple) for b in obj):
        # a set composition, or a tensor of instances
        if obj and all(isinstance(b, (graphs.BlockGraph, topology.QuasiPoset)) or _is_comp(b) for b in obj) \
                and not _is_comp(obj):
            return [encode(b) for b in obj]
        return setcomp.to_json(obj)
    if isinstance(obj, tuple):
        return list(obj)
    return obj


def _is_comp(obj: Any) -> bool:
    return isinstance(obj, tuple) and all(
        isinstance(b, tuple) and b and all(not isinstance(x, tuple) for x in b) for b in obj
    )


def _render_key(obj: Any) -> str:
    if isinstance(obj, graphs.BlockGraph):
        return "[" + graphs.render(obj) + "]"
    if isinstance(obj, topology.QuasiPoset):
        return "[" + topology.render(obj) + "]"
    if _is_comp(obj):
        return setcomp.render(obj)
    if isinstance(obj, tuple) and obj and all(isinstance(x, int) for x in obj):
        return "(" + "".join(map(str, obj)) + ")" if max(obj) < 10 else str(obj)
    if isinstance(obj, tuple):
        return " ⊗ ".join(_render_key(b) for b in obj)
    return str(obj)


def render_lincomb(x: LinComb) -> str:
    if not x:
        return "0"
    parts = []
    for k, c in x.items():
        c = Fraction(c)
        mag = abs(c)
        coef = "" if mag == 1 else f"{mag} "
        parts.append(("-" if c < 0 else "+", coef + _render_key(k)))
    text = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


# -- commands ------------------------------------------------------------

def _q(args) -> Fraction:
    return as_fraction(args.q)


def _phi(inst: Instance, q: Fraction) -> LinComb:
    if inst.kind == "graph":
        return graphs.phi_chr_q(inst.value, q)
    if inst.kind == "quasiposet":
        return topology.phi_ehr_q(inst.value, q)
    return LinComb.basis(inst.value)


def cmd_polynomial(args, inst: Instance) -> tuple[dict, str]:
    if args.command == "chromatic":
        _require(inst, "graph")
        p = fock.chromatic_polynomial(inst.value, _q(args))
    else:
        _require(inst, "quasiposet")
        p = fock.ehrhart_polynomial(inst.value, _q(args))
    doc = {"q": format_fraction(_q(args)), "polynomial": p.to_json()}
    return doc, fock.render_poly(p)


def cmd_phi(args, inst: Instance) -> tuple[dict, str]:
    _require(inst, "graph" if args.which == "chr" else "quasiposet")
    x = _phi(inst, _q(args))
    return {"morphism": f"phi_{args.which}", "q": format_fraction(_q(args)),
            "result": x.to_json(encode)}, render_lincomb(x)


def cmd_fock(args, inst: Instance) -> tuple[dict, str]:
    _require(inst, *KINDS)
    x = _phi(inst, _q(args))
    if args.command == "qsym":
        img = fock.khat_image(x)
    else:
        img = fock.k_image(x)
    return {"q": format_fraction(_q(args)), "result": img.to_json(list)}, render_lincomb(img)


def cmd_delta(args, inst: Instance) -> tuple[dict, str]:
    _require(inst, *KINDS)
    fn = {"graph": graphs.internal_delta, "quasiposet": topology.internal_delta,
          "setcomp": setcomp.internal_delta}[inst.kind]
    x = fn(inst.value)
    return {"result": x.to_json(lambda k: [encode(k[0]), encode(k[1])])}, render_lincomb(x)


def cmd_gamma(args, inst: Instance) -> tuple[dict, str]:
    _require(inst, "graph", "quasiposet")
    mod = graphs if inst.kind == "graph" else topology
    x = (mod.gamma_inv if args.inverse else mod.gamma)(inst.value)
    return {"inverse": args.inverse, "result": x.to_json(encode)}, render_lincomb(x)


def cmd_check(args) -> tuple[dict, str, int]:
    if args.max_size < 0:
        raise DomainError("--max-size must be nonnegative")
    if args.max_size > 5:
        raise CapacityError("check is exhaustive; --max-size above 5 is out of reach")
    start = time.perf_counter()
    select = (lambda s: args.only.lower() in s.lower()) if args.only else (lambda s: True)
    results = laws.run_all(args.max_size, select)
    ok = all(r.passed for r in results)
    doc = {
        "max_size": args.max_size,
        "passed": ok,
        "laws": [
            {"name": r.name, "passed": r.passed, "instances": r.checked, "elapsed": round(r.elapsed, 3),
             **({"counterexample": r.counterexample} if r.counterexample is not None else {}),
             **({"error": r.error} if r.error else {})}
            for r in results
        ],
        "elapsed": round(time.perf_counter() - start, 3),
    }
    lines = []
    for r in results:
        line = f"{'PASS' if r.passed else 'FAIL'}  {r.name}  ({r.checked} cases, {r.elapsed:.2f}s)"
        if r.counterexample is not None:
            line += f"\n      counterexample: {json.dumps(r.counterexample, ensure_ascii=False)}"
        if r.error:
            line += f"\n      error: {r.error}"
        lines.append(line)
    lines.append(f"{sum(r.passed for r in results)}/{len(results)} laws pass")
    return doc, "\n".join(lines), EXIT_OK if ok else EXIT_LAW_FAILED


# -- argument parsing ----------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    # --pretty is accepted before or after the subcommand; the subcommand copy must not
    # reset a flag given at top level, hence SUPPRESS there.
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", default=argparse.SUPPRESS,
                        help="human-readable output instead of JSON")

    def with_file(p):
        p.add_argument("file", help="instance file (JSON), or - for stdin")
        return p

    def with_q(p):
        p.add_argument("--q", default="1", help='rational parameter, "p/q" or integer (default 1)')
        return p

    parser = argparse.ArgumentParser(prog="twistbialg", description="Exact computations in Comp, Gr' and Top.")
    parser.add_argument("--pretty", action="store_true", help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)
    with_q(with_file(sub.add_parser("chromatic", parents=[common], help="chromatic polynomial P_chr_q")))
    with_q(with_file(sub.add_parser("ehrhart", parents=[common], help="Ehrhart polynomial P_ehr_q")))
    p = sub.add_parser("phi", parents=[common], help="phi_chr_q / phi_ehr_q as a combination of set compositions")
    p.add_argument("which", choices=("chr", "ehr"))
    with_q(with_file(p))
    with_q(with_file(sub.add_parser("qsym", parents=[common], help="bosonic Fock image (integer compositions)")))
    with_q(with_file(sub.add_parser("wqsym", parents=[common], help="full Fock image (packed words)")))
    with_file(sub.add_parser("delta", parents=[common], help="internal coproduct"))
    p = with_file(sub.add_parser("gamma", parents=[common], help="the Gamma automorphism"))
    p.add_argument("--inverse", action="store_true", help="apply the inverse automorphism")
    p = sub.add_parser("check", parents=[common], help="run the exhaustive law suite")
    p.add_argument("--max-size", type=int, default=4, help="largest ground set checked (default 4)")
    p.add_argument("--only", default="", help="run only laws whose name contains this text")
    return parser


def _read(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


COMMANDS = {
    "chromatic": cmd_polynomial,
    "ehrhart": cmd_polynomial,
    "phi": cmd_phi,
    "qsym": cmd_fock,
    "wqsym": cmd_fock,
    "delta": cmd_delta,
    "gamma": cmd_gamma,
}


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        if args.command == "check":
            doc, text, status = cmd_check(args)
        else:
            inst = parse_instance(_read(args.file))
            doc, text = COMMANDS[args.command](args, inst)
            doc = {"instance": {"kind": inst.kind, "value": encode(inst.value)}, **doc}
            status = EXIT_OK
    except CapacityError as exc:
        print(f"twistbialg: capacity exceeded: {exc}", file=err)
        return EXIT_CAPACITY
    except (DomainError, OSError, ValueError, ZeroDivisionError, TypeError) as exc:
        print(f"twistbialg: invalid input: {exc}", file=err)
        return EXIT_INPUT
    if args.pretty:
        print(text, file=out)
    else:
        print(json.dumps({"schema": SCHEMA, "command": args.command, **doc}, ensure_ascii=False, sort_keys=False), file=out)
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
