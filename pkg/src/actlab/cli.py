"""Command line driver: ``actlab <command> ...``.

Exit codes: 0 success or true, 1 false or counterexample, 2 true only within
bounds or partial, 64 usage error, 65 bad input, 66 a size guard was hit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence, TextIO

from . import decomposition as dec
from . import harness
from . import injectivity as inj
from . import monoid as mon
from .act import FiniteAct, enumerate_acts, zeros
from .errors import ActlabError, EnvelopeNotFound, SizeGuardExceeded, UnknownClaim
from .fixtures import FIXTURES, fixture
from .homs import ExtensionProblem
from .monoid import FiniteMonoid
from .textio import Workspace, act_to_json, monoid_to_json, parse_act, parse_monoid, print_act, print_monoid

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_BOUNDED = 2
EXIT_USAGE = 64
EXIT_INPUT = 65
EXIT_GUARD = 66


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _load_monoid(ref: str) -> FiniteMonoid:
    """A path to a .mon file or the name of a built-in fixture."""
    path = Path(ref)
    if path.is_file():
        return parse_monoid(path.read_text(encoding="utf-8"))
    if ref in FIXTURES:
        return fixture(ref)
    raise UsageError(f"no monoid file or fixture named {ref!r} (fixtures: {', '.join(FIXTURES)})")


def _load_act(path: str, monoid_ref: Optional[str]) -> FiniteAct:
    text = Path(path).read_text(encoding="utf-8")
    ws = Workspace()
    if monoid_ref is not None:
        ws.add_monoid(_load_monoid(monoid_ref))
    else:
        for name in FIXTURES:
            ws.add_monoid(fixture(name))
    return parse_act(text, ws)


def _labels(A, xs) -> str:
    return " ".join(A.elems[x] for x in sorted(xs)) or "(none)"


def _problem_lines(p: ExtensionProblem) -> list[str]:
    d = p.describe()
    pairs = ", ".join(f"{k} -> {v}" for k, v in d["map"].items())
    return [
        f"  ambient: {d['ambient']} ({p.ambient.size} elements)",
        f"  subact:  {' '.join(d['sub'])}",
        f"  map:     {pairs}",
        "  no extension to the ambient exists",
    ]


def _emit_json(path: Optional[str], objects: Sequence[dict]) -> None:
    if path is None:
        return
    with open(path, "w", encoding="utf-8") as fh:
        for obj in objects:
            fh.write(json.dumps(obj, ensure_ascii=False) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_validate(args, out: TextIO) -> int:
    for path in args.files:
        text = Path(path).read_text(encoding="utf-8")
        first = next((ln.split("#", 1)[0].split() for ln in text.splitlines() if ln.split("#", 1)[0].strip()), [""])
        if first[0] == "monoid":
            S = parse_monoid(text)
            out.write(f"{path}: ok, monoid {S.name} with {S.size} elements\n")
        else:
            A = _load_act(path, args.monoid)
            out.write(f"{path}: ok, act {A.name} over {A.monoid.name} with {A.size} elements\n")
    return EXIT_OK


def _monoid_summary(S: FiniteMonoid) -> dict:
    return {
        "name": S.name,
        "size": S.size,
        "left_reversible": mon.is_left_reversible(S),
        "regular": mon.is_regular(S),
        "left_zeros": [S.elems[x] for x in sorted(mon.left_zeros(S))],
        "right_zeros": [S.elems[x] for x in sorted(mon.right_zeros(S))],
        "idempotents": [S.elems[x] for x in sorted(mon.idempotents(S))],
        "right_ideals": len(mon.all_right_ideals(S)),
        "right_congruences": len(mon.all_right_congruences(S)),
    }


def _act_summary(A: FiniteAct, bound: int) -> dict:
    d = dec.components(A)
    verdicts = {}
    for notion in inj.NOTIONS:
        verdicts[notion] = inj.check(notion, A, bound).value.value
    return {
        "name": A.name,
        "monoid": A.monoid.name,
        "size": A.size,
        "zeros": [A.elems[x] for x in sorted(zeros(A))],
        "components": [[A.elems[x] for x in p] for p in d.parts()],
        "injectivity": verdicts,
    }


def cmd_analyze(args, out: TextIO) -> int:
    if args.kind == "monoid":
        info = _monoid_summary(_load_monoid(args.file))
        out.write(f"monoid {info['name']} ({info['size']} elements)\n")
        out.write(("left reversible" if info["left_reversible"] else "not left reversible") + "\n")
        out.write(("regular" if info["regular"] else "not regular") + "\n")
        out.write(f"left zeros: {' '.join(info['left_zeros']) or '(none)'}\n")
        out.write(f"right zeros: {' '.join(info['right_zeros']) or '(none)'}\n")
        out.write(f"idempotents: {' '.join(info['idempotents'])}\n")
        out.write(f"{info['right_ideals']} right ideals\n")
        out.write(f"{info['right_congruences']} right congruences\n")
    else:
        A = _load_act(args.file, args.monoid)
        info = _act_summary(A, args.bound)
        out.write(f"act {A.name} over {A.monoid.name} ({A.size} elements)\n")
        out.write(f"zeros: {' '.join(info['zeros']) or '(none)'}\n")
        out.write(f"components: {len(info['components'])}\n")
        for notion, value in info["injectivity"].items():
            out.write(f"{notion}: {value}\n")
    _emit_json(args.out, [info])
    return EXIT_OK


def cmd_decompose(args, out: TextIO) -> int:
    A = _load_act(args.file, args.monoid)
    if args.dot:
        out.write(dec.to_dot(A))
        return EXIT_OK
    d = dec.components(A)
    out.write(f"{d.component_count} component(s)\n")
    for k, part in enumerate(d.parts()):
        out.write(f"  {k}: {_labels(A, part)}\n")
    _emit_json(args.out, [{"act": A.name, "components": [[A.elems[x] for x in p] for p in d.parts()]}])
    return EXIT_OK


def cmd_check(args, out: TextIO) -> int:
    A = _load_act(args.file, args.monoid)
    v = inj.check(args.notion, A, args.bound)
    out.write(f"{args.notion}: {v.value.value}" + (f" (acts up to size {v.bound})" if v.bound else "") + "\n")
    record = {"act": A.name, "notion": args.notion, "value": v.value.value, "bound": v.bound, "witness": None}
    if v.witness is not None:
        out.write("witness:\n" + "\n".join(_problem_lines(v.witness)) + "\n")
        record["witness"] = harness.problem_to_json(v.witness)
    _emit_json(args.out, [record])
    if v.value is inj.Truth.FALSE:
        return EXIT_FALSE
    return EXIT_BOUNDED if v.value is inj.Truth.BOUNDED else EXIT_OK


def cmd_enumerate(args, out: TextIO) -> int:
    if args.kind == "monoids":
        found = list(mon.enumerate_monoids(args.n))
        for S in found:
            out.write(print_monoid(S) + "\n")
        out.write(f"# {len(found)} monoid(s) of order {args.n}\n")
        _emit_json(args.out, [monoid_to_json(S) for S in found])
    else:
        if args.monoid is None:
            raise UsageError("enumerate acts needs --monoid")
        S = _load_monoid(args.monoid)
        found = list(enumerate_acts(S, args.n))
        for A in found:
            out.write(print_act(A) + "\n")
        out.write(f"# {len(found)} act(s) of size {args.n} over {S.name}\n")
        _emit_json(args.out, [act_to_json(A) for A in found])
    return EXIT_OK


def cmd_envelope(args, out: TextIO) -> int:
    A = _load_act(args.file, args.monoid)
    E, emb = inj.injective_envelope(A)
    out.write(print_act(E))
    out.write("embedding: " + ", ".join(f"{A.elems[a]} -> {E.elems[emb.map[a]]}" for a in A) + "\n")
    _emit_json(args.out, [{"envelope": act_to_json(E), "embedding": {A.elems[a]: E.elems[emb.map[a]] for a in A}}])
    return EXIT_OK


def _report_line(r: harness.Report) -> str:
    line = f"{r.claim:<4} {r.status:<24} instances={r.instances} skipped={r.skipped}"
    if r.witness is not None:
        line += f"  witness monoid {r.witness['monoid']['name']}: {r.witness.get('note', '')}"
    return line


def cmd_verify(args, out: TextIO) -> int:
    overrides = {"max_monoid": args.max_monoid, "max_act": args.max_act,
                 "codomain": args.codomain_bound, "alphabet": args.alphabet}
    if args.claim.lower() == "all":
        reports = harness.verify_all(jobs=args.jobs, **overrides)
    else:
        reports = [harness.verify(args.claim, **overrides)]
    for r in reports:
        out.write(_report_line(r) + "\n")
    _emit_json(args.out, [json.loads(r.to_json()) for r in reports])
    statuses = {r.status for r in reports}
    if harness.COUNTEREXAMPLE in statuses:
        return EXIT_FALSE
    if statuses & {harness.PARTIAL, harness.SKIPPED}:
        return EXIT_BOUNDED
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="actlab", description="Finite monoid acts: decomposition and injectivity.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_out(sp):
        sp.add_argument("--out", help="also write newline-delimited JSON to this file")
        return sp

    v = sub.add_parser("validate", help="parse and validate .mon/.act files")
    v.add_argument("files", nargs="+")
    v.add_argument("--monoid", help="monoid file or fixture name for act files")
    v.set_defaults(func=cmd_validate)

    a = with_out(sub.add_parser("analyze", help="summarise a monoid or an act"))
    a.add_argument("kind", choices=["monoid", "act"])
    a.add_argument("file")
    a.add_argument("--monoid")
    a.add_argument("--bound", type=int, default=inj.DEFAULT_BOUND, help="size bound for bounded notions")
    a.set_defaults(func=cmd_analyze)

    d = with_out(sub.add_parser("decompose", help="split an act into indecomposable components"))
    d.add_argument("file")
    d.add_argument("--monoid")
    d.add_argument("--dot", action="store_true", help="emit a Graphviz description instead")
    d.set_defaults(func=cmd_decompose)

    c = with_out(sub.add_parser("check", help="decide one injectivity notion"))
    c.add_argument("notion", choices=inj.NOTIONS)
    c.add_argument("file")
    c.add_argument("--monoid")
    c.add_argument("--bound", type=int, default=inj.DEFAULT_BOUND)
    c.set_defaults(func=cmd_check)

    e = with_out(sub.add_parser("enumerate", help="list monoids of order N or acts of size N"))
    e.add_argument("kind", choices=["monoids", "acts"])
    e.add_argument("n", type=int)
    e.add_argument("--monoid")
    e.set_defaults(func=cmd_enumerate)

    n = with_out(sub.add_parser("envelope", help="compute an injective envelope"))
    n.add_argument("file")
    n.add_argument("--monoid")
    n.set_defaults(func=cmd_envelope)

    r = with_out(sub.add_parser("verify", help="check a registered claim within bounds"))
    r.add_argument("claim", help="claim id or 'all'")
    r.add_argument("--max-monoid", type=int)
    r.add_argument("--max-act", type=int)
    r.add_argument("--codomain-bound", type=int)
    r.add_argument("--alphabet", type=int)
    r.add_argument("--jobs", type=int, default=1)
    r.set_defaults(func=cmd_verify)
    return p


def run(argv: Optional[Sequence[str]] = None, out: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out)
    except UsageError as exc:
        print(f"actlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except UnknownClaim as exc:
        print(f"actlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SizeGuardExceeded, EnvelopeNotFound) as exc:
        print(f"actlab: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (ActlabError, OSError, ValueError) as exc:
        print(f"actlab: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
