"""Plain-text formats for monoids (.mon) and acts (.act), plus JSON helpers.

Monoid file::

    monoid LZ3
    elements 1 a b        # first label is the identity
    table
    1 a b
    a a a
    b b b

Act file (columns follow the monoid's element order)::

    act theta2 over LZ3
    elements t1 t2
    table
    t1 t1 t1
    t2 t2 t2
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .act import FiniteAct, validate_act
from .errors import TextSyntaxError, UnknownMonoidReference, ValidationError
from .monoid import FiniteMonoid, validate_monoid


@dataclass
class Workspace:
    monoids: dict[str, FiniteMonoid] = field(default_factory=dict)
    acts: dict[str, FiniteAct] = field(default_factory=dict)
    options: dict[str, Any] = field(default_factory=dict)

    def add_monoid(self, S: FiniteMonoid) -> FiniteMonoid:
        self.monoids[S.name] = S
        return S

    def add_act(self, A: FiniteAct) -> FiniteAct:
        if A.monoid.name not in self.monoids:
            raise UnknownMonoidReference(A.monoid.name)
        self.acts[A.name] = A
        return A


def _tokens(text: str) -> list[tuple[int, list[tuple[int, str]]]]:
    """Non-empty lines as (line number, [(column, token), ...]) with comments removed."""
    out = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        toks = []
        col = 0
        for part in line.split():
            col = line.index(part, col)
            toks.append((col + 1, part))
            col += len(part)
        if toks:
            out.append((lineno, toks))
    return out


def _header(lines, keyword: str, arity: int | None) -> tuple[int, list[str]]:
    if not lines:
        raise TextSyntaxError(f"expected '{keyword}' line", 1)
    lineno, toks = lines[0]
    if toks[0][1] != keyword:
        raise TextSyntaxError(f"expected '{keyword}', found {toks[0][1]!r}", lineno, toks[0][0])
    args = [t for _, t in toks[1:]]
    if arity is not None and len(args) != arity:
        col = toks[-1][0] if len(toks) > 1 else toks[0][0]
        raise TextSyntaxError(f"'{keyword}' takes {arity} argument(s), got {len(args)}", lineno, col)
    return lineno, args


def _body(lines, ncols: int, labels: list[str]) -> list[list[int]]:
    if len(lines) < 3:
        raise TextSyntaxError("missing 'table' section", lines[-1][0] + 1 if lines else 1)
    lineno, toks = lines[2]
    if [t for _, t in toks] != ["table"]:
        raise TextSyntaxError("expected 'table'", lineno, toks[0][0])
    rows = lines[3:]
    if len(rows) != len(labels):
        where = rows[-1][0] + 1 if len(rows) < len(labels) and rows else (rows[len(labels)][0] if rows else lineno + 1)
        raise TextSyntaxError(f"expected {len(labels)} table rows, got {len(rows)}", where)
    index = {lab: i for i, lab in enumerate(labels)}
    table = []
    for lineno, toks in rows:
        if len(toks) != ncols:
            raise TextSyntaxError(f"row has {len(toks)} entries, expected {ncols}", lineno, toks[0][0])
        row = []
        for col, tok in toks:
            if tok not in index:
                raise TextSyntaxError(f"unknown element {tok!r}", lineno, col)
            row.append(index[tok])
        table.append(row)
    return table


def parse_monoid(text: str) -> FiniteMonoid:
    lines = _tokens(text)
    _, (name,) = _header(lines, "monoid", 1)
    if len(lines) < 2:
        raise TextSyntaxError("missing 'elements' line", lines[0][0] + 1)
    lineno, labels = _header(lines[1:], "elements", None)
    if not labels:
        raise TextSyntaxError("no elements declared", lineno)
    if len(set(labels)) != len(labels):
        raise TextSyntaxError("duplicate element label", lineno)
    table = _body(lines, len(labels), labels)
    try:
        return validate_monoid(labels, table, 0, name)
    except ValidationError as exc:
        raise ValidationError(f"monoid {name}: {exc}") from exc


def parse_act(text: str, workspace: Workspace) -> FiniteAct:
    lines = _tokens(text)
    lineno, args = _header(lines, "act", 3)
    name, over, monoid_name = args
    if over != "over":
        raise TextSyntaxError("expected 'act <name> over <monoid>'", lineno)
    if monoid_name not in workspace.monoids:
        raise UnknownMonoidReference(f"act {name} refers to undeclared monoid {monoid_name!r}")
    S = workspace.monoids[monoid_name]
    if len(lines) < 2:
        raise TextSyntaxError("missing 'elements' line", lineno + 1)
    lineno, labels = _header(lines[1:], "elements", None)
    if not labels:
        raise TextSyntaxError("no elements declared", lineno)
    if len(set(labels)) != len(labels):
        raise TextSyntaxError("duplicate element label", lineno)
    table = _body(lines, S.size, labels)
    try:
        return validate_act(S, labels, table, name)
    except ValidationError as exc:
        raise ValidationError(f"act {name}: {exc}") from exc


def _safe(name: str) -> str:
    return "".join(ch if not ch.isspace() else "_" for ch in name) or "_"


def print_monoid(S: FiniteMonoid) -> str:
    lines = [f"monoid {_safe(S.name)}", "elements " + " ".join(S.elems), "table"]
    lines += [" ".join(S.elems[v] for v in row) for row in S.mul]
    return "\n".join(lines) + "\n"


def print_act(A: FiniteAct) -> str:
    lines = [f"act {_safe(A.name)} over {_safe(A.monoid.name)}", "elements " + " ".join(A.elems), "table"]
    lines += [" ".join(A.elems[v] for v in row) for row in A.action]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON


def monoid_to_json(S: FiniteMonoid) -> dict:
    return {"name": S.name, "elements": list(S.elems), "table": [list(r) for r in S.mul]}


def monoid_from_json(d: dict) -> FiniteMonoid:
    return validate_monoid(d["elements"], d["table"], 0, d["name"])


def act_to_json(A: FiniteAct) -> dict:
    return {"name": A.name, "elements": list(A.elems), "table": [list(r) for r in A.action]}


def act_from_json(S: FiniteMonoid, d: dict) -> FiniteAct:
    return validate_act(S, d["elements"], d["table"], d["name"])
