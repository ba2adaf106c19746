"""Text front end: expression parsing, job documents, command dispatch.

Grammar for polynomial expressions (whitespace insignificant, implicit
'*' accepted between a coefficient and a factor and between factors):

    expression := sign? term (sign term)*          sign := '+' | '-'
    term       := coefficient ('*'? factor)* | factor ('*'? factor)*
    factor     := variable ('^' nonneg-integer)?
    coefficient:= integer ('/' positive-integer)?

Jobs are single JSON documents; results are JSON (default) or text.
Exit codes: 0 success, 1 parse/validation error, 2 resource guard
exceeded, 3 precondition failure (input not a Sagbi basis or an order
that is not global).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import ParseError, PreconditionError, ResourceGuardError
from .guards import Guards
from .initial import initial_set
from .membership import subduct
from .order import (
    TermOrder,
    Weight,
    deglex_order,
    degrevlex_order,
    lex_order,
    refine,
    weight_vector,
)
from .poly import Polynomial, RingContext, _join_terms
from .sagbi import TrackedBasis, interreduce, is_sagbi, sagbi_basis
from .walk import WalkReport, walk

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_GUARD = 2
EXIT_PRECONDITION = 3


# ----------------------------------------------------------------------
# polynomial expressions

_TOKEN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(src: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(src):
        if not src[pos:].strip():
            break
        match = _TOKEN.match(src, pos)
        if match is None:
            at = len(src) - len(src[pos:].lstrip())
            raise ParseError(f"unexpected character {src[at]!r}", at)
        if match.group("number"):
            tokens.append(("number", match.group("number"), match.start("number")))
        elif match.group("name"):
            tokens.append(("name", match.group("name"), match.start("name")))
        elif match.group("op"):
            tokens.append(("op", match.group("op"), match.start("op")))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, src: str, ring: RingContext):
        self.src = src
        self.ring = ring
        self.tokens = _tokenize(src)
        self.pos = 0

    def peek(self) -> Optional[tuple[str, str, int]]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> tuple[str, str, int]:
        token = self.peek()
        if token is None:
            raise ParseError("unexpected end of expression", len(self.src))
        self.pos += 1
        return token

    def expect_number(self, what: str) -> int:
        token = self.take()
        if token[0] != "number":
            raise ParseError(f"expected {what}, found {token[1]!r}", token[2])
        return int(token[1])

    def parse(self) -> Polynomial:
        result = Polynomial.zero(self.ring)
        sign = 1
        token = self.peek()
        if token is None:
            raise ParseError("empty expression", 0)
        if token[0] == "op" and token[1] in "+-":
            sign = -1 if token[1] == "-" else 1
            self.take()
        result = result + self.term(sign)
        while self.peek() is not None:
            token = self.take()
            if token[0] != "op" or token[1] not in "+-":
                raise ParseError(f"expected '+' or '-', found {token[1]!r}", token[2])
            sign = -1 if token[1] == "-" else 1
            result = result + self.term(sign)
        return result

    def term(self, sign: int) -> Polynomial:
        token = self.peek()
        if token is None:
            raise ParseError("expected a term", len(self.src))
        coefficient = Fraction(sign)
        exponent = [0] * self.ring.n
        saw_any = False
        if token[0] == "number":
            self.take()
            numerator = int(token[1])
            denominator = 1
            nxt = self.peek()
            if nxt is not None and nxt[0] == "op" and nxt[1] == "/":
                self.take()
                den_token = self.peek()
                denominator = self.expect_number("a denominator")
                if denominator == 0:
                    raise ParseError("zero denominator", den_token[2])
            coefficient *= Fraction(numerator, denominator)
            saw_any = True
        while True:
            nxt = self.peek()
            if nxt is None or (nxt[0] == "op" and nxt[1] in "+-"):
                break
            if nxt[0] == "op" and nxt[1] == "*":
                if not saw_any:
                    raise ParseError("unexpected '*' at start of term", nxt[2])
                self.take()
                self.factor(exponent)
            elif nxt[0] == "name":
                self.factor(exponent)
            else:
                raise ParseError(f"unexpected {nxt[1]!r} in term", nxt[2])
            saw_any = True
        if not saw_any:
            nxt = self.peek()
            position = nxt[2] if nxt else len(self.src)
            raise ParseError("expected a coefficient or a variable", position)
        return Polynomial(self.ring, {tuple(exponent): coefficient})

    def factor(self, exponent: list[int]):
        token = self.take()
        if token[0] != "name":
            raise ParseError(f"expected a variable, found {token[1]!r}", token[2])
        try:
            index = self.ring.index(token[1])
        except ValueError:
            raise ParseError(f"unknown variable {token[1]!r}", token[2]) from None
        power = 1
        nxt = self.peek()
        if nxt is not None and nxt[0] == "op" and nxt[1] == "^":
            self.take()
            power = self.expect_number("an exponent")
        exponent[index] += power


def parse_polynomial(src: str, ring: RingContext) -> Polynomial:
    """Parse an expression into a polynomial of the given ring."""
    return _Parser(src, ring).parse()


def format_rational(value: Fraction) -> str:
    """Exact decimal-free string: '2/3', '-1/2', '4'."""
    return str(Fraction(value))


def format_polynomial(f: Polynomial, order: TermOrder) -> str:
    """Render terms in descending order under the given term order."""
    if f.is_zero:
        return "0"
    ordered = sorted(f.terms, key=order.key, reverse=True)
    return _join_terms(f.ring, ordered, f.terms)


# ----------------------------------------------------------------------
# job documents


@dataclass
class JobSpec:
    ring: RingContext
    generators: list[Polynomial]
    start_order: Optional[TermOrder]
    target_order: Optional[TermOrder]
    guards: Guards
    validate_input: bool
    weight: Optional[Weight]
    polynomial: Optional[Polynomial]


_PRESETS = {"lex": lex_order, "deglex": deglex_order, "degrevlex": degrevlex_order}


def _rational_entry(value) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"rational entries must be strings or integers, got {value!r}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as error:
        raise ValueError(f"bad rational entry {value!r}: {error}") from None


def order_from_document(document, ring: RingContext) -> TermOrder:
    """Build a term order from {'matrix': ...} or {'preset': ..., 'priority': ...}."""
    if not isinstance(document, dict):
        raise ValueError("an order must be a JSON object")
    if "matrix" in document:
        rows = document["matrix"]
        if not isinstance(rows, list) or not rows:
            raise ValueError("'matrix' must be a nonempty array of rows")
        matrix = [[_rational_entry(e) for e in row] for row in rows]
        if any(len(row) != ring.n for row in matrix):
            raise ValueError(f"order matrix rows must have length {ring.n}")
        return TermOrder(matrix)
    if "preset" in document:
        preset = document["preset"]
        if preset not in _PRESETS:
            raise ValueError(f"unknown preset {preset!r}; use one of {sorted(_PRESETS)}")
        priority_names = document.get("priority", list(ring.variable_names))
        priority = [ring.index(name) for name in priority_names]
        return _PRESETS[preset](ring.n, priority)
    raise ValueError("an order needs a 'matrix' or a 'preset' key")


def load_jobspec(
    document,
    *,
    need_target: bool = False,
    need_weight: bool = False,
    need_polynomial: bool = False,
) -> JobSpec:
    if not isinstance(document, dict):
        raise ValueError("the job document must be a JSON object")
    try:
        names = document["variables"]
        generator_sources = document["generators"]
    except KeyError as error:
        raise ValueError(f"missing required key {error.args[0]!r}") from None
    if not isinstance(names, list) or not all(isinstance(v, str) for v in names):
        raise ValueError("'variables' must be an array of strings")
    ring = RingContext(tuple(names))
    if (
        not isinstance(generator_sources, list)
        or not generator_sources
        or not all(isinstance(src, str) for src in generator_sources)
    ):
        raise ValueError("'generators' must be a nonempty array of expression strings")
    generators = [parse_polynomial(src, ring) for src in generator_sources]

    start_order = None
    if "start_order" in document:
        start_order = order_from_document(document["start_order"], ring)
    target_order = None
    if need_target:
        if "target_order" not in document:
            raise ValueError("missing required key 'target_order'")
        target_order = order_from_document(document["target_order"], ring)

    guard_values = document.get("guards", {})
    if not isinstance(guard_values, dict):
        raise ValueError("'guards' must be a JSON object")
    allowed = {"max_passes", "max_degree", "max_steps"}
    unknown = set(guard_values) - allowed
    if unknown:
        raise ValueError(f"unknown guard keys: {sorted(unknown)}")
    if any(not isinstance(v, int) or v <= 0 for v in guard_values.values()):
        raise ValueError("guard values must be positive integers")
    guards = Guards(**guard_values)

    flags = document.get("flags", {})
    if not isinstance(flags, dict):
        raise ValueError("'flags' must be a JSON object")
    validate_input = bool(flags.get("validate_input", True))

    weight = None
    if need_weight:
        if "weight" not in document:
            raise ValueError("missing required key 'weight'")
        entries = document["weight"]
        if not isinstance(entries, list) or len(entries) != ring.n:
            raise ValueError(f"'weight' must be an array of {ring.n} rationals")
        weight = weight_vector([_rational_entry(e) for e in entries])

    polynomial = None
    if need_polynomial:
        if "polynomial" not in document:
            raise ValueError("missing required key 'polynomial'")
        if not isinstance(document["polynomial"], str):
            raise ValueError("'polynomial' must be an expression string")
        polynomial = parse_polynomial(document["polynomial"], ring)

    return JobSpec(
        ring=ring,
        generators=generators,
        start_order=start_order,
        target_order=target_order,
        guards=guards,
        validate_input=validate_input,
        weight=weight,
        polynomial=polynomial,
    )


def _require_start(job: JobSpec) -> TermOrder:
    if job.start_order is None:
        raise ValueError("missing required key 'start_order'")
    return job.start_order


# ----------------------------------------------------------------------
# commands


def _matrix_document(order: TermOrder) -> dict:
    return {"matrix": [[format_rational(e) for e in row] for row in order.matrix]}


def _representation_strings(basis: TrackedBasis) -> list[str]:
    if not basis.elements:
        return []
    aux = basis.representations[0].ring
    aux_order = deglex_order(aux.n)
    return [format_polynomial(rep, aux_order) for rep in basis.representations]


def _steps_document(report: WalkReport, target_order: TermOrder) -> list[dict]:
    steps = []
    for step in report.steps:
        step_order = refine(step.weight, target_order)
        steps.append(
            {
                "step": step.step_index,
                "weight": [format_rational(e) for e in step.weight],
                "initials": [format_polynomial(f, step_order) for f in step.initials],
                "basis": [
                    format_polynomial(f, step_order)
                    for f in step.construction.polynomials
                ],
                "representations": _representation_strings(step.construction),
                "lifted": [format_polynomial(f, step_order) for f in step.lifted],
                "interreduced": [
                    format_polynomial(f, step_order) for f in step.interreduced
                ],
                "advance_fraction": format_rational(step.advance_fraction),
            }
        )
    return steps


def _cmd_convert(job: JobSpec, trace: bool) -> dict:
    start = _require_start(job)
    if job.target_order is None:
        raise ValueError("missing required key 'target_order'")
    report = walk(
        job.generators,
        start,
        job.target_order,
        guards=job.guards,
        validate=job.validate_input,
    )
    basis_strings = [format_polynomial(f, job.target_order) for f in report.final_basis]
    payload = {
        "status": report.status,
        "variables": list(job.ring.variable_names),
        "generators": basis_strings,
        "start_order": _matrix_document(job.target_order),
        "final_basis": basis_strings,
    }
    if trace:
        payload["steps"] = _steps_document(report, job.target_order)
    return payload


def _cmd_sagbi(job: JobSpec) -> dict:
    order = _require_start(job)
    basis = interreduce(sagbi_basis(job.generators, order, job.guards), order, job.guards)
    basis_strings = [format_polynomial(f, order) for f in basis.polynomials]
    return {
        "status": "ok",
        "variables": list(job.ring.variable_names),
        "generators": basis_strings,
        "start_order": _matrix_document(order),
        "final_basis": basis_strings,
        "representations": _representation_strings(basis),
    }


def _cmd_check(job: JobSpec) -> dict:
    order = _require_start(job)
    result = is_sagbi(job.generators, order, job.guards)
    return {
        "status": "ok",
        "variables": list(job.ring.variable_names),
        "is_sagbi": result,
    }


def _cmd_initial(job: JobSpec) -> dict:
    display = job.start_order if job.start_order is not None else deglex_order(job.ring.n)
    forms = initial_set(job.weight, job.generators)
    return {
        "status": "ok",
        "variables": list(job.ring.variable_names),
        "weight": [format_rational(e) for e in job.weight],
        "initials": [format_polynomial(f, display) for f in forms],
    }


def _cmd_normalform(job: JobSpec) -> dict:
    order = _require_start(job)
    result = subduct(job.polynomial, job.generators, order, job.guards.max_steps)
    aux_order = deglex_order(result.representation.ring.n)
    return {
        "status": "ok",
        "variables": list(job.ring.variable_names),
        "remainder": format_polynomial(result.remainder, order),
        "representation": format_polynomial(result.representation, aux_order),
    }


# ----------------------------------------------------------------------
# dispatch


def _render_text(command: str, payload: dict) -> str:
    if command == "check":
        return "true" if payload["is_sagbi"] else "false"
    if command == "initial":
        return "\n".join(payload["initials"])
    if command == "normalform":
        return (
            f"remainder: {payload['remainder']}\n"
            f"representation: {payload['representation']}"
        )
    lines = list(payload["final_basis"])
    if "steps" in payload:
        for step in payload["steps"]:
            lines.append(
                f"step {step['step']}: weight ({', '.join(step['weight'])}), "
                f"advance {step['advance_fraction']}"
            )
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sagbiwalk",
        description="Convert subalgebra bases between monomial orders with exact arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, help_text in [
        ("convert", "walk a Sagbi basis from the start order to the target order"),
        ("sagbi", "complete generators to a reduced Sagbi basis under one order"),
        ("check", "test whether the generators are a Sagbi basis"),
        ("initial", "initial forms of the generators for a weight vector"),
        ("normalform", "subduct a polynomial against the generators"),
    ]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("--input", default="-", help="job JSON path, or - for stdin")
        cmd.add_argument("--output", default="-", help="result path, or - for stdout")
        cmd.add_argument("--format", choices=("json", "text"), default="json")
        cmd.add_argument("--trace", action="store_true", help="include per-step trace")
        cmd.add_argument(
            "--no-validate",
            action="store_true",
            help="skip checking that the input is a Sagbi basis",
        )
    return parser


def _read_document(path: str):
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _write_output(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _diagnostic(kind: str, message: str):
    sys.stderr.write(json.dumps({"status": "error", "kind": kind, "message": message}) + "\n")


def run_command(argv: Sequence[str]) -> int:
    args = build_parser().parse_args(argv)
    try:
        document = _read_document(args.input)
        job = load_jobspec(
            document,
            need_target=args.command == "convert",
            need_weight=args.command == "initial",
            need_polynomial=args.command == "normalform",
        )
        if args.no_validate:
            job.validate_input = False
        if args.command == "convert":
            payload = _cmd_convert(job, args.trace)
        elif args.command == "sagbi":
            payload = _cmd_sagbi(job)
        elif args.command == "check":
            payload = _cmd_check(job)
        elif args.command == "initial":
            payload = _cmd_initial(job)
        else:
            payload = _cmd_normalform(job)
    except json.JSONDecodeError as error:
        _diagnostic("json_error", str(error))
        return EXIT_INPUT_ERROR
    except ParseError as error:
        _diagnostic("parse_error", str(error))
        return EXIT_INPUT_ERROR
    except ValueError as error:
        _diagnostic("validation_error", str(error))
        return EXIT_INPUT_ERROR
    except ResourceGuardError as error:
        _diagnostic("guard_exceeded", str(error))
        return EXIT_GUARD
    except PreconditionError as error:
        _diagnostic("precondition_failed", str(error))
        return EXIT_PRECONDITION
    except OSError as error:
        _diagnostic("io_error", str(error))
        return EXIT_INPUT_ERROR

    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        text = _render_text(args.command, payload) + "\n"
    try:
        _write_output(args.output, text)
    except OSError as error:
        _diagnostic("io_error", str(error))
        return EXIT_INPUT_ERROR
    return EXIT_OK


def main():
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
