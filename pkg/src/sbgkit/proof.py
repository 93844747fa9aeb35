"""Cutting-planes derivation rules and a verifier for refutation proofs.

The proof format is the version-1.0 text format: after the exact header line
``pseudo-Boolean proof version 1.0``, each line is one step:

* ``u <constraint> ;``   assert a constraint checked by reverse propagation,
* ``l <k>``              load the k-th constraint of the input formula,
* ``p <tokens> 0``       derive a constraint in reverse Polish notation,
* ``c <id> 0``           claim that constraint <id> is a contradiction.

Every step that produces a constraint (u, l, p) is stored under the next
sequential id starting at 1.  RPN tokens: a constraint id pushes a copy of
that constraint; ``x7``/``~x7`` pushes the literal axiom ``lit >= 0``; ``+``
pops two constraints and pushes their sum; ``<int> *`` and ``<int> d``
multiply/divide the top by a positive integer; ``s`` saturates the top.
Deletion directives and the richer redundance-style rules of newer formats
are recognized and rejected loudly, never skipped.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .encode import (
    LinearConstraint,
    Literal,
    PBFormula,
    from_signed,
    parse_constraint_tokens,
    OpbError,
)
from .solve import propagates_to_conflict

PROOF_HEADER = "pseudo-Boolean proof version 1.0"

_UNSUPPORTED = {
    "f", "d", "del", "red", "rup", "dom", "sol", "soli", "solx",
    "o", "v", "a", "e", "ea", "i", "j", "w", "#", "strengthen",
}


class ProofParseError(ValueError):
    """Malformed proof text; carries a 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class VerifyError(ValueError):
    """A proof step failed to check; carries the step's line number."""

    def __init__(self, line_no: int, rule: str, message: str):
        super().__init__(f"line {line_no}: {rule}: {message}")
        self.line_no = line_no
        self.rule = rule


# -- derivation rules ----------------------------------------------------------


def axiom_literal(lit: Literal) -> LinearConstraint:
    """The literal axiom ``lit >= 0`` (covers both bounds via negation)."""
    return LinearConstraint(((1, lit),), 0)


def add(c1: LinearConstraint, c2: LinearConstraint) -> LinearConstraint:
    """Sum of two constraints with opposite-literal cancellation."""
    items1, rhs1 = c1.signed_items()
    items2, rhs2 = c2.signed_items()
    signed: dict[int, int] = {}
    for coef, var in items1 + items2:
        signed[var] = signed.get(var, 0) + coef
    return from_signed(signed, rhs1 + rhs2)


def multiply(c: LinearConstraint, alpha: int) -> LinearConstraint:
    """Scale all coefficients and the degree by a positive integer."""
    if alpha <= 0:
        raise ValueError(f"multiplier must be positive, got {alpha}")
    return LinearConstraint(
        tuple((coef * alpha, lit) for coef, lit in c.terms), c.degree * alpha
    )


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def divide(c: LinearConstraint, alpha: int) -> LinearConstraint:
    """Divide coefficients and degree by alpha, rounding up.

    Sound only on the normalized form (all coefficients positive), which the
    constraint type guarantees.
    """
    if alpha <= 0:
        raise ValueError(f"divisor must be positive, got {alpha}")
    return LinearConstraint(
        tuple((_ceil_div(coef, alpha), lit) for coef, lit in c.terms),
        _ceil_div(c.degree, alpha),
    )


def saturate(c: LinearConstraint) -> LinearConstraint:
    """Cap every coefficient at the degree (at zero for degenerate degrees)."""
    cap = max(c.degree, 0)
    return LinearConstraint(
        tuple((min(coef, cap), lit) for coef, lit in c.terms if min(coef, cap) > 0),
        c.degree,
    )


def negation_of(c: LinearConstraint) -> LinearConstraint:
    """The constraint satisfied exactly when *c* is violated."""
    items, rhs = c.signed_items()
    return from_signed({var: -coef for coef, var in items}, 1 - rhs)


# -- proof steps ---------------------------------------------------------------


@dataclass(frozen=True)
class ProofStep:
    kind: str  # "header" | "load" | "rup" | "polish" | "contradiction"
    line_no: int
    index: int = 0  # load: formula constraint number; contradiction: claimed id
    constraint: LinearConstraint | None = None  # rup payload
    tokens: tuple[str, ...] = ()  # polish payload


_LITERAL_TOKEN_RE = re.compile(r"~?x\d+$")


def _check_polish(tokens: Sequence[str], line_no: int) -> None:
    """Static stack-discipline check of an RPN token list.

    Repeated-variable products (nonlinear terms) cannot be expressed in this
    grammar at all, so the idempotence axiom never comes into play.
    """
    depth = 0
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        lookahead = tokens[i + 1] if i + 1 < len(tokens) else None
        if tok.lstrip("+-").isdigit() and lookahead in ("*", "d"):
            # scalar operand of a multiply/divide; value checked at replay
            if depth < 1:
                raise ProofParseError(line_no, f"'{lookahead}' with empty stack")
            i += 2
            continue
        if tok == "+":
            if depth < 2:
                raise ProofParseError(line_no, "'+' needs two stack entries")
            depth -= 1
        elif tok == "s":
            if depth < 1:
                raise ProofParseError(line_no, "'s' with empty stack")
        elif tok == "*" or tok == "d":
            raise ProofParseError(line_no, f"'{tok}' without preceding integer")
        elif _LITERAL_TOKEN_RE.match(tok):
            depth += 1
        elif tok.lstrip("+-").isdigit():
            if int(tok) < 1:
                raise ProofParseError(line_no, f"bad constraint id {tok!r}")
            depth += 1
        else:
            raise ProofParseError(line_no, f"unknown token {tok!r}")
        i += 1
    if depth != 1:
        raise ProofParseError(
            line_no, f"derivation leaves {depth} stack entries, expected 1"
        )


def parse_proof(text: str) -> list[ProofStep]:
    """Parse proof text into steps, validating syntax eagerly."""
    steps: list[ProofStep] = []
    saw_header = False
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("*"):
            continue
        if not saw_header:
            if line != PROOF_HEADER:
                raise ProofParseError(line_no, f"expected header {PROOF_HEADER!r}")
            saw_header = True
            steps.append(ProofStep("header", line_no))
            continue
        directive, _, rest = line.partition(" ")
        rest = rest.strip()
        if directive == "u":
            tokens = rest.split()
            if not tokens or tokens[-1] != ";":
                raise ProofParseError(line_no, "'u' constraint must end with ';'")
            try:
                parsed = parse_constraint_tokens(tokens[:-1], line_no)
            except OpbError as exc:
                raise ProofParseError(line_no, f"bad 'u' constraint: {exc.message}") from None
            steps.append(ProofStep("rup", line_no, constraint=parsed[0]))
        elif directive == "l":
            if not rest.isdigit() or int(rest) < 1:
                raise ProofParseError(line_no, f"'l' expects a 1-based index, got {rest!r}")
            steps.append(ProofStep("load", line_no, index=int(rest)))
        elif directive == "p":
            tokens = rest.split()
            if not tokens or tokens[-1] != "0":
                raise ProofParseError(line_no, "'p' derivation must end with 0")
            body = tuple(tokens[:-1])
            _check_polish(body, line_no)
            steps.append(ProofStep("polish", line_no, tokens=body))
        elif directive == "c":
            parts = rest.split()
            if len(parts) != 2 or parts[1] != "0" or not parts[0].isdigit():
                raise ProofParseError(line_no, "'c' expects '<id> 0'")
            steps.append(ProofStep("contradiction", line_no, index=int(parts[0])))
        elif directive in _UNSUPPORTED:
            raise ProofParseError(
                line_no, f"unsupported rule {directive!r} (outside the verified subset)"
            )
        else:
            raise ProofParseError(line_no, f"unknown directive {directive!r}")
    if not saw_header:
        raise ProofParseError(1, "empty proof: missing header")
    return steps


# -- verification --------------------------------------------------------------


@dataclass
class ConstraintDb:
    """Derived constraints under sequential ids starting at 1."""

    constraints: dict[int, LinearConstraint] = field(default_factory=dict)
    next_id: int = 1

    def store(self, c: LinearConstraint) -> int:
        cid = self.next_id
        self.constraints[cid] = c
        self.next_id += 1
        return cid

    def fetch(self, cid: int, line_no: int) -> LinearConstraint:
        c = self.constraints.get(cid)
        if c is None:
            raise VerifyError(line_no, "reference", f"constraint id {cid} is not assigned")
        return c


@dataclass(frozen=True)
class Verification:
    """Successful verification: the claimed contradiction and the final db."""

    contradiction_id: int
    steps_checked: int
    db: ConstraintDb


def _replay_polish(
    tokens: Sequence[str], db: ConstraintDb, line_no: int
) -> LinearConstraint:
    stack: list[LinearConstraint] = []
    i = 0
    while i < len(tokens):
        tok = tokens[i]
        lookahead = tokens[i + 1] if i + 1 < len(tokens) else None
        if tok.lstrip("+-").isdigit() and lookahead in ("*", "d"):
            alpha = int(tok)
            top = stack.pop()
            try:
                result = multiply(top, alpha) if lookahead == "*" else divide(top, alpha)
            except ValueError as exc:
                raise VerifyError(line_no, lookahead, str(exc)) from None
            stack.append(result)
            i += 2
            continue
        if tok == "+":
            b = stack.pop()
            a = stack.pop()
            stack.append(add(a, b))
        elif tok == "s":
            stack.append(saturate(stack.pop()))
        elif _LITERAL_TOKEN_RE.match(tok):
            negated = tok.startswith("~")
            var = int((tok[1:] if negated else tok)[1:])
            stack.append(axiom_literal(Literal(var, negated)))
        else:
            stack.append(db.fetch(int(tok), line_no))
        i += 1
    return stack[0]


def verify(f: PBFormula, steps: Iterable[ProofStep]) -> Verification:
    """Replay *steps* against *f*; raise VerifyError on the first bad step.

    ``u`` steps are checked by reverse propagation: the negated constraint
    is added to everything derived so far and counting propagation must run
    into a conflict.  The final claim succeeds only when the referenced
    constraint normalizes to ``0 >= d`` with d >= 1.
    """
    db = ConstraintDb()
    contradiction: int | None = None
    checked = 0
    last_line = 0
    for step in steps:
        checked += 1
        last_line = step.line_no
        if step.kind == "header":
            continue
        if step.kind == "load":
            if not 1 <= step.index <= len(f.constraints):
                raise VerifyError(
                    step.line_no,
                    "l",
                    f"input constraint {step.index} out of range 1..{len(f.constraints)}",
                )
            db.store(f.constraints[step.index - 1])
        elif step.kind == "rup":
            assert step.constraint is not None
            assumption = negation_of(step.constraint)
            pool = list(db.constraints.values()) + [assumption]
            if not propagates_to_conflict(pool, max(f.num_vars, step.constraint.max_var())):
                raise VerifyError(
                    step.line_no,
                    "u",
                    f"propagation does not refute the negation of '{step.constraint}'",
                )
            db.store(step.constraint)
        elif step.kind == "polish":
            db.store(_replay_polish(step.tokens, db, step.line_no))
        elif step.kind == "contradiction":
            c = db.fetch(step.index, step.line_no)
            if not c.contradiction:
                raise VerifyError(
                    step.line_no,
                    "c",
                    f"constraint {step.index} is '{c}', not a contradiction",
                )
            contradiction = step.index
        else:  # pragma: no cover - parse_proof never emits other kinds
            raise VerifyError(step.line_no, step.kind, "unknown step kind")
    if contradiction is None:
        raise VerifyError(last_line or 1, "c", "proof ends without a contradiction claim")
    return Verification(contradiction, checked, db)
