"""Parse linear quaternion expressions and reduce whole programs to one canonical form.

Grammar:
    program := stmt (';' stmt)*
    stmt    := ident '=' expr | expr
    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := real | quatlit | 'q' | ident '(' expr ')' | '(' expr ')'

Literals are reals, units i/j/k, suffixed reals like 2.5k, and tuples (a,b,c,d); a
parenthesised expression without q (e.g. (1+2i)) folds to a literal. Products multiply
in written order and must hold exactly one factor that depends on q.
"""
import json
import logging
import math
import re
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Union

from .forms import IDENTITY, ZERO_FORM, CanonicalForm, add_forms, form_to_json, format_tuple, scale_form
from .linfunc import compose
from .quaternion import (
    ONE,
    ZERO,
    Axis,
    NUMBER_PATTERN,
    TUPLE_PATTERN,
    Quaternion,
    add,
    basis,
    format_quaternion,
    format_real,
    multiply,
    negate,
    scale,
)
from .reducers import get_reducer, reduce_partitioned

logger = logging.getLogger(__name__)

STATE_SYMBOL = "q"
UNIT_SYMBOLS = {"i": Axis.I, "j": Axis.J, "k": Axis.K}
RESERVED = frozenset(UNIT_SYMBOLS) | {STATE_SYMBOL}
FORMAT_STYLES = ("text", "json", "tuple")


class ExprError(ValueError):
    """Expression error with a 1-based source position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self):
        return f"{self.line}:{self.column}: {self.message}"


class ExprSyntaxError(ExprError):
    pass


class NonlinearTermError(ExprError):
    pass


class UnknownFunctionError(ExprError):
    pass


class RedefinitionError(ExprError):
    pass


class ConstantExpressionError(ExprError):
    pass


# --- AST ---------------------------------------------------------------------------

@dataclass(frozen=True)
class QuatLiteral:
    value: Quaternion
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class StateVar:
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Product:
    factors: tuple
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Sum:
    terms: tuple  # of (sign, node)
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Apply:
    name: str
    argument: "Node"
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ScalarWeight:
    weight: float
    expr: "Node"
    line: int = field(default=0, compare=False)
    column: int = field(default=0, compare=False)


Node = Union[QuatLiteral, StateVar, Product, Sum, Apply, ScalarWeight]


@dataclass(frozen=True)
class Statement:
    name: str | None
    expr: Node


def is_linear(node: Node) -> bool:
    """Everything except a bare literal depends on q."""
    return not isinstance(node, QuatLiteral)


# --- Tokenizer ---------------------------------------------------------------------

@dataclass(frozen=True)
class Token:
    kind: str  # LITERAL, IDENT, OP, EOF
    text: str
    line: int
    column: int
    value: Quaternion | None = None


_NUMBER = re.compile(rf"({NUMBER_PATTERN})([ijk](?![A-Za-z0-9_]))?")
_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_OPERATORS = "+-*=;()"


def _check_finite(value: Quaternion, text: str, line: int, column: int) -> None:
    if not all(math.isfinite(c) for c in value):
        raise ExprSyntaxError(f"literal {text!r} is out of range", line, column)


def tokenize(src: str) -> list[Token]:
    tokens = []
    pos, line, column = 0, 1, 1

    def advance(text: str) -> None:
        nonlocal pos, line, column
        pos += len(text)
        newlines = text.count("\n")
        if newlines:
            line += newlines
            column = len(text) - text.rfind("\n")
        else:
            column += len(text)

    while pos < len(src):
        ch = src[pos]
        if ch.isspace():
            advance(ch)
            continue
        if ch == "(":
            m = TUPLE_PATTERN.match(src, pos)
            if m:
                value = Quaternion(*(float(g) for g in m.groups()))
                _check_finite(value, m.group(0), line, column)
                tokens.append(Token("LITERAL", m.group(0), line, column, value))
                advance(m.group(0))
                continue
        m = _NUMBER.match(src, pos)
        if m and (ch.isdigit() or ch == "."):
            number, unit = m.groups()
            value = scale(float(number), basis(UNIT_SYMBOLS[unit]) if unit else ONE)
            _check_finite(value, m.group(0), line, column)
            tokens.append(Token("LITERAL", m.group(0), line, column, value))
            advance(m.group(0))
            continue
        m = _IDENT.match(src, pos)
        if m:
            tokens.append(Token("IDENT", m.group(0), line, column))
            advance(m.group(0))
            continue
        if ch in _OPERATORS:
            tokens.append(Token("OP", ch, line, column))
            advance(ch)
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, column)
    tokens.append(Token("EOF", "", line, column))
    return tokens


# --- Parser ------------------------------------------------------------------------

def _product_of(values) -> Quaternion:
    result = ONE
    for v in values:
        result = multiply(result, v)
    return result


def _negated(node: Node) -> Node:
    if isinstance(node, QuatLiteral):
        return QuatLiteral(negate(node.value), node.line, node.column)
    if isinstance(node, Product) and isinstance(node.factors[0], QuatLiteral):
        first = node.factors[0]
        head = QuatLiteral(negate(first.value), first.line, first.column)
        return Product((head,) + node.factors[1:], node.line, node.column)
    if isinstance(node, ScalarWeight):
        return ScalarWeight(-node.weight, node.expr, node.line, node.column)
    return ScalarWeight(-1.0, node, node.line, node.column)


class Parser:
    """Recursive descent over the token list; tracks which function names are bound."""

    def __init__(self, src: str, bound: Sequence[str] = ()):
        self.tokens = tokenize(src)
        self.index = 0
        self.bound = set(bound)

    def peek(self, offset: int = 0) -> Token:
        return self.tokens[min(self.index + offset, len(self.tokens) - 1)]

    def take(self) -> Token:
        tok = self.peek()
        self.index += 1
        return tok

    def at_op(self, chars: str) -> bool:
        tok = self.peek()
        return tok.kind == "OP" and tok.text in chars

    def expect_op(self, ch: str) -> Token:
        tok = self.peek()
        if not (tok.kind == "OP" and tok.text == ch):
            found = tok.text or "end of input"
            raise ExprSyntaxError(f"expected {ch!r}, found {found!r}", tok.line, tok.column)
        return self.take()

    def parse_program(self) -> list[Statement]:
        statements = []
        while True:
            while self.at_op(";"):
                self.take()
            if self.peek().kind == "EOF":
                break
            statements.append(self.parse_statement())
            tok = self.peek()
            if tok.kind != "EOF" and not self.at_op(";"):
                raise ExprSyntaxError(f"expected ';' or end of input, found {tok.text!r}", tok.line, tok.column)
        if not statements:
            tok = self.peek()
            raise ExprSyntaxError("empty program", tok.line, tok.column)
        return statements

    def parse_statement(self) -> Statement:
        tok = self.peek()
        if tok.kind == "IDENT" and self.peek(1).kind == "OP" and self.peek(1).text == "=":
            name = tok.text
            if name in RESERVED:
                raise ExprSyntaxError(f"{name!r} is reserved and cannot name a function", tok.line, tok.column)
            if name in self.bound:
                raise RedefinitionError(f"function {name!r} is already defined", tok.line, tok.column)
            self.take()
            self.take()
            body = self._linear(self.parse_expr(), tok)
            self.bound.add(name)
            return Statement(name, body)
        return Statement(None, self._linear(self.parse_expr(), tok))

    @staticmethod
    def _linear(node: Node, at: Token) -> Node:
        if not is_linear(node):
            raise ConstantExpressionError(
                "expression does not depend on q (constant functions are not linear)", at.line, at.column
            )
        return node

    def parse_expr(self) -> Node:
        start = self.peek()
        sign = 1
        if self.at_op("+-"):
            sign = -1 if self.take().text == "-" else 1
        terms = [(sign, self.parse_term(), start)]
        while self.at_op("+-"):
            op = self.take()
            terms.append((-1 if op.text == "-" else 1, self.parse_term(), op))
        linear = [is_linear(node) for _, node, _ in terms]
        if not any(linear):
            total = ZERO
            for s, node, _ in terms:
                total = add(total, node.value if s > 0 else negate(node.value))
            return QuatLiteral(total, start.line, start.column)
        if not all(linear):
            _, _, at = terms[linear.index(False)]
            raise ConstantExpressionError(
                "constant term in a linear expression (affine terms are not supported)", at.line, at.column
            )
        if len(terms) == 1:
            s, node, _ = terms[0]
            return node if s > 0 else _negated(node)
        return Sum(tuple((s, node) for s, node, _ in terms), start.line, start.column)

    def parse_term(self) -> Node:
        start = self.peek()
        factors = [self.parse_factor()]
        while self.at_op("*"):
            self.take()
            factors.append(self.parse_factor())
        folded = []
        for node in factors:
            if isinstance(node, QuatLiteral) and folded and isinstance(folded[-1], QuatLiteral):
                prev = folded.pop()
                node = QuatLiteral(multiply(prev.value, node.value), prev.line, prev.column)
            folded.append(node)
        state = [node for node in folded if is_linear(node)]
        if len(state) > 1:
            raise NonlinearTermError(
                "product has more than one factor depending on q", state[1].line, state[1].column
            )
        if len(folded) == 1:
            return folded[0]
        if not state:
            return QuatLiteral(_product_of(n.value for n in folded), start.line, start.column)
        inner = state[0]
        literals = [node for node in folded if not is_linear(node)]
        if not isinstance(inner, StateVar) and all(node.value.is_real() for node in literals):
            weight = 1.0
            for node in literals:
                weight *= node.value.q0
            return ScalarWeight(weight, inner, start.line, start.column)
        return Product(tuple(folded), start.line, start.column)

    def parse_factor(self) -> Node:
        tok = self.peek()
        if tok.kind == "LITERAL":
            self.take()
            return QuatLiteral(tok.value, tok.line, tok.column)
        if tok.kind == "IDENT":
            self.take()
            if tok.text == STATE_SYMBOL:
                if self.at_op("("):
                    raise ExprSyntaxError("q is the state variable, not a function", tok.line, tok.column)
                return StateVar(tok.line, tok.column)
            if tok.text in UNIT_SYMBOLS:
                return QuatLiteral(basis(UNIT_SYMBOLS[tok.text]), tok.line, tok.column)
            if not self.at_op("("):
                raise ExprSyntaxError(f"expected '(' after function name {tok.text!r}", tok.line, tok.column)
            if tok.text not in self.bound:
                raise UnknownFunctionError(f"unknown function {tok.text!r}", tok.line, tok.column)
            self.take()
            argument = self.parse_expr()
            self.expect_op(")")
            if not is_linear(argument):
                raise ConstantExpressionError("function argument must depend on q", tok.line, tok.column)
            return Apply(tok.text, argument, tok.line, tok.column)
        if self.at_op("("):
            self.take()
            node = self.parse_expr()
            self.expect_op(")")
            return node
        found = tok.text or "end of input"
        raise ExprSyntaxError(f"expected a factor, found {found!r}", tok.line, tok.column)


def parse(src: str) -> list[Statement]:
    """Parse a program into (name or None, AST) statements."""
    return Parser(src).parse_program()


# --- Reduction ---------------------------------------------------------------------

class Environment(Mapping):
    """Function name -> reduced canonical form, in definition order. bind() returns a new one."""

    def __init__(self, bindings: Mapping[str, CanonicalForm] | None = None):
        self._bindings = dict(bindings or {})

    def __getitem__(self, name: str) -> CanonicalForm:
        return self._bindings[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self._bindings)

    def __len__(self) -> int:
        return len(self._bindings)

    def bind(self, name: str, form: CanonicalForm) -> "Environment":
        if name in self._bindings:
            raise RedefinitionError(f"function {name!r} is already defined")
        bindings = dict(self._bindings)
        bindings[name] = form
        return Environment(bindings)


def _split_product(node: Product) -> tuple[Quaternion, Node, Quaternion]:
    index = next(n for n, factor in enumerate(node.factors) if is_linear(factor))
    left = _product_of(f.value for f in node.factors[:index])
    right = _product_of(f.value for f in node.factors[index + 1:])
    return left, node.factors[index], right


def _direct_term(node: Node) -> tuple[Quaternion, Quaternion] | None:
    """(m, n) when node is m*q*n itself, else None."""
    if isinstance(node, StateVar):
        return ONE, ONE
    if isinstance(node, Product):
        left, inner, right = _split_product(node)
        if isinstance(inner, StateVar):
            return left, right
    return None


def reduce_expr(node: Node, env: Mapping[str, CanonicalForm], method: str = "matrix") -> CanonicalForm:
    """Structural reduction: products become one-term lists, sums of m*q*n terms reduce as one
    partitioned list, applications compose.
    """
    if isinstance(node, StateVar):
        return IDENTITY
    if isinstance(node, QuatLiteral):
        raise ConstantExpressionError("a constant is not a linear function of q", node.line, node.column)
    if isinstance(node, Product):
        left, inner, right = _split_product(node)
        outer = get_reducer(method).reduce([(left, right)])
        if isinstance(inner, StateVar):
            return outer
        return compose(outer, reduce_expr(inner, env, method))
    if isinstance(node, Sum):
        # m*q*n terms share one term list; everything else reduces on its own
        terms, total = [], ZERO_FORM
        for sign, term in node.terms:
            pair = _direct_term(term)
            if pair is not None:
                left, right = pair
                terms.append((left if sign > 0 else negate(left), right))
                continue
            form = reduce_expr(term, env, method)
            total = add_forms(total, form if sign > 0 else scale_form(-1.0, form))
        if terms:
            total = add_forms(total, reduce_partitioned(terms, method))
        return total
    if isinstance(node, ScalarWeight):
        return scale_form(node.weight, reduce_expr(node.expr, env, method))
    if isinstance(node, Apply):
        if node.name not in env:
            raise UnknownFunctionError(f"unknown function {node.name!r}", node.line, node.column)
        return compose(env[node.name], reduce_expr(node.argument, env, method))
    raise TypeError(f"not an expression node: {node!r}")


def reduce_program(
    program: str | Sequence[Statement],
    method: str = "matrix",
    env: Environment | None = None,
) -> tuple[Environment, CanonicalForm]:
    """Reduce every statement in order; the result is the value of the last one.
    Names already bound in env may be applied by the program.
    """
    env = env if env is not None else Environment()
    statements = Parser(program, tuple(env)).parse_program() if isinstance(program, str) else list(program)
    result = None
    for statement in statements:
        form = reduce_expr(statement.expr, env, method)
        if statement.name is not None:
            env = env.bind(statement.name, form)
        result = form
    logger.debug("Reduced %s statements (%s functions) with the %s method.", len(statements), len(env), method)
    return env, result


def interpret(node: Node, q: Quaternion, definitions: Mapping[str, Node]) -> Quaternion:
    """Evaluate the tree directly at q, without reducing anything."""
    if isinstance(node, StateVar):
        return q
    if isinstance(node, QuatLiteral):
        return node.value
    if isinstance(node, Product):
        return _product_of(interpret(f, q, definitions) for f in node.factors)
    if isinstance(node, Sum):
        total = ZERO
        for sign, term in node.terms:
            value = interpret(term, q, definitions)
            total = add(total, value if sign > 0 else negate(value))
        return total
    if isinstance(node, ScalarWeight):
        return scale(node.weight, interpret(node.expr, q, definitions))
    if isinstance(node, Apply):
        if node.name not in definitions:
            raise UnknownFunctionError(f"unknown function {node.name!r}", node.line, node.column)
        return interpret(definitions[node.name], interpret(node.argument, q, definitions), definitions)
    raise TypeError(f"not an expression node: {node!r}")


def interpret_program(program: str | Sequence[Statement], q: Quaternion) -> Quaternion:
    statements = parse(program) if isinstance(program, str) else list(program)
    definitions = {s.name: s.expr for s in statements if s.name is not None}
    return interpret(statements[-1].expr, q, definitions)


# --- Formatting --------------------------------------------------------------------

def _term_text(coefficient: Quaternion, tail: str, digits: int | None) -> tuple[bool, str] | None:
    """(negative, body) for coefficient*tail, or None for a zero coefficient."""
    if coefficient == ZERO:
        return None
    if coefficient.is_real():
        value = coefficient.q0
        magnitude = abs(value)
        body = tail if magnitude == 1 else f"{format_real(magnitude, digits)}*{tail}"
        return value < 0, body
    imaginary = [(axis, value) for axis, value in zip((Axis.I, Axis.J, Axis.K), list(coefficient)[1:]) if value != 0]
    if coefficient.q0 == 0 and len(imaginary) == 1:
        axis, value = imaginary[0]
        magnitude = abs(value)
        prefix = axis.symbol if magnitude == 1 else f"{format_real(magnitude, digits)}{axis.symbol}"
        return value < 0, f"{prefix}*{tail}"
    return False, f"{format_quaternion(coefficient, digits)}*{tail}"


def format_expression(f: CanonicalForm, digits: int | None = None) -> str:
    """A*q + B*q*i + C*q*j + D*q*k with zero terms dropped and unit coefficients elided."""
    pieces = []
    for coefficient, tail in zip(f, ("q", "q*i", "q*j", "q*k")):
        term = _term_text(coefficient, tail, digits)
        if term is None:
            continue
        negative, body = term
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces) if pieces else "0*q"


def format_form(f: CanonicalForm, style: str = "text", digits: int | None = None) -> str:
    if style == "text":
        return format_expression(f, digits)
    if style == "tuple":
        return format_tuple(f, digits)
    if style == "json":
        return json.dumps(form_to_json(f))
    raise ValueError(f"unknown format style {style!r} (choose from {', '.join(FORMAT_STYLES)})")
