"""The little expression language used on the command line.

Grammar, whitespace insignificant:

    expr   := ('+' | '-')? term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ('[' expr ']')*          brackets after an atom: plethysm
    atom   := BASIS PART                    p h e m s
            | NUMBER                        nonnegative integer literal
            | '(' expr ')'
            | FUNC '(' expr (',' expr)? ')'
            | '[' int (',' int)* ']'        partition literal, for coeff
    FUNC   := scalar | kron | dim | ones | coeff

A partition can be attached to a basis letter as a single token (h3,
h12) or in brackets (h[3], s[2,1], h[] for the empty index).  A bracket
immediately after a basis letter is its partition; any further bracket
group is a plethysm argument, so h[2][h[2]] and h2[h2] agree.  Partition
entries given out of order are sorted with a warning.

Evaluation produces either a SymFn or an exact rational; partition
literals are only meaningful as the second argument of coeff.
"""

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .errors import ExprError
from .partitions import Partition
from .symfunc import (SymFn, dimension, generator, kronecker,
                      monomial_coefficient, scalar, specialize_ones)
from .plethysm import plethysm

FUNCS = ("scalar", "kron", "dim", "ones", "coeff")
BASIS_LETTERS = "phems"


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class BasisAtom:
    basis: str
    parts: Partition


@dataclass(frozen=True)
class PartitionLit:
    parts: Partition


@dataclass(frozen=True)
class BinOp:
    op: str
    left: object
    right: object


@dataclass(frozen=True)
class Pleth:
    outer: object
    inner: object


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


class _Token:
    __slots__ = ("kind", "value", "pos")

    def __init__(self, kind, value, pos):
        self.kind = kind
        self.value = value
        self.pos = pos

    def __repr__(self):
        return "_Token(%r, %r, %d)" % (self.kind, self.value, self.pos)


def _tokenize(text):
    tokens = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("num", int(text[i:j]), i))
            i = j
            continue
        if c.isalpha():
            j = i
            while j < len(text) and text[j].isalpha():
                j += 1
            tokens.append(_Token("name", text[i:j], i))
            i = j
            continue
        if c in "+-*()[],":
            tokens.append(_Token(c, c, i))
            i += 1
            continue
        raise ExprError("unexpected character %r" % c, i)
    tokens.append(_Token("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind):
        tok = self.next()
        if tok.kind != kind:
            raise ExprError("expected %r, found %r" % (kind, tok.value), tok.pos)
        return tok

    def parse(self):
        node = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ExprError("trailing input starting at %r" % (tok.value,), tok.pos)
        return node

    def expr(self):
        if self.peek().kind in ("+", "-"):
            sign = self.next()
            first = self.term()
            node = first if sign.kind == "+" else BinOp("-", Num(0), first)
        else:
            node = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.next().kind
            node = BinOp(op, node, self.term())
        return node

    def term(self):
        node = self.factor()
        while self.peek().kind == "*":
            self.next()
            node = BinOp("*", node, self.factor())
        return node

    def factor(self):
        node = self.atom()
        while self.peek().kind == "[":
            self.next()
            inner = self.expr()
            self.expect("]")
            node = Pleth(node, inner)
        return node

    def atom(self):
        tok = self.next()
        if tok.kind == "num":
            return Num(tok.value)
        if tok.kind == "(":
            node = self.expr()
            self.expect(")")
            return node
        if tok.kind == "[":
            return PartitionLit(self.partition_body(tok.pos))
        if tok.kind == "name":
            if tok.value in FUNCS:
                return self.call(tok)
            if len(tok.value) == 1 and tok.value in BASIS_LETTERS:
                return BasisAtom(tok.value, self.basis_part(tok))
            raise ExprError("unknown name %r" % tok.value, tok.pos)
        raise ExprError("expected a value, found %r" % (tok.value,), tok.pos)

    def call(self, tok):
        self.expect("(")
        args = [self.expr()]
        if self.peek().kind == ",":
            self.next()
            args.append(self.expr())
        self.expect(")")
        return Call(tok.value, tuple(args))

    def basis_part(self, tok):
        nxt = self.peek()
        if nxt.kind == "num" and nxt.pos == tok.pos + 1:
            # single-token form like h3 or h12
            self.next()
            return Partition((nxt.value,)) if nxt.value else Partition()
        if nxt.kind == "[":
            self.next()
            return self.partition_body(nxt.pos)
        raise ExprError("basis letter %r needs a partition" % tok.value, tok.pos)

    def partition_body(self, open_pos):
        entries = []
        if self.peek().kind == "]":
            self.next()
            return Partition()
        while True:
            tok = self.next()
            if tok.kind != "num":
                raise ExprError("partition entries must be integers, found %r"
                                % (tok.value,), tok.pos)
            if tok.value <= 0:
                raise ExprError("partition entries must be positive", tok.pos)
            entries.append(tok.value)
            tok = self.next()
            if tok.kind == "]":
                break
            if tok.kind != ",":
                raise ExprError("expected ',' or ']' in partition", tok.pos)
        ordered = sorted(entries, reverse=True)
        if ordered != entries:
            warnings.warn("partition %r is not weakly decreasing; sorted to %s"
                          % (entries, ordered))
        return Partition(ordered)


def parse(text):
    """Parse the expression language into a syntax tree."""
    return _Parser(text).parse()


def pretty(node):
    """Canonical text for a tree; parses back to an equal tree."""
    if isinstance(node, Num):
        return str(node.value)
    if isinstance(node, BasisAtom):
        return "%s%s" % (node.basis, node.parts)
    if isinstance(node, PartitionLit):
        return str(node.parts)
    if isinstance(node, BinOp):
        left = pretty(node.left)
        right = pretty(node.right)
        if node.op == "*":
            if isinstance(node.left, BinOp) and node.left.op in "+-":
                left = "(%s)" % left
            if isinstance(node.right, BinOp) and node.right.op in "+-":
                right = "(%s)" % right
        elif isinstance(node.right, BinOp) and node.right.op in "+-":
            right = "(%s)" % right
        return "%s %s %s" % (left, node.op, right)
    if isinstance(node, Pleth):
        outer = pretty(node.outer)
        if isinstance(node.outer, (BinOp, Num)):
            outer = "(%s)" % outer
        return "%s[%s]" % (outer, pretty(node.inner))
    if isinstance(node, Call):
        return "%s(%s)" % (node.func, ", ".join(pretty(a) for a in node.args))
    raise TypeError("not an expression node: %r" % (node,))


def _as_symfn(value, what):
    if isinstance(value, SymFn):
        return value
    if isinstance(value, (int, Fraction)):
        return SymFn("p", {Partition(): Fraction(value)})
    raise ExprError("%s must be a symmetric function, not a partition" % what)


def _as_rational(value, what):
    if isinstance(value, SymFn):
        raise ExprError("%s must be a number" % what)
    return value


def evaluate(node):
    """Evaluate a tree to a SymFn, a Fraction, or a Partition."""
    if isinstance(node, Num):
        return Fraction(node.value)
    if isinstance(node, BasisAtom):
        return generator(node.basis, node.parts)
    if isinstance(node, PartitionLit):
        return node.parts
    if isinstance(node, BinOp):
        left = evaluate(node.left)
        right = evaluate(node.right)
        if isinstance(left, Partition) or isinstance(right, Partition):
            raise ExprError("partitions do not support %r" % node.op)
        if node.op == "*":
            return left * right
        if isinstance(left, SymFn) or isinstance(right, SymFn):
            left = _as_symfn(left, "operand")
            right = _as_symfn(right, "operand")
        return left + right if node.op == "+" else left - right
    if isinstance(node, Pleth):
        outer = evaluate(node.outer)
        inner = evaluate(node.inner)
        return plethysm(_as_symfn(outer, "plethysm outer"),
                        _as_symfn(inner, "plethysm inner"))
    if isinstance(node, Call):
        return _call(node)
    raise TypeError("not an expression node: %r" % (node,))


def _call(node):
    args = [evaluate(a) for a in node.args]
    want = 2 if node.func in ("scalar", "kron", "coeff") else 1
    if len(args) != want:
        raise ExprError("%s takes %d argument%s" % (node.func, want,
                                                    "s" if want > 1 else ""))
    if node.func == "scalar":
        return scalar(_as_symfn(args[0], "scalar argument"),
                      _as_symfn(args[1], "scalar argument"))
    if node.func == "kron":
        return kronecker(_as_symfn(args[0], "kron argument"),
                         _as_symfn(args[1], "kron argument"))
    if node.func == "dim":
        return dimension(_as_symfn(args[0], "dim argument"))
    if node.func == "ones":
        return specialize_ones(_as_symfn(args[0], "ones argument"))
    if node.func == "coeff":
        if not isinstance(args[1], Partition):
            raise ExprError("the second argument of coeff must be a "
                            "partition literal like [2,1]")
        return monomial_coefficient(_as_symfn(args[0], "coeff argument"), args[1])
    raise ExprError("unknown function %r" % node.func)


def evaluate_text(text):
    return evaluate(parse(text))
