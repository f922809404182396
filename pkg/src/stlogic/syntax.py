"""Abstract syntax, parser and printer for the modal language and sequents.

Grammar (ASCII only):

    atoms        [a-z][a-z0-9_]*        (keywords excluded)
    constants    top  bot  1
    prefix       nab                     box A is sugar for 1 -> A
    infix        *  &  |  ->             precedence nab > * > & > | > ->
    ->           right associative; * & | left associative
    sequents     F1, F2, ... => G   or   => G
"""

from __future__ import annotations

import re
from dataclasses import dataclass


class Formula:
    __slots__ = ()

    def __str__(self) -> str:
        return format_formula(self)


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class Top(Formula):
    pass


@dataclass(frozen=True)
class Bot(Formula):
    pass


@dataclass(frozen=True)
class One(Formula):
    pass


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Tensor(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Imp(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Nabla(Formula):
    body: Formula


TOP = Top()
BOT = Bot()
ONE = One()


def box(a: Formula) -> Formula:
    """The definitional box: 1 -> A, the right adjoint of nabla at a = 1."""
    return Imp(ONE, a)


@dataclass(frozen=True)
class Sequent:
    left: tuple[Formula, ...]
    right: Formula

    def __str__(self) -> str:
        return format_sequent(self)


class SyntaxError_(ValueError):
    def __init__(self, msg, pos):
        super().__init__(f"{msg} (at position {pos})")
        self.pos = pos


_TOKEN = re.compile(r"\s*(->|=>|[()*&|,]|1|[a-z][a-z0-9_]*)")
_KEYWORDS = {"top", "bot", "nab", "box"}
_ATOM = re.compile(r"[a-z][a-z0-9_]*$")


def _tokenize(text: str) -> list[tuple[str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise SyntaxError_(f"unexpected character {text[pos:].strip()[0]!r}",
                                   pos)
            break
        out.append((m.group(1), m.start(1)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.i = 0
        self.text = text

    def peek(self):
        return self.tokens[self.i][0] if self.i < len(self.tokens) else None

    def pos(self):
        return self.tokens[self.i][1] if self.i < len(self.tokens) else len(self.text)

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok[0]

    def expect(self, tok):
        if self.peek() != tok:
            raise SyntaxError_(f"expected {tok!r}", self.pos())
        self.take()

    def formula(self) -> Formula:
        left = self.or_level()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.formula())
        return left

    def or_level(self) -> Formula:
        f = self.and_level()
        while self.peek() == "|":
            self.take()
            f = Or(f, self.and_level())
        return f

    def and_level(self) -> Formula:
        f = self.tensor_level()
        while self.peek() == "&":
            self.take()
            f = And(f, self.tensor_level())
        return f

    def tensor_level(self) -> Formula:
        f = self.unary()
        while self.peek() == "*":
            self.take()
            f = Tensor(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok == "nab":
            self.take()
            return Nabla(self.unary())
        if tok == "box":
            self.take()
            return box(self.unary())
        return self.atomish()

    def atomish(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise SyntaxError_("unexpected end of input", self.pos())
        if tok == "(":
            self.take()
            f = self.formula()
            self.expect(")")
            return f
        if tok == "top":
            self.take()
            return TOP
        if tok == "bot":
            self.take()
            return BOT
        if tok == "1":
            self.take()
            return ONE
        if tok in _KEYWORDS or not _ATOM.match(tok):
            raise SyntaxError_(f"unexpected token {tok!r}", self.pos())
        self.take()
        return Atom(tok)


def parse_formula(text: str) -> Formula:
    p = _Parser(_tokenize(text), text)
    f = p.formula()
    if p.peek() is not None:
        raise SyntaxError_(f"trailing input {p.peek()!r}", p.pos())
    return f


def parse_sequent(text: str) -> Sequent:
    tokens = _tokenize(text)
    split = [i for i, (t, _) in enumerate(tokens) if t == "=>"]
    if len(split) != 1:
        raise SyntaxError_("a sequent needs exactly one '=>'",
                           tokens[split[1]][1] if len(split) > 1 else len(text))
    k = split[0]
    left: list[Formula] = []
    if k > 0:
        p = _Parser(tokens[:k], text)
        left.append(p.formula())
        while p.peek() == ",":
            p.take()
            left.append(p.formula())
        if p.peek() is not None:
            raise SyntaxError_(f"trailing input {p.peek()!r}", p.pos())
    p = _Parser(tokens[k + 1:], text)
    right = p.formula()
    if p.peek() is not None:
        raise SyntaxError_(f"trailing input {p.peek()!r}", p.pos())
    return Sequent(tuple(left), right)


_LEVEL_IMP, _LEVEL_OR, _LEVEL_AND, _LEVEL_TENSOR, _LEVEL_UNARY = range(5)


def _fmt(f: Formula, level: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Top):
        return "top"
    if isinstance(f, Bot):
        return "bot"
    if isinstance(f, One):
        return "1"
    if isinstance(f, Nabla):
        return "nab " + _fmt(f.body, _LEVEL_UNARY)
    if isinstance(f, Imp):
        s = _fmt(f.left, _LEVEL_OR) + " -> " + _fmt(f.right, _LEVEL_IMP)
        return f"({s})" if level > _LEVEL_IMP else s
    if isinstance(f, Or):
        s = _fmt(f.left, _LEVEL_OR) + " | " + _fmt(f.right, _LEVEL_AND)
        return f"({s})" if level > _LEVEL_OR else s
    if isinstance(f, And):
        s = _fmt(f.left, _LEVEL_AND) + " & " + _fmt(f.right, _LEVEL_TENSOR)
        return f"({s})" if level > _LEVEL_AND else s
    if isinstance(f, Tensor):
        s = _fmt(f.left, _LEVEL_TENSOR) + " * " + _fmt(f.right, _LEVEL_UNARY)
        return f"({s})" if level > _LEVEL_TENSOR else s
    raise TypeError(f"not a formula: {f!r}")


def format_formula(f: Formula) -> str:
    return _fmt(f, _LEVEL_IMP)


def format_sequent(s: Sequent) -> str:
    if not s.left:
        return "=> " + format_formula(s.right)
    return ", ".join(format_formula(f) for f in s.left) + " => " + \
        format_formula(s.right)


def subformulas(f: Formula) -> set[Formula]:
    out = {f}
    if isinstance(f, (And, Or, Tensor, Imp)):
        out |= subformulas(f.left) | subformulas(f.right)
    elif isinstance(f, Nabla):
        out |= subformulas(f.body)
    return out


def atoms_of(f: Formula) -> set[str]:
    return {g.name for g in subformulas(f) if isinstance(g, Atom)}


def sequent_atoms(s: Sequent) -> set[str]:
    out = atoms_of(s.right)
    for f in s.left:
        out |= atoms_of(f)
    return out


def depth(f: Formula) -> int:
    """Connective nesting depth; atoms and constants have depth 0."""
    if isinstance(f, (Atom, Top, Bot, One)):
        return 0
    if isinstance(f, Nabla):
        return 1 + depth(f.body)
    return 1 + max(depth(f.left), depth(f.right))


def has_nabla(f: Formula) -> bool:
    return any(isinstance(g, Nabla) for g in subformulas(f))


class NablaInInput(ValueError):
    pass


def nabla_translate(f: Formula) -> Formula:
    """The modality translation of the modality-free language.

    p maps to nab box p, bot to bot, top to nab box top, 1 to 1; meets get
    guarded by nab box, joins and tensors commute, and implications pick up
    an outer nab.
    """
    if has_nabla(f):
        raise NablaInInput("input must be nabla-free")
    return _translate(f)


def _translate(f: Formula) -> Formula:
    if isinstance(f, Atom):
        return Nabla(box(f))
    if isinstance(f, Bot):
        return BOT
    if isinstance(f, Top):
        return Nabla(box(TOP))
    if isinstance(f, One):
        return ONE
    if isinstance(f, And):
        return Nabla(box(And(_translate(f.left), _translate(f.right))))
    if isinstance(f, Or):
        return Or(_translate(f.left), _translate(f.right))
    if isinstance(f, Tensor):
        return Tensor(_translate(f.left), _translate(f.right))
    if isinstance(f, Imp):
        return Nabla(Imp(_translate(f.left), _translate(f.right)))
    raise TypeError(f"not a formula: {f!r}")


def translate_sequent(s: Sequent) -> Sequent:
    return Sequent(tuple(nabla_translate(f) for f in s.left),
                   nabla_translate(s.right))


def formula_sort_key(f: Formula) -> str:
    return format_formula(f)
