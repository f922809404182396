"""Sequent calculus proof certificates and the schema-exact checker.

Every node of a proof tree names its rule; the checker rebuilds the rule
schema from the premises and verifies that the conclusion matches exactly.
No admissible steps are accepted: structural moves must appear as explicit
l-weak/l-contr/l-exch nodes and are only legal in structural logics, and
scheme rules are only legal when the logic enables the scheme.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Optional

from ..syntax import (
    And, Atom, Bot, Formula, Imp, Nabla, One, Or, Sequent, Tensor, Top,
    BOT, ONE, TOP, format_sequent, parse_sequent,
)

SUBINT_SYSTEMS = ("KPC", "EKPC", "KTPC", "BPC", "EBPC", "IPC")

EMBED_SCHEMES = {
    "KPC": (),
    "EKPC": ("wF",),
    "KTPC": ("F",),
    "BPC": ("P",),
    "EBPC": ("P", "wF"),
    "IPC": ("P", "F"),
}


@dataclass(frozen=True)
class LogicSpec:
    """A sequent logic: STL plus schemes, optionally with structural rules.

    Weak-implication systems are accepted as a base and denote their image
    under the embedding (always structural).
    """

    base: str = "STL"
    schemes: frozenset = frozenset()
    structural: bool = False

    def __post_init__(self):
        if self.base not in ("STL",) + SUBINT_SYSTEMS:
            raise ValueError(f"unknown base logic {self.base!r}")
        object.__setattr__(self, "schemes", frozenset(self.schemes))
        for s in self.schemes:
            if s not in ("N", "H", "P", "F", "wF"):
                raise ValueError(f"unknown scheme {s!r}")

    @property
    def effective_schemes(self) -> frozenset:
        if self.base == "STL":
            return self.schemes
        return self.schemes | frozenset(EMBED_SCHEMES[self.base])

    @property
    def effective_structural(self) -> bool:
        return self.structural or self.base != "STL"

    @property
    def is_subint(self) -> bool:
        return self.base != "STL"

    def name(self) -> str:
        if self.base != "STL":
            return self.base
        tag = "iSTL" if self.structural else "STL"
        if self.schemes:
            return f"{tag}({','.join(sorted(self.schemes))})"
        return tag

    @classmethod
    def parse(cls, text: str, extra_schemes=(), structural=False) -> "LogicSpec":
        text = text.strip()
        if text in SUBINT_SYSTEMS and text != "IPC":
            return cls(text, frozenset(extra_schemes), True)
        base = text
        schemes = set(extra_schemes)
        if "(" in text:
            base, _, rest = text.partition("(")
            schemes |= {s.strip() for s in rest.rstrip(")").split(",") if s.strip()}
        if base == "FL_l":
            base, schemes = "STL", schemes | {"P", "F"}
        elif base == "IPC":
            base, schemes, structural = "STL", schemes | {"P", "F"}, True
        if base == "iSTL":
            base, structural = "STL", True
        if base != "STL":
            raise ValueError(f"cannot parse logic {text!r}")
        return cls("STL", frozenset(schemes), structural)


STL = LogicSpec("STL")
ISTL = LogicSpec("STL", structural=True)
FL_L = LogicSpec("STL", frozenset({"P", "F"}))
IPC = LogicSpec("STL", frozenset({"P", "F"}), structural=True)


@dataclass(frozen=True)
class ProofTree:
    rule: str
    sequent: Sequent
    premises: tuple = ()


class ProofCheckError(ValueError):
    def __init__(self, msg, path=()):
        loc = "root" if not path else ".".join(str(i) for i in path)
        super().__init__(f"at {loc}: {msg}")
        self.path = path


class RuleMismatch(ProofCheckError):
    pass


class SchemeNotEnabled(ProofCheckError):
    pass


class StructuralNotEnabled(ProofCheckError):
    pass


def _nabla_seq(gamma) -> tuple:
    return tuple(Nabla(g) for g in gamma)


def _check_node(node: ProofTree, logic: LogicSpec, path) -> None:
    rule = node.rule
    c = node.sequent
    prem = tuple(p.sequent for p in node.premises)

    def fail(expected: str):
        raise RuleMismatch(
            f"rule {rule!r} does not justify {format_sequent(c)!r} "
            f"(expected {expected})", path)

    def need(n: int):
        if len(prem) != n:
            fail(f"{n} premise(s)")

    if rule == "ax-id":
        need(0)
        if c.left != (c.right,):
            fail("A => A")
    elif rule == "ax-one":
        need(0)
        if c.left or c.right != ONE:
            fail("=> 1")
    elif rule == "ax-nabla-one":
        need(0)
        if c.left != (Nabla(ONE),) or c.right != ONE:
            fail("nab 1 => 1")
    elif rule == "ax-top":
        need(0)
        if c.right != TOP:
            fail("Gamma => top")
    elif rule == "ax-bot":
        need(0)
        if BOT not in c.left:
            fail("Gamma, bot, Sigma => A")
    elif rule == "cut":
        need(2)
        s1, s2 = prem
        a = s1.right
        if c.right != s2.right:
            fail("conclusion right side from the second premise")
        for k, g in enumerate(s2.left):
            if g == a and s2.left[:k] + s1.left + s2.left[k + 1:] == c.left:
                return
        fail("Pi, Gamma, Sigma => B from Gamma => A and Pi, A, Sigma => B")
    elif rule in ("l-and-1", "l-and-2"):
        need(1)
        s = prem[0]
        if s.right != c.right:
            fail("same right side")
        for k, g in enumerate(c.left):
            if isinstance(g, And):
                part = g.left if rule == "l-and-1" else g.right
                if c.left[:k] + (part,) + c.left[k + 1:] == s.left:
                    return
        fail("Gamma, A&B, Sigma => C from one conjunct")
    elif rule == "r-and":
        need(2)
        s1, s2 = prem
        if not isinstance(c.right, And):
            fail("right side A & B")
        if s1.left != c.left or s2.left != c.left:
            fail("premises share the conclusion context")
        if s1.right != c.right.left or s2.right != c.right.right:
            fail("premises prove the conjuncts")
    elif rule == "l-or":
        need(2)
        s1, s2 = prem
        if s1.right != c.right or s2.right != c.right:
            fail("same right side")
        for k, g in enumerate(c.left):
            if isinstance(g, Or):
                if (c.left[:k] + (g.left,) + c.left[k + 1:] == s1.left
                        and c.left[:k] + (g.right,) + c.left[k + 1:] == s2.left):
                    return
        fail("Gamma, A|B, Sigma => C from both disjuncts")
    elif rule in ("r-or-1", "r-or-2"):
        need(1)
        s = prem[0]
        if not isinstance(c.right, Or) or s.left != c.left:
            fail("right side A | B over the same context")
        part = c.right.left if rule == "r-or-1" else c.right.right
        if s.right != part:
            fail("premise proves the chosen disjunct")
    elif rule == "l-one":
        need(1)
        s = prem[0]
        if s.right != c.right:
            fail("same right side")
        for k, g in enumerate(c.left):
            if g == ONE and c.left[:k] + c.left[k + 1:] == s.left:
                return
        fail("Gamma, 1, Sigma => A from Gamma, Sigma => A")
    elif rule == "l-tensor":
        need(1)
        s = prem[0]
        if s.right != c.right:
            fail("same right side")
        for k, g in enumerate(c.left):
            if isinstance(g, Tensor):
                if c.left[:k] + (g.left, g.right) + c.left[k + 1:] == s.left:
                    return
        fail("Gamma, A*B, Sigma => C from Gamma, A, B, Sigma => C")
    elif rule == "r-tensor":
        need(2)
        s1, s2 = prem
        if not isinstance(c.right, Tensor):
            fail("right side A * B")
        if (s1.right != c.right.left or s2.right != c.right.right
                or s1.left + s2.left != c.left):
            fail("Gamma, Sigma => A * B from Gamma => A and Sigma => B")
    elif rule == "nabla":
        need(1)
        s = prem[0]
        if (len(s.left) != 1 or c.left != (Nabla(s.left[0]),)
                or c.right != Nabla(s.right)):
            fail("nab A => nab B from A => B")
    elif rule == "oplax":
        need(1)
        s = prem[0]
        if (len(s.left) != 2
                or not isinstance(s.left[0], Nabla)
                or not isinstance(s.left[1], Nabla)
                or s.right != c.right
                or c.left != (Nabla(Tensor(s.left[0].body, s.left[1].body)),)):
            fail("nab (A*B) => C from nab A, nab B => C")
    elif rule == "l-imp":
        need(2)
        s1, s2 = prem
        if c.right != s2.right:
            fail("conclusion right side from the second premise")
        a, b = s1.right, None
        for j in range(len(s2.left)):
            b = s2.left[j]
            pi, sigma = s2.left[:j], s2.left[j + 1:]
            want = pi + s1.left + (Nabla(Imp(a, b)),) + sigma
            if want == c.left:
                return
        fail("Pi, Gamma, nab(A->B), Sigma => C")
    elif rule == "r-imp":
        need(1)
        s = prem[0]
        if not isinstance(c.right, Imp):
            fail("right side A -> B")
        a, b = c.right.left, c.right.right
        if s.right != b or s.left != (a,) + _nabla_seq(c.left):
            fail("A, nab Gamma => B")
    elif rule == "scheme-N":
        _need_scheme(logic, "N", path)
        need(1)
        s = prem[0]
        if c.left != _nabla_seq(s.left) or c.right != Nabla(s.right):
            fail("nab Gamma => nab A from Gamma => A")
    elif rule == "scheme-H":
        _need_scheme(logic, "H", path)
        need(1)
        s = prem[0]
        if c.right != Nabla(s.right):
            fail("nab C on the right")
        for k in range(len(s.left) + 1):
            gamma, block = s.left[:k], s.left[k:]
            if not all(isinstance(f, Imp) for f in block):
                continue
            want = _nabla_seq(gamma) + tuple(
                Imp(Nabla(f.left), Nabla(f.right)) for f in block)
            if want == c.left:
                return
        fail("nab Gamma, {nab A -> nab B} => nab C")
    elif rule == "scheme-P":
        _need_scheme(logic, "P", path)
        need(1)
        s = prem[0]
        if s.left != c.left or s.right != Nabla(c.right):
            fail("Gamma => A from Gamma => nab A")
    elif rule == "scheme-F":
        _need_scheme(logic, "F", path)
        need(1)
        s = prem[0]
        if s.left != c.left or not isinstance(c.right, Nabla) \
                or c.right.body != s.right:
            fail("Gamma => nab A from Gamma => A")
    elif rule == "scheme-wF":
        _need_scheme(logic, "wF", path)
        need(1)
        s = prem[0]
        if (len(c.left) != 1 or c.right != BOT
                or s.left != (Nabla(c.left[0]),) or s.right != BOT):
            fail("A => bot from nab A => bot")
    elif rule == "l-weak":
        _need_structural(logic, path)
        need(1)
        s = prem[0]
        if s.right != c.right:
            fail("same right side")
        for k in range(len(c.left)):
            if c.left[:k] + c.left[k + 1:] == s.left:
                return
        fail("one inserted formula")
    elif rule == "l-contr":
        _need_structural(logic, path)
        need(1)
        s = prem[0]
        if s.right != c.right:
            fail("same right side")
        for k in range(len(c.left)):
            if c.left[:k + 1] + (c.left[k],) + c.left[k + 1:] == s.left:
                return
        fail("Gamma, A, Sigma => B from Gamma, A, A, Sigma => B")
    elif rule == "l-exch":
        _need_structural(logic, path)
        need(1)
        s = prem[0]
        if s.right != c.right or len(s.left) != len(c.left):
            fail("same right side and length")
        for k in range(len(c.left) - 1):
            swapped = (c.left[:k] + (c.left[k + 1], c.left[k])
                       + c.left[k + 2:])
            if swapped == s.left:
                return
        fail("two adjacent formulas swapped")
    else:
        raise RuleMismatch(f"unknown rule {rule!r}", path)


def _need_scheme(logic: LogicSpec, scheme: str, path):
    if scheme not in logic.effective_schemes:
        raise SchemeNotEnabled(
            f"scheme {scheme} is not part of {logic.name()}", path)


def _need_structural(logic: LogicSpec, path):
    if not logic.effective_structural:
        raise StructuralNotEnabled(
            f"structural rules are not part of {logic.name()}", path)


def check_proof(tree: ProofTree, logic: LogicSpec) -> None:
    """Validate every node; raises ProofCheckError with the failing path."""
    stack = [(tree, ())]
    while stack:
        node, path = stack.pop()
        _check_node(node, logic, path)
        for i, p in enumerate(node.premises):
            stack.append((p, path + (i,)))


def is_valid_proof(tree: ProofTree, logic: LogicSpec) -> bool:
    try:
        check_proof(tree, logic)
        return True
    except ProofCheckError:
        return False


def proof_size(tree: ProofTree) -> int:
    return 1 + sum(proof_size(p) for p in tree.premises)


# -- serialization -----------------------------------------------------------

def proof_to_sexpr(tree: ProofTree, indent: int = 0) -> str:
    pad = "  " * indent
    head = f'{pad}(rule {tree.rule} (sequent "{format_sequent(tree.sequent)}")'
    if not tree.premises:
        return head + ")"
    parts = [head]
    for p in tree.premises:
        parts.append(proof_to_sexpr(p, indent + 1))
    parts[-1] += ")"
    return "\n".join(parts)


class SexprError(ValueError):
    pass


def _sexpr_tokens(text: str) -> Iterator[str]:
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "()":
            yield ch
            i += 1
        elif ch == '"':
            j = text.index('"', i + 1)
            yield text[i:j + 1]
            i = j + 1
        else:
            j = i
            while j < len(text) and not text[j].isspace() and text[j] not in '()"':
                j += 1
            yield text[i:j]
            i = j


def proof_from_sexpr(text: str) -> ProofTree:
    tokens = list(_sexpr_tokens(text))
    pos = 0

    def parse() -> ProofTree:
        nonlocal pos
        if tokens[pos] != "(" or tokens[pos + 1] != "rule":
            raise SexprError(f"expected '(rule', got {tokens[pos:pos+2]}")
        rule = tokens[pos + 2]
        if tokens[pos + 3] != "(" or tokens[pos + 4] != "sequent":
            raise SexprError("expected '(sequent \"...\")'")
        seq_text = tokens[pos + 5]
        if not (seq_text.startswith('"') and seq_text.endswith('"')):
            raise SexprError("sequent must be quoted")
        if tokens[pos + 6] != ")":
            raise SexprError("unclosed sequent")
        pos += 7
        premises = []
        while tokens[pos] == "(":
            premises.append(parse())
        if tokens[pos] != ")":
            raise SexprError("unclosed rule")
        pos += 1
        return ProofTree(rule, parse_sequent(seq_text[1:-1]), tuple(premises))

    tree = parse()
    if pos != len(tokens):
        raise SexprError("trailing input")
    return tree
