"""Bounded backward proof search.

Sound but deliberately incomplete: cuts are restricted to the analytic set
(subformulas of the goal plus their nabla- and box-closures), and the
depth bound means a miss is always inconclusive, never a refutation.
Non-structural search works on exact sequences; structural search works on
sets of formulas (weakening, contraction and exchange make multiplicity
and order irrelevant for provability) and the found sketch is then
reassembled into a schema-exact tree with explicit structural steps.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..syntax import (
    And, Bot, Formula, Imp, Nabla, One, Or, Sequent, Tensor, Top,
    BOT, ONE, TOP, subformulas,
)
from .rules import LogicSpec, ProofTree
from .tactics import (
    arrange, ax_bot, ax_id, ax_nabla_one, ax_one, ax_top, canonical_left,
    canonicalize, cut, l_and1, l_and2, l_imp, l_one, l_or, l_tensor,
    nabla_rule, oplax, r_and, r_imp, r_or1, r_or2, r_tensor, scheme_f,
    scheme_h, scheme_n, scheme_p, scheme_wf,
)


class DepthExhausted(Exception):
    """Search gave up; inconclusive, not a refutation."""


def analytic_cut_formulas(s: Sequent) -> tuple[Formula, ...]:
    base = set()
    for f in s.left + (s.right,):
        base |= subformulas(f)
    boxed = base | {Imp(ONE, f) for f in base}
    closed = boxed | {Nabla(f) for f in boxed}
    return canonical_left(closed)


def search_proof(s: Sequent, logic: LogicSpec, depth: int,
                 allow_cut: bool = True) -> Optional[ProofTree]:
    """A proof tree passing check_proof, or None when the bound is hit."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    cuts = analytic_cut_formulas(s) if allow_cut else ()
    if logic.effective_structural:
        return _StructuralSearch(logic, cuts).run(s, depth)
    return _ExactSearch(logic, cuts).run(s, depth)


# -- exact (non-structural) search ------------------------------------------

class _ExactSearch:
    def __init__(self, logic: LogicSpec, cuts):
        self.schemes = logic.effective_schemes
        self.cuts = cuts
        self.failed: dict = {}

    def run(self, s: Sequent, depth: int) -> Optional[ProofTree]:
        return self.prove(s, depth)

    def prove(self, s: Sequent, depth: int) -> Optional[ProofTree]:
        if depth <= 0:
            return None
        if self.failed.get(s, 0) >= depth:
            return None
        tree = self.attempt(s, depth)
        if tree is None:
            if self.failed.get(s, 0) < depth:
                self.failed[s] = depth
        return tree

    def attempt(self, s: Sequent, depth: int) -> Optional[ProofTree]:
        left, right = s.left, s.right
        if left == (right,):
            return ax_id(right)
        if not left and right == ONE:
            return ax_one()
        if left == (Nabla(ONE),) and right == ONE:
            return ax_nabla_one()
        if right == TOP:
            return ax_top(left)
        if BOT in left:
            return ax_bot(left, right)
        d = depth - 1
        # right rules
        if isinstance(right, And):
            t1 = self.prove(Sequent(left, right.left), d)
            if t1:
                t2 = self.prove(Sequent(left, right.right), d)
                if t2:
                    return r_and(t1, t2)
        if isinstance(right, Or):
            t = self.prove(Sequent(left, right.left), d)
            if t:
                return r_or1(t, right.right)
            t = self.prove(Sequent(left, right.right), d)
            if t:
                return r_or2(t, right.left)
        if isinstance(right, Tensor):
            for k in range(len(left) + 1):
                t1 = self.prove(Sequent(left[:k], right.left), d)
                if not t1:
                    continue
                t2 = self.prove(Sequent(left[k:], right.right), d)
                if t2:
                    return r_tensor(t1, t2)
        if isinstance(right, Imp):
            prem = (right.left,) + tuple(Nabla(g) for g in left)
            t = self.prove(Sequent(prem, right.right), d)
            if t:
                return r_imp(t)
        # left rules
        for k, f in enumerate(left):
            rest_l, rest_r = left[:k], left[k + 1:]
            if isinstance(f, And):
                t = self.prove(Sequent(rest_l + (f.left,) + rest_r, right), d)
                if t:
                    return l_and1(t, k, f.right)
                t = self.prove(Sequent(rest_l + (f.right,) + rest_r, right), d)
                if t:
                    return l_and2(t, k, f.left)
            elif isinstance(f, Or):
                t1 = self.prove(Sequent(rest_l + (f.left,) + rest_r, right), d)
                if t1:
                    t2 = self.prove(
                        Sequent(rest_l + (f.right,) + rest_r, right), d)
                    if t2:
                        return l_or(t1, t2, k)
            elif f == ONE:
                t = self.prove(Sequent(rest_l + rest_r, right), d)
                if t:
                    return l_one(t, k)
            elif isinstance(f, Tensor):
                t = self.prove(
                    Sequent(rest_l + (f.left, f.right) + rest_r, right), d)
                if t:
                    return l_tensor(t, k)
            elif isinstance(f, Nabla) and isinstance(f.body, Imp):
                # the principal nab(A->B): split the prefix into Pi | Gamma
                a, b = f.body.left, f.body.right
                for i in range(k + 1):
                    t1 = self.prove(Sequent(left[i:k], a), d)
                    if not t1:
                        continue
                    t2 = self.prove(Sequent(left[:i] + (b,) + rest_r, right), d)
                    if t2:
                        return l_imp(t1, t2, i)
        # modal rules (exact shapes)
        if len(left) == 1 and isinstance(left[0], Nabla) \
                and isinstance(right, Nabla):
            t = self.prove(Sequent((left[0].body,), right.body), d)
            if t:
                return nabla_rule(t)
        if len(left) == 1 and isinstance(left[0], Nabla) \
                and isinstance(left[0].body, Tensor):
            body = left[0].body
            t = self.prove(
                Sequent((Nabla(body.left), Nabla(body.right)), right), d)
            if t:
                return oplax(t)
        # schemes
        if "N" in self.schemes and isinstance(right, Nabla) \
                and all(isinstance(f, Nabla) for f in left):
            t = self.prove(
                Sequent(tuple(f.body for f in left), right.body), d)
            if t:
                return scheme_n(t)
        if "H" in self.schemes and isinstance(right, Nabla):
            tree = self._try_h(left, right, d)
            if tree:
                return tree
        if "P" in self.schemes:
            t = self.prove(Sequent(left, Nabla(right)), d)
            if t:
                return scheme_p(t)
        if "F" in self.schemes and isinstance(right, Nabla):
            t = self.prove(Sequent(left, right.body), d)
            if t:
                return scheme_f(t)
        if "wF" in self.schemes and right == BOT and len(left) == 1:
            t = self.prove(Sequent((Nabla(left[0]),), BOT), d)
            if t:
                return scheme_wf(t)
        # analytic cut, last
        if self.cuts and depth >= 3:
            for formula in self.cuts:
                for i in range(len(left) + 1):
                    for j in range(i, len(left) + 1):
                        if j == i + 1 and left[i] == formula:
                            continue  # cutting a formula out for itself
                        t1 = self.prove(Sequent(left[i:j], formula), d)
                        if not t1:
                            continue
                        t2 = self.prove(
                            Sequent(left[:i] + (formula,) + left[j:], right), d)
                        if t2:
                            return cut(t1, t2, i)
        return None

    def _try_h(self, left, right, d):
        for k in range(len(left) + 1):
            gamma, block = left[:k], left[k:]
            if not all(isinstance(f, Nabla) for f in gamma):
                continue
            strips = []
            ok = True
            for f in block:
                if (isinstance(f, Imp) and isinstance(f.left, Nabla)
                        and isinstance(f.right, Nabla)):
                    strips.append(Imp(f.left.body, f.right.body))
                else:
                    ok = False
                    break
            if not ok:
                continue
            prem = tuple(f.body for f in gamma) + tuple(strips)
            t = self.prove(Sequent(prem, right.body), d)
            if t:
                return scheme_h(t, k)
        return None


# -- structural search -------------------------------------------------------

@dataclass(frozen=True)
class _Sketch:
    rule: str
    state: tuple            # (frozenset left, right)
    payload: tuple = ()
    children: tuple = ()


class _StructuralSearch:
    """Set-based search; principal formulas are kept in the context so that
    implications can be reused (contraction is implicit in the set state)."""

    def __init__(self, logic: LogicSpec, cuts):
        self.schemes = logic.effective_schemes
        self.cuts = cuts
        self.failed: dict = {}

    def run(self, s: Sequent, depth: int) -> Optional[ProofTree]:
        state = (frozenset(s.left), s.right)
        sketch = self.prove(state, depth)
        if sketch is None:
            return None
        tree = _realize(sketch)
        return arrange(tree, s.left)

    def prove(self, state, depth) -> Optional[_Sketch]:
        if depth <= 0:
            return None
        if self.failed.get(state, 0) >= depth:
            return None
        sk = self.attempt(state, depth)
        if sk is None and self.failed.get(state, 0) < depth:
            self.failed[state] = depth
        return sk

    def attempt(self, state, depth) -> Optional[_Sketch]:
        left, right = state
        if right in left:
            return _Sketch("ax-id", state)
        if right == ONE:
            return _Sketch("ax-one", state)
        if right == TOP:
            return _Sketch("ax-top", state)
        if BOT in left:
            return _Sketch("ax-bot", state)
        if Nabla(ONE) in left and right == ONE:
            return _Sketch("ax-nabla-one", state)
        d = depth - 1
        if isinstance(right, And):
            s1 = self.prove((left, right.left), d)
            if s1:
                s2 = self.prove((left, right.right), d)
                if s2:
                    return _Sketch("r-and", state, (), (s1, s2))
        if isinstance(right, Or):
            s1 = self.prove((left, right.left), d)
            if s1:
                return _Sketch("r-or-1", state, (), (s1,))
            s2 = self.prove((left, right.right), d)
            if s2:
                return _Sketch("r-or-2", state, (), (s2,))
        if isinstance(right, Tensor):
            s1 = self.prove((left, right.left), d)
            if s1:
                s2 = self.prove((left, right.right), d)
                if s2:
                    return _Sketch("r-tensor", state, (), (s1, s2))
        if isinstance(right, Imp):
            prem = frozenset({right.left} | {Nabla(g) for g in left})
            s1 = self.prove((prem, right.right), d)
            if s1:
                return _Sketch("r-imp", state, (), (s1,))
        for f in sorted(left, key=str):
            if isinstance(f, And):
                for which, part in (("1", f.left), ("2", f.right)):
                    new = left | {part}
                    if new == left:
                        continue
                    s1 = self.prove((new, right), d)
                    if s1:
                        return _Sketch("l-and-" + which, state, (f,), (s1,))
            elif isinstance(f, Or):
                n1, n2 = left | {f.left}, left | {f.right}
                if n1 == left and n2 == left:
                    continue
                s1 = self.prove((n1, right), d)
                if s1:
                    s2 = self.prove((n2, right), d)
                    if s2:
                        return _Sketch("l-or", state, (f,), (s1, s2))
            elif isinstance(f, Tensor):
                new = (left - {f}) | {f.left, f.right}
                s1 = self.prove((new, right), d)
                if s1:
                    return _Sketch("l-tensor", state, (f,), (s1,))
            elif f == ONE:
                s1 = self.prove((left - {f}, right), d)
                if s1:
                    return _Sketch("l-one", state, (), (s1,))
            elif isinstance(f, Nabla) and isinstance(f.body, Imp):
                a, b = f.body.left, f.body.right
                s1 = self.prove((left, a), d)
                if s1:
                    new = left | {b}
                    if new != left:
                        s2 = self.prove((new, right), d)
                        if s2:
                            return _Sketch("l-imp", state, (f,), (s1, s2))
        # modal rules need their exact shapes
        if len(left) == 1:
            (f,) = left
            if isinstance(f, Nabla) and isinstance(right, Nabla):
                s1 = self.prove((frozenset({f.body}), right.body), d)
                if s1:
                    return _Sketch("nabla", state, (), (s1,))
            if isinstance(f, Nabla) and isinstance(f.body, Tensor):
                prem = frozenset({Nabla(f.body.left), Nabla(f.body.right)})
                s1 = self.prove((prem, right), d)
                if s1:
                    return _Sketch("oplax", state, (), (s1,))
        if "N" in self.schemes and isinstance(right, Nabla) \
                and all(isinstance(f, Nabla) for f in left):
            prem = frozenset(f.body for f in left)
            s1 = self.prove((prem, right.body), d)
            if s1:
                return _Sketch("scheme-N", state, (), (s1,))
        if "H" in self.schemes and isinstance(right, Nabla):
            ok = True
            prem = set()
            for f in left:
                if isinstance(f, Nabla):
                    prem.add(f.body)
                elif (isinstance(f, Imp) and isinstance(f.left, Nabla)
                        and isinstance(f.right, Nabla)):
                    prem.add(Imp(f.left.body, f.right.body))
                else:
                    ok = False
                    break
            if ok:
                s1 = self.prove((frozenset(prem), right.body), d)
                if s1:
                    return _Sketch("scheme-H", state, (), (s1,))
        if "P" in self.schemes:
            s1 = self.prove((left, Nabla(right)), d)
            if s1:
                return _Sketch("scheme-P", state, (), (s1,))
        if "F" in self.schemes and isinstance(right, Nabla):
            s1 = self.prove((left, right.body), d)
            if s1:
                return _Sketch("scheme-F", state, (), (s1,))
        if "wF" in self.schemes and right == BOT:
            for f in sorted(left, key=str):
                s1 = self.prove((frozenset({Nabla(f)}), BOT), d)
                if s1:
                    return _Sketch("scheme-wF", state, (f,), (s1,))
        if self.cuts and depth >= 3:
            for formula in self.cuts:
                if formula in left or formula == right:
                    continue
                s1 = self.prove((left, formula), d)
                if not s1:
                    continue
                s2 = self.prove((left | {formula}, right), d)
                if s2:
                    return _Sketch("cut", state, (formula,), (s1, s2))
        return None


def _realize(sk: _Sketch) -> ProofTree:
    """Turn a set-sequent sketch into a schema-exact tree whose root
    antecedent is the canonical (sorted, duplicate-free) sequence."""
    left_set, right = sk.state
    base = canonical_left(left_set)
    kids = [_realize(c) for c in sk.children]
    rule = sk.rule

    if rule == "ax-id":
        return arrange(ax_id(right), base)
    if rule == "ax-one":
        return arrange(ax_one(), base)
    if rule == "ax-top":
        return ax_top(base)
    if rule == "ax-bot":
        return ax_bot(base, right)
    if rule == "ax-nabla-one":
        return arrange(ax_nabla_one(), base)
    if rule == "r-and":
        return r_and(kids[0], kids[1])
    if rule == "r-or-1":
        return r_or1(kids[0], right.right)
    if rule == "r-or-2":
        return r_or2(kids[0], right.left)
    if rule == "r-tensor":
        return canonicalize(r_tensor(kids[0], kids[1]))
    if rule == "r-imp":
        prem = (right.left,) + tuple(Nabla(g) for g in base)
        return r_imp(arrange(kids[0], prem))
    if rule == "l-and-1" or rule == "l-and-2":
        (f,) = sk.payload
        part = f.left if rule.endswith("1") else f.right
        t = arrange(kids[0], canonical_left(left_set | {part}))
        pos = t.sequent.left.index(part)
        t = (l_and1(t, pos, f.right) if rule.endswith("1")
             else l_and2(t, pos, f.left))
        return canonicalize(t)
    if rule == "l-or":
        (f,) = sk.payload
        t1 = arrange(kids[0], base + (f.left,))
        t2 = arrange(kids[1], base + (f.right,))
        return canonicalize(l_or(t1, t2, len(base)))
    if rule == "l-tensor":
        (f,) = sk.payload
        rest = canonical_left(left_set - {f})
        t = arrange(kids[0], rest + (f.left, f.right))
        return canonicalize(l_tensor(t, len(rest)))
    if rule == "l-one":
        rest = canonical_left(left_set - {ONE})
        t = arrange(kids[0], rest)
        return canonicalize(l_one(t, len(rest)))
    if rule == "l-imp":
        (f,) = sk.payload
        a, b = f.body.left, f.body.right
        t2 = arrange(kids[1], (b,) + base)
        return canonicalize(l_imp(kids[0], t2, 0))
    if rule == "nabla":
        return nabla_rule(kids[0])
    if rule == "oplax":
        (f,) = sk.state[0]
        body = f.body
        t = arrange(kids[0], (Nabla(body.left), Nabla(body.right)))
        return oplax(t)
    if rule == "scheme-N":
        prem = tuple(f.body for f in base)
        return scheme_n(arrange(kids[0], prem))
    if rule == "scheme-H":
        gammas = [f for f in base if isinstance(f, Nabla)]
        block = [f for f in base if not isinstance(f, Nabla)]
        prem = tuple(f.body for f in gammas) + tuple(
            Imp(f.left.body, f.right.body) for f in block)
        t = scheme_h(arrange(kids[0], prem), len(gammas))
        return canonicalize(t)
    if rule == "scheme-P":
        return scheme_p(kids[0])
    if rule == "scheme-F":
        return scheme_f(kids[0])
    if rule == "scheme-wF":
        (f,) = sk.payload
        t = scheme_wf(kids[0])
        return arrange(t, base)
    if rule == "cut":
        (formula,) = sk.payload
        t2 = arrange(kids[1], (formula,) + base)
        return canonicalize(cut(kids[0], t2, 0))
    raise ValueError(f"unknown sketch rule {rule!r}")
