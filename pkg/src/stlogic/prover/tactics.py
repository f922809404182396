"""Combinators that build schema-exact proof trees.

Each primitive applies one rule and computes the conclusion; the derived
tactics (arrange, canonicalize, weaken chains) compose explicit l-exch /
l-weak / l-contr steps, so trees built here always pass the checker in a
structural logic; the primitives alone suffice in non-structural ones.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from ..syntax import (
    And, Bot, Formula, Imp, Nabla, One, Or, Sequent, Tensor, Top,
    BOT, ONE, TOP, formula_sort_key,
)
from .rules import ProofTree


def _seq(left, right) -> Sequent:
    return Sequent(tuple(left), right)


def ax_id(a: Formula) -> ProofTree:
    return ProofTree("ax-id", _seq((a,), a))


def ax_one() -> ProofTree:
    return ProofTree("ax-one", _seq((), ONE))


def ax_nabla_one() -> ProofTree:
    return ProofTree("ax-nabla-one", _seq((Nabla(ONE),), ONE))


def ax_top(gamma: Sequence[Formula] = ()) -> ProofTree:
    return ProofTree("ax-top", _seq(gamma, TOP))


def ax_bot(left: Sequence[Formula], right: Formula) -> ProofTree:
    if BOT not in left:
        raise ValueError("bot axiom needs bot on the left")
    return ProofTree("ax-bot", _seq(left, right))


def cut(t1: ProofTree, t2: ProofTree, pos: int) -> ProofTree:
    s1, s2 = t1.sequent, t2.sequent
    if s2.left[pos] != s1.right:
        raise ValueError("cut formula mismatch")
    left = s2.left[:pos] + s1.left + s2.left[pos + 1:]
    return ProofTree("cut", _seq(left, s2.right), (t1, t2))


def l_and1(t: ProofTree, pos: int, b: Formula) -> ProofTree:
    s = t.sequent
    left = s.left[:pos] + (And(s.left[pos], b),) + s.left[pos + 1:]
    return ProofTree("l-and-1", _seq(left, s.right), (t,))


def l_and2(t: ProofTree, pos: int, a: Formula) -> ProofTree:
    s = t.sequent
    left = s.left[:pos] + (And(a, s.left[pos]),) + s.left[pos + 1:]
    return ProofTree("l-and-2", _seq(left, s.right), (t,))


def r_and(t1: ProofTree, t2: ProofTree) -> ProofTree:
    s1, s2 = t1.sequent, t2.sequent
    if s1.left != s2.left:
        raise ValueError("r-and premises need the same context")
    return ProofTree("r-and", _seq(s1.left, And(s1.right, s2.right)), (t1, t2))


def l_or(t1: ProofTree, t2: ProofTree, pos: int) -> ProofTree:
    s1, s2 = t1.sequent, t2.sequent
    if s1.right != s2.right or s1.left[:pos] != s2.left[:pos] \
            or s1.left[pos + 1:] != s2.left[pos + 1:]:
        raise ValueError("l-or premises disagree outside the disjunct")
    disj = Or(s1.left[pos], s2.left[pos])
    left = s1.left[:pos] + (disj,) + s1.left[pos + 1:]
    return ProofTree("l-or", _seq(left, s1.right), (t1, t2))


def r_or1(t: ProofTree, b: Formula) -> ProofTree:
    s = t.sequent
    return ProofTree("r-or-1", _seq(s.left, Or(s.right, b)), (t,))


def r_or2(t: ProofTree, a: Formula) -> ProofTree:
    s = t.sequent
    return ProofTree("r-or-2", _seq(s.left, Or(a, s.right)), (t,))


def l_one(t: ProofTree, pos: int) -> ProofTree:
    s = t.sequent
    left = s.left[:pos] + (ONE,) + s.left[pos:]
    return ProofTree("l-one", _seq(left, s.right), (t,))


def l_tensor(t: ProofTree, pos: int) -> ProofTree:
    s = t.sequent
    tens = Tensor(s.left[pos], s.left[pos + 1])
    left = s.left[:pos] + (tens,) + s.left[pos + 2:]
    return ProofTree("l-tensor", _seq(left, s.right), (t,))


def r_tensor(t1: ProofTree, t2: ProofTree) -> ProofTree:
    s1, s2 = t1.sequent, t2.sequent
    return ProofTree("r-tensor",
                     _seq(s1.left + s2.left, Tensor(s1.right, s2.right)),
                     (t1, t2))


def nabla_rule(t: ProofTree) -> ProofTree:
    s = t.sequent
    if len(s.left) != 1:
        raise ValueError("nabla rule needs a single antecedent")
    return ProofTree("nabla", _seq((Nabla(s.left[0]),), Nabla(s.right)), (t,))


def oplax(t: ProofTree) -> ProofTree:
    s = t.sequent
    if len(s.left) != 2 or not all(isinstance(f, Nabla) for f in s.left):
        raise ValueError("oplax needs premises nab A, nab B => C")
    a, b = s.left[0].body, s.left[1].body
    return ProofTree("oplax", _seq((Nabla(Tensor(a, b)),), s.right), (t,))


def l_imp(t1: ProofTree, t2: ProofTree, pos_b: int) -> ProofTree:
    s1, s2 = t1.sequent, t2.sequent
    a, b = s1.right, s2.left[pos_b]
    left = (s2.left[:pos_b] + s1.left + (Nabla(Imp(a, b)),)
            + s2.left[pos_b + 1:])
    return ProofTree("l-imp", _seq(left, s2.right), (t1, t2))


def r_imp(t: ProofTree) -> ProofTree:
    s = t.sequent
    if not s.left:
        raise ValueError("r-imp premise needs the implication antecedent")
    a = s.left[0]
    gamma = []
    for f in s.left[1:]:
        if not isinstance(f, Nabla):
            raise ValueError("r-imp premise must be A, nab Gamma => B")
        gamma.append(f.body)
    return ProofTree("r-imp", _seq(gamma, Imp(a, s.right)), (t,))


def scheme_n(t: ProofTree) -> ProofTree:
    s = t.sequent
    return ProofTree("scheme-N",
                     _seq(tuple(Nabla(f) for f in s.left), Nabla(s.right)),
                     (t,))


def scheme_h(t: ProofTree, split: int) -> ProofTree:
    s = t.sequent
    gamma, block = s.left[:split], s.left[split:]
    if not all(isinstance(f, Imp) for f in block):
        raise ValueError("scheme H block must be implications")
    left = (tuple(Nabla(f) for f in gamma)
            + tuple(Imp(Nabla(f.left), Nabla(f.right)) for f in block))
    return ProofTree("scheme-H", _seq(left, Nabla(s.right)), (t,))


def scheme_p(t: ProofTree) -> ProofTree:
    s = t.sequent
    if not isinstance(s.right, Nabla):
        raise ValueError("scheme P premise needs nab A on the right")
    return ProofTree("scheme-P", _seq(s.left, s.right.body), (t,))


def scheme_f(t: ProofTree) -> ProofTree:
    s = t.sequent
    return ProofTree("scheme-F", _seq(s.left, Nabla(s.right)), (t,))


def scheme_wf(t: ProofTree) -> ProofTree:
    s = t.sequent
    if (len(s.left) != 1 or not isinstance(s.left[0], Nabla)
            or s.right != BOT):
        raise ValueError("scheme wF premise must be nab A => bot")
    return ProofTree("scheme-wF", _seq((s.left[0].body,), BOT), (t,))


def l_weak(t: ProofTree, pos: int, f: Formula) -> ProofTree:
    s = t.sequent
    left = s.left[:pos] + (f,) + s.left[pos:]
    return ProofTree("l-weak", _seq(left, s.right), (t,))


def l_contr(t: ProofTree, pos: int) -> ProofTree:
    s = t.sequent
    if s.left[pos] != s.left[pos + 1]:
        raise ValueError("contraction needs adjacent duplicates")
    left = s.left[:pos] + s.left[pos + 1:]
    return ProofTree("l-contr", _seq(left, s.right), (t,))


def l_exch(t: ProofTree, pos: int) -> ProofTree:
    s = t.sequent
    left = (s.left[:pos] + (s.left[pos + 1], s.left[pos])
            + s.left[pos + 2:])
    return ProofTree("l-exch", _seq(left, s.right), (t,))


# -- derived tactics ---------------------------------------------------------

def weaken_to_end(t: ProofTree, extra: Iterable[Formula]) -> ProofTree:
    for f in extra:
        t = l_weak(t, len(t.sequent.left), f)
    return t


def arrange(t: ProofTree, target: Sequence[Formula]) -> ProofTree:
    """Rewrite the antecedent into target using l-exch and l-weak.

    The current antecedent must be a sub-multiset of target.
    """
    target = tuple(target)
    cur = list(t.sequent.left)
    from collections import Counter

    missing = Counter(target) - Counter(cur)
    if Counter(cur) - Counter(target):
        raise ValueError("arrange cannot drop formulas")
    for i, want in enumerate(target):
        if i < len(cur) and cur[i] == want:
            continue
        try:
            j = cur.index(want, i)
        except ValueError:
            j = -1
        if j >= 0:
            while j > i:
                t = l_exch(t, j - 1)
                cur[j - 1], cur[j] = cur[j], cur[j - 1]
                j -= 1
        else:
            if missing[want] <= 0:
                raise ValueError("arrange bookkeeping failed")
            missing[want] -= 1
            t = l_weak(t, i, want)
            cur.insert(i, want)
    if tuple(cur) != target:
        raise ValueError("arrange did not reach the target")
    return t


def canonicalize(t: ProofTree) -> ProofTree:
    """Sort the antecedent and contract duplicates away."""
    cur = list(t.sequent.left)
    order = sorted(range(len(cur)), key=lambda i: (formula_sort_key(cur[i]), i))
    target = [cur[i] for i in order]
    # selection sort via adjacent swaps
    for i in range(len(target)):
        j = cur.index(target[i], i)
        while j > i:
            t = l_exch(t, j - 1)
            cur[j - 1], cur[j] = cur[j], cur[j - 1]
            j -= 1
    i = 0
    while i + 1 < len(cur):
        if cur[i] == cur[i + 1]:
            t = l_contr(t, i)
            del cur[i + 1]
        else:
            i += 1
    return t


def canonical_left(formulas) -> tuple[Formula, ...]:
    return tuple(sorted(set(formulas), key=formula_sort_key))


def hyp(gamma: Sequence[Formula], a: Formula) -> ProofTree:
    """Gamma => A with A among Gamma: the identity axiom weakened out."""
    if a not in gamma:
        raise ValueError("hypothesis not in context")
    return arrange(ax_id(a), gamma)


def cut_replace(t: ProofTree, pos: int, lemma: ProofTree) -> ProofTree:
    """Replace the antecedent formula at pos using lemma: Y => that formula."""
    return cut(lemma, t, pos)


def eval_lemma(a: Formula, b: Formula) -> ProofTree:
    """A, nab (A -> B) => B, the elimination core of the implication."""
    return l_imp(ax_id(a), ax_id(b), 0)


def box_elim_lemma(x: Formula) -> ProofTree:
    """nab (1 -> X) => X."""
    return l_imp(ProofTree("ax-one", _seq((), ONE)), ax_id(x), 0)
