"""Machine-checked transcriptions of the printed sequent derivations.

Each builder returns a closed proof tree; `paper_derivation_library` lists
(name, sequent, tree, logic) entries for all of them, instantiated at
concrete atoms.  Omitted multi-step segments ("double lines") in the
sources are expanded into explicit cut / weakening / exchange /
contraction steps, since the checker accepts nothing admissible.
"""

from __future__ import annotations

from ..syntax import (
    And, Atom, Bot, Formula, Imp, Nabla, One, Or, Sequent, Tensor, Top,
    BOT, ONE, TOP, box,
)
from .rules import ISTL, STL, LogicSpec, ProofTree
from .tactics import (
    arrange, ax_bot, ax_id, ax_nabla_one, ax_one, ax_top, box_elim_lemma,
    canonicalize, cut, eval_lemma, hyp, l_and1, l_and2, l_contr, l_exch,
    l_imp, l_one, l_or, l_tensor, l_weak, nabla_rule, oplax, r_and, r_imp,
    r_or1, r_or2, r_tensor, scheme_f, scheme_h, scheme_n, scheme_p,
    scheme_wf,
)

P_, Q_, R_ = Atom("p"), Atom("q"), Atom("r")


def oplax_tree(a: Formula, b: Formula) -> ProofTree:
    """nab (A*B) => nab A * nab B."""
    return oplax(r_tensor(ax_id(Nabla(a)), ax_id(Nabla(b))))


def dist_into_tensor(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """(A*B) | (A*C) => A * (B|C)."""
    t1 = l_tensor(r_tensor(ax_id(a), r_or1(ax_id(b), c)), 0)
    t2 = l_tensor(r_tensor(ax_id(a), r_or2(ax_id(c), b)), 0)
    return l_or(t1, t2, 0)


def dist_out_of_tensor(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """A * (B|C) => (A*B) | (A*C)."""
    u1 = r_or1(r_tensor(ax_id(a), ax_id(b)), Tensor(a, c))
    u2 = r_or2(r_tensor(ax_id(a), ax_id(c)), Tensor(a, b))
    return l_tensor(l_or(u1, u2, 1), 0)


def eval_tensor_tree(a: Formula, b: Formula) -> ProofTree:
    """A * nab (A -> B) => B."""
    return l_tensor(eval_lemma(a, b), 0)


def adj_intro_tree(a: Formula, b: Formula) -> ProofTree:
    """B => A -> (A * nab B): one direction of the defining adjunction."""
    return r_imp(r_tensor(ax_id(a), ax_id(Nabla(b))))


def box_unit_tree(a: Formula) -> ProofTree:
    """A => 1 -> nab A, the unit of the adjunction at the monoidal unit."""
    return r_imp(l_one(ax_id(Nabla(a)), 0))


def nabla_bot_tree() -> ProofTree:
    """nab bot => bot."""
    t = nabla_rule(ax_bot((BOT,), box(BOT)))
    return cut(t, box_elim_lemma(BOT), 0)


def nabla_join_tree(a: Formula, b: Formula) -> ProofTree:
    """nab (A|B) => nab A | nab B, via the right adjoint at 1."""
    target = Or(Nabla(a), Nabla(b))

    def lifted(x: Formula, inj) -> ProofTree:
        # x => 1 -> target, where inj injects nab x into the join
        step = l_imp(ax_one(), inj(ax_id(Nabla(x))), 0)
        step = l_one(step, 0)
        up = r_imp(step)  # 1 -> nab x => 1 -> target
        return cut(box_unit_tree(x), up, 0)

    ta = lifted(a, lambda t: r_or1(t, Nabla(b)))
    tb = lifted(b, lambda t: r_or2(t, Nabla(a)))
    joined = l_or(ta, tb, 0)  # A|B => 1 -> target
    return cut(nabla_rule(joined), box_elim_lemma(target), 0)


def nabla_join_rev_tree(a: Formula, b: Formula) -> ProofTree:
    """nab A | nab B => nab (A|B)."""
    return l_or(nabla_rule(r_or1(ax_id(a), b)),
                nabla_rule(r_or2(ax_id(b), a)), 0)


def internalize_tree(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """A -> B => (C*A) -> (C*B)."""
    t = r_tensor(ax_id(c), eval_lemma(a, b))
    return r_imp(l_tensor(t, 0))


def n_unit_tree() -> ProofTree:
    """=> nab 1, in STL(N)."""
    return scheme_n(ax_one())


def n_tensor_tree(a: Formula, b: Formula) -> ProofTree:
    """nab A * nab B => nab (A*B), in STL(N)."""
    return l_tensor(scheme_n(r_tensor(ax_id(a), ax_id(b))), 0)


def n_imp_tree(a: Formula, b: Formula) -> ProofTree:
    """nab (A->B) => nab A -> nab B, in STL(N)."""
    return r_imp(scheme_n(eval_lemma(a, b)))


def h_imp_tree(a: Formula, b: Formula) -> ProofTree:
    """nab A -> nab B => nab (A->B), in STL(H)."""
    return scheme_h(ax_id(Imp(a, b)), 0)


def p_axiom_tree(a: Formula) -> ProofTree:
    return scheme_p(ax_id(Nabla(a)))


def f_axiom_tree(a: Formula) -> ProofTree:
    return scheme_f(ax_id(a))


def wf_axiom_tree() -> ProofTree:
    """1 -> bot => bot, in STL(wF)."""
    inner = l_one(box_elim_lemma(BOT), 0)  # 1, nab(1->bot) => bot
    dropped = cut(ax_one(), inner, 0)      # nab(1->bot) => bot
    return scheme_wf(dropped)


def _meet_split(x: Formula, y: Formula):
    """nab(X^Y) => nab X and nab(X^Y) => nab Y."""
    return (nabla_rule(l_and1(ax_id(x), 0, y)),
            nabla_rule(l_and2(ax_id(y), 0, x)))


def _merge_nablas(t: ProofTree, x: Formula, y: Formula,
                  px: int, py: int) -> ProofTree:
    """Replace nab X at px and nab Y at py (px < py) by one nab (X ^ Y)."""
    lx, ly = _meet_split(x, y)
    t = cut(lx, t, px)
    t = cut(ly, t, py)
    while py - 1 > px:
        t = l_exch(t, py - 1)
        py -= 1
    return l_contr(t, px)


def and_intro_f_tree(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """A->B, A->C => A -> (B ^ C), in iSTL (formalized meet introduction)."""
    ctx = (Nabla(Imp(a, b)), Nabla(Imp(a, c)), a)
    t1 = arrange(eval_lemma(a, b), ctx)
    t2 = arrange(eval_lemma(a, c), ctx)
    t = r_and(t1, t2)
    t = _merge_nablas(t, Imp(a, b), Imp(a, c), 0, 1)
    t = arrange(t, (a, t.sequent.left[0]))
    t = r_imp(t)
    big = And(Imp(a, b), Imp(a, c))
    lemma = r_and(hyp((Imp(a, b), Imp(a, c)), Imp(a, b)),
                  hyp((Imp(a, b), Imp(a, c)), Imp(a, c)))
    return cut(lemma, t, 0)


def or_elim_f_tree(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """A->C, B->C => (A | B) -> C, in iSTL."""
    ctx_a = (Nabla(Imp(a, c)), Nabla(Imp(b, c)), a)
    ctx_b = (Nabla(Imp(a, c)), Nabla(Imp(b, c)), b)
    t1 = arrange(eval_lemma(a, c), ctx_a)
    t2 = arrange(eval_lemma(b, c), ctx_b)
    t = l_or(t1, t2, 2)
    t = _merge_nablas(t, Imp(a, c), Imp(b, c), 0, 1)
    t = arrange(t, (Or(a, b), t.sequent.left[0]))
    t = r_imp(t)
    lemma = r_and(hyp((Imp(a, c), Imp(b, c)), Imp(a, c)),
                  hyp((Imp(a, c), Imp(b, c)), Imp(b, c)))
    return cut(lemma, t, 0)


def tr_f_tree(a: Formula, b: Formula, c: Formula) -> ProofTree:
    """A->B, B->C => A -> C, in iSTL (formalized transitivity)."""
    t = cut(eval_lemma(a, b), eval_lemma(b, c), 0)
    # t: A, nab(A->B), nab(B->C) => C
    t = _merge_nablas(t, Imp(a, b), Imp(b, c), 1, 2)
    t = r_imp(t)
    lemma = r_and(hyp((Imp(a, b), Imp(b, c)), Imp(a, b)),
                  hyp((Imp(a, b), Imp(b, c)), Imp(b, c)))
    return cut(lemma, t, 0)


def imp_intro_tree(premise: ProofTree) -> ProofTree:
    """From A => B derive => A -> B via the top detour, in iSTL."""
    a_formula = premise.sequent.left
    if len(a_formula) != 1:
        raise ValueError("implication introduction expects a single antecedent")
    t = l_weak(premise, 1, Nabla(TOP))
    t = r_imp(t)                    # top => A -> B
    return cut(ax_top(), t, 0)      # => A -> B


def cur_tree(g: Formula, a: Formula) -> ProofTree:
    """G => A -> G via scheme P (the relaxed implication introduction), iSTL(P)."""
    s1 = scheme_p(ax_id(Nabla(g)))          # nab G => G
    s2 = arrange(ax_id(g), (g, a))          # G, A => G
    t = cut(s1, s2, 0)                      # nab G, A => G
    t = arrange(t, (a, Nabla(g)))
    return r_imp(t)                         # G => A -> G


def mp_tree(a: Formula, b: Formula) -> ProofTree:
    """A, A->B => B via scheme F, iSTL(F)."""
    s1 = scheme_f(ax_id(Imp(a, b)))         # A->B => nab (A->B)
    return cut(s1, eval_lemma(a, b), 1)


def e_tree() -> ProofTree:
    """top -> bot => bot via scheme wF, iSTL(wF)."""
    inner = l_imp(ax_id(TOP), ax_id(BOT), 0)   # top, nab(top->bot) => bot
    dropped = cut(ax_top(), inner, 0)          # nab(top->bot) => bot
    return scheme_wf(dropped)


def paper_derivation_library():
    """All transcribed derivations as (name, tree, logic) triples."""
    stl = STL
    istl = ISTL
    entries = [
        ("oplax", oplax_tree(P_, Q_), stl),
        ("dist-into-tensor", dist_into_tensor(P_, Q_, R_), stl),
        ("dist-out-of-tensor", dist_out_of_tensor(P_, Q_, R_), stl),
        ("eval-tensor", eval_tensor_tree(P_, Q_), stl),
        ("eval", eval_lemma(P_, Q_), stl),
        ("adjunction-intro", adj_intro_tree(P_, Q_), stl),
        ("box-unit", box_unit_tree(P_), stl),
        ("box-elim", box_elim_lemma(P_), stl),
        ("nabla-bot", nabla_bot_tree(), stl),
        ("nabla-join", nabla_join_tree(P_, Q_), stl),
        ("nabla-join-rev", nabla_join_rev_tree(P_, Q_), stl),
        ("internalize-tensor", internalize_tree(P_, Q_, R_), stl),
        ("N-unit", n_unit_tree(), LogicSpec("STL", {"N"})),
        ("N-tensor", n_tensor_tree(P_, Q_), LogicSpec("STL", {"N"})),
        ("N-imp", n_imp_tree(P_, Q_), LogicSpec("STL", {"N"})),
        ("H-imp", h_imp_tree(P_, Q_), LogicSpec("STL", {"H"})),
        ("P-axiom", p_axiom_tree(P_), LogicSpec("STL", {"P"})),
        ("F-axiom", f_axiom_tree(P_), LogicSpec("STL", {"F"})),
        ("wF-axiom", wf_axiom_tree(), LogicSpec("STL", {"wF"})),
        ("and-intro-f", and_intro_f_tree(P_, Q_, R_), istl),
        ("or-elim-f", or_elim_f_tree(P_, Q_, R_), istl),
        ("tr-f", tr_f_tree(P_, Q_, R_), istl),
        ("imp-intro", imp_intro_tree(ax_id(P_)), istl),
        ("cur", cur_tree(P_, TOP), LogicSpec("STL", {"P"}, structural=True)),
        ("mp", mp_tree(P_, Q_), LogicSpec("STL", {"F"}, structural=True)),
        ("e", e_tree(), LogicSpec("STL", {"wF"}, structural=True)),
    ]
    return [(name, tree.sequent, tree, logic) for name, tree, logic in entries]
