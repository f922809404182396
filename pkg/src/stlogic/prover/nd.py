"""The weak-implication natural deduction systems and their embedding.

Judgments are (finite set of hypotheses, conclusion) over the plain
propositional language (top, bot, and, or, imp).  The assumption rule
Gamma |- A for A in Gamma is part of the usual apparatus; weakening is
admissible, not primitive.  `expand_nd_proof` compiles a checked deduction
into a sequent proof of the embedded logic, rule by rule, using the
transcribed macros.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..syntax import (
    And, Atom, Bot, Formula, Imp, Nabla, Or, Sequent, Top,
    BOT, TOP, subformulas,
)
from .rules import EMBED_SCHEMES, LogicSpec, ProofTree, SUBINT_SYSTEMS
from .library import (
    and_intro_f_tree, e_tree, imp_intro_tree, mp_tree, or_elim_f_tree,
    tr_f_tree,
)
from .tactics import (
    arrange, ax_bot, ax_id, ax_top, canonical_left, canonicalize, cut, hyp,
    l_and1, l_and2, l_or, l_weak, r_and, r_imp, r_or1, r_or2, scheme_p,
)


class RuleNotInSystem(ValueError):
    pass


class NDCheckError(ValueError):
    pass


@dataclass(frozen=True)
class NDJudgment:
    context: frozenset
    conclusion: Formula

    def __post_init__(self):
        object.__setattr__(self, "context", frozenset(self.context))
        for f in self.context | {self.conclusion}:
            _check_propositional(f)

    def __str__(self):
        ctx = ", ".join(str(f) for f in canonical_left(self.context))
        return f"{ctx} |- {self.conclusion}" if ctx else f"|- {self.conclusion}"


def _check_propositional(f: Formula) -> None:
    for g in subformulas(f):
        if isinstance(g, Nabla) or g.__class__.__name__ in ("One", "Tensor"):
            raise NDCheckError(f"{f} is not in the propositional language")


@dataclass(frozen=True)
class NDProof:
    rule: str
    judgment: NDJudgment
    premises: tuple = ()


BASE_RULES = frozenset({
    "hyp", "top-intro", "bot-elim",
    "and-intro", "and-elim-1", "and-elim-2",
    "or-intro-1", "or-intro-2", "or-elim",
    "imp-intro", "and-intro-f", "or-elim-f", "tr-f",
})

EXTRA_RULES = {
    "KPC": frozenset(),
    "EKPC": frozenset({"e"}),
    "KTPC": frozenset({"mp"}),
    "BPC": frozenset({"cur"}),
    "EBPC": frozenset({"cur", "e"}),
    "IPC": frozenset({"cur", "mp"}),
}


def system_rules(system: str, relaxed: bool = False) -> frozenset:
    if system not in EXTRA_RULES:
        raise ValueError(f"unknown system {system!r}")
    rules = BASE_RULES | EXTRA_RULES[system]
    if relaxed:
        if "cur" not in rules:
            raise ValueError("the relaxed introduction only axiomatizes "
                             "systems containing Cur")
        rules = (rules - {"cur"}) | {"imp-intro-relaxed"}
    return rules


def nd_check(proof: NDProof, system: str, relaxed: bool = False) -> None:
    allowed = system_rules(system, relaxed)
    _nd_check_node(proof, allowed, ())


def _nd_check_node(node: NDProof, allowed: frozenset, path) -> None:
    rule, j = node.rule, node.judgment
    prem = tuple(p.judgment for p in node.premises)

    def fail(msg):
        raise NDCheckError(f"at {'.'.join(map(str, path)) or 'root'}: {msg}")

    if rule not in allowed:
        raise RuleNotInSystem(f"rule {rule!r} is not available here")

    def need(n):
        if len(prem) != n:
            fail(f"rule {rule} needs {n} premise(s)")

    ctx, c = j.context, j.conclusion
    if rule == "hyp":
        need(0)
        if c not in ctx:
            fail("hypothesis not among the assumptions")
    elif rule == "top-intro":
        need(0)
        if c != TOP:
            fail("top introduction proves top")
    elif rule == "bot-elim":
        need(1)
        if prem[0] != NDJudgment(ctx, BOT):
            fail("premise must be Gamma |- bot")
    elif rule == "and-intro":
        need(2)
        if not isinstance(c, And) or prem != (
                NDJudgment(ctx, c.left), NDJudgment(ctx, c.right)):
            fail("premises must prove the conjuncts")
    elif rule in ("and-elim-1", "and-elim-2"):
        need(1)
        p = prem[0]
        if p.context != ctx or not isinstance(p.conclusion, And):
            fail("premise must be Gamma |- A & B")
        part = p.conclusion.left if rule.endswith("1") else p.conclusion.right
        if c != part:
            fail("conclusion must be the selected conjunct")
    elif rule in ("or-intro-1", "or-intro-2"):
        need(1)
        if not isinstance(c, Or):
            fail("conclusion must be a disjunction")
        part = c.left if rule.endswith("1") else c.right
        if prem[0] != NDJudgment(ctx, part):
            fail("premise must prove the chosen disjunct")
    elif rule == "or-elim":
        need(3)
        p0 = prem[0]
        if p0.context != ctx or not isinstance(p0.conclusion, Or):
            fail("first premise must be Gamma |- A | B")
        a, b = p0.conclusion.left, p0.conclusion.right
        if prem[1] != NDJudgment(ctx | {a}, c) \
                or prem[2] != NDJudgment(ctx | {b}, c):
            fail("branch premises must assume the disjuncts")
    elif rule == "imp-intro":
        need(1)
        if not isinstance(c, Imp) or prem[0] != NDJudgment(
                frozenset({c.left}), c.right):
            fail("premise must be A |- B for conclusion A -> B")
    elif rule == "imp-intro-relaxed":
        need(1)
        if not isinstance(c, Imp) or prem[0] != NDJudgment(
                ctx | {c.left}, c.right):
            fail("premise must be Gamma, A |- B")
    elif rule == "and-intro-f":
        need(2)
        if (not isinstance(c, Imp) or not isinstance(c.right, And)
                or prem[0] != NDJudgment(ctx, Imp(c.left, c.right.left))
                or prem[1] != NDJudgment(ctx, Imp(c.left, c.right.right))):
            fail("formalized meet introduction shape")
    elif rule == "or-elim-f":
        need(2)
        if (not isinstance(c, Imp) or not isinstance(c.left, Or)
                or prem[0] != NDJudgment(ctx, Imp(c.left.left, c.right))
                or prem[1] != NDJudgment(ctx, Imp(c.left.right, c.right))):
            fail("formalized join elimination shape")
    elif rule == "tr-f":
        need(2)
        if not isinstance(c, Imp):
            fail("conclusion must be an implication")
        p0, p1 = prem
        if (p0.context != ctx or p1.context != ctx
                or not isinstance(p0.conclusion, Imp)
                or not isinstance(p1.conclusion, Imp)
                or p0.conclusion.left != c.left
                or p0.conclusion.right != p1.conclusion.left
                or p1.conclusion.right != c.right):
            fail("formalized transitivity shape")
    elif rule == "e":
        need(1)
        if c != BOT or prem[0] != NDJudgment(ctx, Imp(TOP, BOT)):
            fail("premise must be Gamma |- top -> bot")
    elif rule == "mp":
        need(2)
        if prem[0].context != ctx or prem[1] != NDJudgment(
                ctx, Imp(prem[0].conclusion, c)):
            fail("modus ponens shape")
    elif rule == "cur":
        need(1)
        if c != Imp(TOP, prem[0].conclusion) or prem[0].context != ctx:
            fail("premise Gamma |- A for conclusion Gamma |- top -> A")
    else:
        fail(f"unknown rule {rule!r}")
    for i, p in enumerate(node.premises):
        _nd_check_node(p, allowed, path + (i,))


def nd_is_valid(proof: NDProof, system: str, relaxed: bool = False) -> bool:
    try:
        nd_check(proof, system, relaxed)
        return True
    except (NDCheckError, RuleNotInSystem):
        return False


# -- bounded search ----------------------------------------------------------

def nd_search(j: NDJudgment, system: str, depth: int,
              relaxed: bool = False) -> Optional[NDProof]:
    rules = system_rules(system, relaxed)
    cands = {TOP, BOT}
    for f in j.context | {j.conclusion}:
        cands |= subformulas(f)
    cands = canonical_left(cands)
    failed: dict = {}

    def prove(ctx, c, d) -> Optional[NDProof]:
        key = (ctx, c)
        if d <= 0 or failed.get(key, 0) >= d:
            return None
        out = attempt(ctx, c, d)
        if out is None and failed.get(key, 0) < d:
            failed[key] = d
        return out

    def attempt(ctx, c, d) -> Optional[NDProof]:
        jd = NDJudgment(ctx, c)
        if c in ctx:
            return NDProof("hyp", jd)
        if c == TOP:
            return NDProof("top-intro", jd)
        d1 = d - 1
        if isinstance(c, And):
            p1 = prove(ctx, c.left, d1)
            if p1:
                p2 = prove(ctx, c.right, d1)
                if p2:
                    return NDProof("and-intro", jd, (p1, p2))
        if isinstance(c, Or):
            p = prove(ctx, c.left, d1)
            if p:
                return NDProof("or-intro-1", jd, (p,))
            p = prove(ctx, c.right, d1)
            if p:
                return NDProof("or-intro-2", jd, (p,))
        if isinstance(c, Imp):
            p = prove(frozenset({c.left}), c.right, d1)
            if p:
                return NDProof("imp-intro", jd, (p,))
            if "imp-intro-relaxed" in rules:
                p = prove(ctx | {c.left}, c.right, d1)
                if p:
                    return NDProof("imp-intro-relaxed", jd, (p,))
            if "cur" in rules and c.left == TOP:
                p = prove(ctx, c.right, d1)
                if p:
                    return NDProof("cur", jd, (p,))
            if isinstance(c.right, And):
                p1 = prove(ctx, Imp(c.left, c.right.left), d1)
                if p1:
                    p2 = prove(ctx, Imp(c.left, c.right.right), d1)
                    if p2:
                        return NDProof("and-intro-f", jd, (p1, p2))
            if isinstance(c.left, Or):
                p1 = prove(ctx, Imp(c.left.left, c.right), d1)
                if p1:
                    p2 = prove(ctx, Imp(c.left.right, c.right), d1)
                    if p2:
                        return NDProof("or-elim-f", jd, (p1, p2))
            for mid in cands:
                if mid in (c.left, c.right):
                    continue
                p1 = prove(ctx, Imp(c.left, mid), d1)
                if p1:
                    p2 = prove(ctx, Imp(mid, c.right), d1)
                    if p2:
                        return NDProof("tr-f", jd, (p1, p2))
        for s in cands:
            if isinstance(s, And) and c in (s.left, s.right):
                p = prove(ctx, s, d1)
                if p:
                    which = "1" if c == s.left else "2"
                    return NDProof("and-elim-" + which, jd, (p,))
        for s in cands:
            if isinstance(s, Or):
                p0 = prove(ctx, s, d1)
                if p0:
                    p1 = prove(ctx | {s.left}, c, d1)
                    if p1:
                        p2 = prove(ctx | {s.right}, c, d1)
                        if p2:
                            return NDProof("or-elim", jd, (p0, p1, p2))
        if "mp" in rules:
            for s in cands:
                if isinstance(s, Imp) and s.right == c:
                    p1 = prove(ctx, s.left, d1)
                    if p1:
                        p2 = prove(ctx, s, d1)
                        if p2:
                            return NDProof("mp", jd, (p1, p2))
        if "e" in rules and c == BOT:
            p = prove(ctx, Imp(TOP, BOT), d1)
            if p:
                return NDProof("e", jd, (p,))
        if c != BOT:
            p = prove(ctx, BOT, d1)
            if p:
                return NDProof("bot-elim", jd, (p,))
        return None

    return prove(j.context, j.conclusion, depth)


# -- proof transforms ---------------------------------------------------------

def nd_weaken(proof: NDProof, extra) -> NDProof:
    """Weakening is admissible: rebuild the deduction over a larger context."""
    extra = frozenset(extra)
    j = proof.judgment
    new_ctx = j.context | extra
    if not extra:
        return proof
    jd = NDJudgment(new_ctx, j.conclusion)
    rule = proof.rule
    if rule == "imp-intro":
        return NDProof(rule, jd, proof.premises)
    kids = tuple(nd_weaken(p, extra) for p in proof.premises)
    return NDProof(rule, jd, kids)


def nd_subst(proof: NDProof, new_ctx: frozenset, mapping: dict) -> NDProof:
    """Replace the context: mapping sends each old hypothesis to a proof of
    it from new_ctx.  Sound because every rule is stable under this."""
    j = proof.judgment
    rule = proof.rule
    if rule == "hyp":
        got = mapping.get(j.conclusion)
        if got is None:
            if j.conclusion in new_ctx:
                return NDProof("hyp", NDJudgment(new_ctx, j.conclusion))
            raise NDCheckError(f"no substitution for hypothesis {j.conclusion}")
        return got
    if rule == "imp-intro":
        return NDProof(rule, NDJudgment(new_ctx, j.conclusion), proof.premises)
    if rule == "or-elim":
        disj = proof.premises[0].judgment.conclusion
        p0 = nd_subst(proof.premises[0], new_ctx, mapping)
        branches = []
        for part, prem in ((disj.left, proof.premises[1]),
                           (disj.right, proof.premises[2])):
            ctx2 = new_ctx | {part}
            map2 = {h: nd_weaken(t, {part}) for h, t in mapping.items()}
            map2[part] = NDProof("hyp", NDJudgment(ctx2, part))
            branches.append(nd_subst(prem, ctx2, map2))
        return NDProof(rule, NDJudgment(new_ctx, j.conclusion),
                       (p0, branches[0], branches[1]))
    if rule == "imp-intro-relaxed":
        a = j.conclusion.left
        ctx2 = new_ctx | {a}
        map2 = {h: nd_weaken(t, {a}) for h, t in mapping.items()}
        map2[a] = NDProof("hyp", NDJudgment(ctx2, a))
        prem = nd_subst(proof.premises[0], ctx2, map2)
        return NDProof(rule, NDJudgment(new_ctx, j.conclusion), (prem,))
    kids = tuple(nd_subst(p, new_ctx, mapping) for p in proof.premises)
    return NDProof(rule, NDJudgment(new_ctx, j.conclusion), kids)


def _meet_fold(formulas) -> Formula:
    items = canonical_left(formulas)
    out = items[-1]
    for f in reversed(items[:-1]):
        out = And(f, out)
    return out


def _prove_from_hyps(ctx: frozenset, goal: Formula) -> NDProof:
    """Conjunction-introduce a right-nested meet of hypotheses."""
    if goal in ctx:
        return NDProof("hyp", NDJudgment(ctx, goal))
    if isinstance(goal, And):
        return NDProof("and-intro", NDJudgment(ctx, goal),
                       (_prove_from_hyps(ctx, goal.left),
                        _prove_from_hyps(ctx, goal.right)))
    raise NDCheckError(f"cannot assemble {goal} from hypotheses")


def _project(ctx: frozenset, big: Formula, target: Formula) -> NDProof:
    """Peel a right-nested meet down to one of its components."""
    if big == target:
        return _prove_from_hyps(ctx, big) if big in ctx else \
            NDProof("hyp", NDJudgment(ctx, big))
    node = _prove_from_hyps(ctx, big) if big in ctx else None
    if node is None:
        raise NDCheckError("projection must start at a hypothesis")
    cur_formula = big
    while cur_formula != target:
        if not isinstance(cur_formula, And):
            raise NDCheckError(f"{target} is not a component of {big}")
        if cur_formula.left == target or _contains(cur_formula.left, target):
            node = NDProof("and-elim-1",
                           NDJudgment(ctx, cur_formula.left), (node,))
            cur_formula = cur_formula.left
        else:
            node = NDProof("and-elim-2",
                           NDJudgment(ctx, cur_formula.right), (node,))
            cur_formula = cur_formula.right
    return node


def _contains(tree: Formula, target: Formula) -> bool:
    if tree == target:
        return True
    if isinstance(tree, And):
        return _contains(tree.left, target) or _contains(tree.right, target)
    return False


def _d_implies_c(ctx: frozenset, d: Formula, c: Formula) -> NDProof:
    """Gamma |- D -> C given C among the derivable meets of Gamma, via Cur:
    Cur gives top -> C, imp-intro gives D -> top, and tr glues them."""
    c_proof = _prove_from_hyps(ctx, c)
    top_c = NDProof("cur", NDJudgment(ctx, Imp(TOP, c)), (c_proof,))
    d_top = NDProof(
        "imp-intro", NDJudgment(ctx, Imp(d, TOP)),
        (NDProof("top-intro", NDJudgment(frozenset({d}), TOP)),))
    return NDProof("tr-f", NDJudgment(ctx, Imp(d, c)), (d_top, top_c))


def relaxed_to_cur(proof: NDProof) -> NDProof:
    """Eliminate relaxed implication introductions using Cur, following the
    equivalence argument: collapse the context to its meet, introduce over
    the single conjunct, and glue with formalized transitivity."""
    kids = tuple(relaxed_to_cur(p) for p in proof.premises)
    if proof.rule != "imp-intro-relaxed":
        return NDProof(proof.rule, proof.judgment, kids)
    j = proof.judgment
    ctx, c = j.context, j.conclusion
    a, b = c.left, c.right
    prem = kids[0]  # ctx | {a} |- b
    if not ctx:
        single = nd_subst(prem, frozenset({a}), {})
        return NDProof("imp-intro", NDJudgment(ctx, c), (single,))
    big = _meet_fold(ctx | {a})
    big_ctx = frozenset({big})
    mapping = {h: _project(big_ctx, big, h) for h in ctx | {a}}
    collapsed = nd_subst(prem, big_ctx, mapping)          # {big} |- b
    closed = NDProof("imp-intro", NDJudgment(ctx, Imp(big, b)),
                     (nd_subst(collapsed, frozenset({big}), {}),))
    # ctx |- a -> big: meet-introduce a -> h for every conjunct h
    def build(goal: Formula) -> NDProof:
        if goal == a:
            inner = NDProof("hyp", NDJudgment(frozenset({a}), a))
            return NDProof("imp-intro", NDJudgment(ctx, Imp(a, a)), (inner,))
        if goal in ctx:
            return _d_implies_c(ctx, a, goal)
        if isinstance(goal, And):
            lhs = build(goal.left)
            rhs = build(goal.right)
            return NDProof("and-intro-f", NDJudgment(ctx, Imp(a, goal)),
                           (lhs, rhs))
        return _d_implies_c(ctx, a, goal)

    a_to_big = build(big)
    return NDProof("tr-f", NDJudgment(ctx, c), (a_to_big, closed))


def cur_to_relaxed(proof: NDProof) -> NDProof:
    """Replace Cur by the relaxed introduction (with admissible weakening)."""
    kids = tuple(cur_to_relaxed(p) for p in proof.premises)
    if proof.rule != "cur":
        return NDProof(proof.rule, proof.judgment, kids)
    j = proof.judgment
    prem = nd_weaken(kids[0], {TOP})
    return NDProof("imp-intro-relaxed", j, (prem,))


# -- embedding ---------------------------------------------------------------

def embed_subint(j: NDJudgment, system: str) -> tuple[Sequent, LogicSpec]:
    """Identity on formulas; the context becomes a sorted left sequence."""
    if system not in SUBINT_SYSTEMS:
        raise ValueError(f"unknown system {system!r}")
    left = canonical_left(j.context)
    logic = LogicSpec("STL", frozenset(EMBED_SCHEMES[system]), structural=True)
    return Sequent(left, j.conclusion), logic


def expand_nd_proof(proof: NDProof) -> ProofTree:
    """Compile a deduction into a sequent proof of the embedded logic.

    The output's root antecedent is the sorted context; every node of the
    output is schema-exact for iSTL plus the schemes of the source system.
    """
    j = proof.judgment
    ctx = canonical_left(j.context)
    c = j.conclusion
    kids = [expand_nd_proof(p) for p in proof.premises]
    rule = proof.rule

    if rule == "hyp":
        return hyp(ctx, c)
    if rule == "top-intro":
        return ax_top(ctx)
    if rule == "bot-elim":
        return cut(kids[0], ax_bot((BOT,), c), 0)
    if rule == "and-intro":
        return r_and(kids[0], kids[1])
    if rule == "and-elim-1":
        src = proof.premises[0].judgment.conclusion
        return cut(kids[0], l_and1(ax_id(src.left), 0, src.right), 0)
    if rule == "and-elim-2":
        src = proof.premises[0].judgment.conclusion
        return cut(kids[0], l_and2(ax_id(src.right), 0, src.left), 0)
    if rule == "or-intro-1":
        return r_or1(kids[0], c.right)
    if rule == "or-intro-2":
        return r_or2(kids[0], c.left)
    if rule == "or-elim":
        disj = proof.premises[0].judgment.conclusion
        t1 = arrange(kids[1], ctx + (disj.left,))
        t2 = arrange(kids[2], ctx + (disj.right,))
        t = l_or(t1, t2, len(ctx))
        return canonicalize(cut(kids[0], t, len(ctx)))
    if rule == "imp-intro":
        t = imp_intro_tree(kids[0])
        return arrange(t, ctx)
    if rule == "imp-intro-relaxed":
        t = arrange(kids[0], (c.left,) + ctx)
        for i in range(1, len(ctx) + 1):
            t = cut(scheme_p(ax_id(Nabla(t.sequent.left[i]))), t, i)
        return r_imp(t)
    if rule == "and-intro-f":
        lemma = and_intro_f_tree(c.left, c.right.left, c.right.right)
        return _cut_two(kids, lemma, ctx)
    if rule == "or-elim-f":
        lemma = or_elim_f_tree(c.left.left, c.left.right, c.right)
        return _cut_two(kids, lemma, ctx)
    if rule == "tr-f":
        mid = proof.premises[0].judgment.conclusion.right
        lemma = tr_f_tree(c.left, mid, c.right)
        return _cut_two(kids, lemma, ctx)
    if rule == "e":
        return cut(kids[0], e_tree(), 0)
    if rule == "mp":
        a = proof.premises[0].judgment.conclusion
        lemma = mp_tree(a, c)
        return _cut_two(kids, lemma, ctx)
    if rule == "cur":
        t = kids[0]
        for i in range(len(ctx)):
            t = cut(scheme_p(ax_id(Nabla(ctx[i]))), t, i)
        t = l_weak(t, 0, TOP)
        return r_imp(t)
    raise ValueError(f"unknown deduction rule {rule!r}")


def _cut_two(kids, lemma: ProofTree, ctx) -> ProofTree:
    """Discharge a two-hypothesis lemma against two context proofs."""
    t = cut(kids[0], lemma, 0)
    t = cut(kids[1], t, len(ctx))
    return canonicalize(t)
