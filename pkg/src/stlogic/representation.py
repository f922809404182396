"""Filter-frame, ternary-frame and downset representation constructions.

Each construction returns the built structure, the embedding, and an
EmbeddingReport whose verdicts are computed exhaustively over the finite
carrier (never sampled): preservation of each operation, injectivity, the
defining adjunction of the implication, and inheritance of the rule
schemes claimed for it.  Worlds and carrier elements are bitmasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .completions import (
    Completion, downset_completion, filters, ideal_completion, prime_filters,
    upsets_with_mul,
)
from .models import KripkeFrame, upset_locale
from .order import (
    FinitePoset, FiniteQuantale, MonotoneMap, SizeTooLarge, StructureError,
    mask_elements,
)
from .spacetime import Spacetime, StrongAlgebra, TemporalAlgebra, check_scheme


class PreconditionFailed(StructureError):
    def __init__(self, name, witness=None):
        super().__init__(f"precondition {name!r} failed"
                         + (f" at {witness}" if witness is not None else ""))
        self.name = name
        self.witness = witness


@dataclass
class Verdict:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        extra = f"  [{self.detail}]" if self.detail else ""
        return f"  {self.name}: {status}{extra}"


@dataclass
class EmbeddingReport:
    source: str
    target: str
    verdicts: list = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.verdicts.append(Verdict(name, bool(ok), detail))

    @property
    def all_green(self) -> bool:
        return all(v.ok for v in self.verdicts)

    def render(self) -> str:
        head = f"embedding: {self.source} -> {self.target}"
        lines = [head] + [v.line() for v in self.verdicts]
        lines.append(f"result: {'green' if self.all_green else 'RED'}")
        return "\n".join(lines)


def _world_poset(worlds: list[int], inclusion: bool) -> FinitePoset:
    n = len(worlds)
    if not inclusion:
        return FinitePoset(tuple(1 << i for i in range(n)),
                           tuple(f"F{m}" for m in worlds))
    up = []
    for i in range(n):
        row = 0
        for j in range(n):
            if worlds[i] & ~worlds[j] == 0:
                row |= 1 << j
        up.append(row)
    return FinitePoset(tuple(up), tuple(f"F{m}" for m in worlds))


@dataclass
class FilterFrameResult:
    frame: KripkeFrame
    worlds: tuple[int, ...]
    embed: dict
    report: EmbeddingReport


def filter_frame(alg, case: str, size_bound: int = 4096) -> FilterFrameResult:
    """The canonical Kripke frame over filters or prime filters.

    Cases: I  filters, discrete order, plain strong algebra;
           II filters, inclusion order, temporal algebra;
           III prime filters, discrete order, distributive join internalizing;
           IV prime filters, inclusion order, distributive temporal algebra.
    """
    if case not in ("I", "II", "III", "IV"):
        raise ValueError("case must be one of I, II, III, IV")
    temporal = case in ("II", "IV")
    prime = case in ("III", "IV")
    if temporal:
        if not isinstance(alg, TemporalAlgebra):
            raise PreconditionFailed("temporal algebra input")
        strong = alg.as_strong_algebra()
        nabla = alg.nabla
    else:
        if isinstance(alg, TemporalAlgebra):
            strong = alg.as_strong_algebra()
        else:
            strong = alg
        nabla = None
    base = strong.base
    poset = base.poset
    if not poset.is_lattice or base.unit != poset.top \
            or base.mul != poset.meet_table:
        raise PreconditionFailed("meet-monoidal structure")
    if not strong.internalizes_meets():
        w = next(
            (a, b, c)
            for a in range(base.n) for b in range(base.n) for c in range(base.n)
            if strong.imp[a][poset.meet_of(b, c)]
            != poset.meet_of(strong.imp[a][b], strong.imp[a][c]))
        raise PreconditionFailed("monoidal-structure internalization", w)
    if prime:
        if not strong.internalizes_joins():
            w = next(
                (a, b, c)
                for a in range(base.n) for b in range(base.n)
                for c in range(base.n)
                if strong.imp[poset.join_of(a, b)][c]
                != poset.meet_of(strong.imp[a][c], strong.imp[b][c]))
            raise PreconditionFailed("join internalization", w)
        worlds = prime_filters(poset)
        if not worlds:
            raise PreconditionFailed(
                "nontrivial carrier (a one-element algebra has no prime filters)")
    else:
        worlds = filters(poset)
    nw = len(worlds)
    if 1 << nw > size_bound:
        raise SizeTooLarge(f"2^{nw} upsets of worlds exceed the bound")
    imp = strong.imp

    def rel_by_imp(p: int, q: int) -> bool:
        for a in mask_elements(poset.full_mask):
            for b in range(base.n):
                if p >> imp[a][b] & 1 and q >> a & 1 and not q >> b & 1:
                    return False
        return True

    rel = frozenset(
        (i, j) for i, p in enumerate(worlds) for j, q in enumerate(worlds)
        if rel_by_imp(p, q))
    report = EmbeddingReport(
        f"case {case} strong algebra ({base.n} elements)",
        f"frame on {nw} {'prime filters' if prime else 'filters'}")
    if temporal:
        nab_rel = frozenset(
            (i, j) for i, p in enumerate(worlds) for j, q in enumerate(worlds)
            if all(q >> nabla[x] & 1 for x in mask_elements(p)))
        report.add("relation: implication and nabla definitions agree",
                   nab_rel == rel)
    wposet = _world_poset(worlds, inclusion=temporal)
    frame = KripkeFrame(wposet, rel)

    def i_of(a: int) -> int:
        out = 0
        for k, p in enumerate(worlds):
            if p >> a & 1:
                out |= 1 << k
        return out

    embed = {a: i_of(a) for a in range(base.n)}
    full = (1 << nw) - 1
    report.add("embedding lands in upsets",
               all(wposet.is_upset(m) for m in embed.values()))
    report.add("injective", len(set(embed.values())) == base.n)
    report.add("order reflecting", all(
        (embed[a] & ~embed[b] == 0) == poset.leq(a, b)
        for a in range(base.n) for b in range(base.n)))
    report.add("preserves unit", embed[base.unit] == full)
    report.add("preserves meet", all(
        embed[poset.meet_of(a, b)] == embed[a] & embed[b]
        for a in range(base.n) for b in range(base.n)))
    report.add("preserves implication", all(
        embed[imp[a][b]] == frame.imp_mask(embed[a], embed[b])
        for a in range(base.n) for b in range(base.n)))
    if prime:
        report.add("preserves join", all(
            embed[poset.join_of(a, b)] == (embed[a] | embed[b])
            for a in range(base.n) for b in range(base.n)))
        report.add("preserves bottom", embed[poset.bottom] == 0)
    if temporal:
        report.add("preserves nabla", all(
            embed[nabla[a]] == frame.nabla_mask(embed[a])
            for a in range(base.n)))
        _scheme_inheritance(alg, frame, worlds, nabla, base, report,
                            with_wf=prime)
    if not temporal and prime:
        # part (*): 1 -> 0 = 0 forces a serial relation even without nabla
        if imp[poset.top][poset.bottom] == poset.bottom:
            report.add("serial relation from 1 -> 0 = 0", all(
                frame.rsucc[i] != 0 for i in range(nw)))
    return FilterFrameResult(frame, tuple(worlds), embed, report)


def _scheme_inheritance(alg, frame, worlds, nabla, base, report, with_wf):
    poset = base.poset
    nw = len(worlds)
    holds_n, _ = check_scheme(alg, "N")
    if holds_n:
        # pi(P) = the nabla-preimage of P; normality means R = "below pi"
        pi = []
        ok = True
        for p in worlds:
            pre = 0
            for x in range(base.n):
                if p >> nabla[x] & 1:
                    pre |= 1 << x
            if pre not in worlds:
                ok = False
                break
            pi.append(worlds.index(pre))
        if ok:
            ok = all(
                ((i, j) in frame.rel) == (worlds[i] & ~worlds[pi[j]] == 0)
                for i in range(nw) for j in range(nw))
        report.add("scheme N: normal frame via the nabla preimage", ok)
        holds_h, _ = check_scheme(alg, "H")
        if holds_h and ok:
            report.add("scheme H: the normality map is an order isomorphism",
                       sorted(pi) == list(range(nw)) and all(
                           (worlds[a] & ~worlds[b] == 0)
                           == (worlds[pi[a]] & ~worlds[pi[b]] == 0)
                           for a in range(nw) for b in range(nw)))
    if check_scheme(alg, "P")[0]:
        report.add("scheme P: relation below the order", all(
            frame.worlds.leq(u, v) for (u, v) in frame.rel))
    if check_scheme(alg, "F")[0]:
        report.add("scheme F: reflexive relation", all(
            (w, w) in frame.rel for w in range(nw)))
    if with_wf and poset.bottom is not None and check_scheme(alg, "wF")[0]:
        report.add("scheme wF: serial relation", all(
            frame.rsucc[w] != 0 for w in range(nw)))


# -- ternary frames ----------------------------------------------------------

@dataclass
class TernaryFrameResult:
    umasks: tuple[int, ...]
    families: tuple[int, ...]
    tensor: list
    nabla: list
    imp: list
    unit: int
    embed: dict
    report: EmbeddingReport
    spacetime: Optional[Spacetime] = None


def ternary_frame(strong: StrongAlgebra, max_upsets: int = 20,
                  max_carrier: int = 512) -> TernaryFrameResult:
    """The spacetime on upsets of upsets induced by the ternary relation.

    Requires a left residual and internalization of the closed monoidal
    structure.  The implication and the modality are the proof's formulas;
    the adjunction is certified against all principal generators, which
    covers all triples since every family is a union of principal ones and
    the modality preserves unions by construction.
    """
    res = strong.left_residual()
    if res is None:
        raise PreconditionFailed("left residual exists")
    if not strong.internalizes_closed():
        raise PreconditionFailed("closed monoidal internalization")
    base = strong.base
    umasks, umul = upsets_with_mul(base)
    nu = len(umasks)
    if nu > max_upsets:
        raise SizeTooLarge(f"|U(A)| = {nu} exceeds bound {max_upsets}")
    uposet = _world_poset(list(umasks), inclusion=True)
    families = uposet.upsets()
    if len(families) > max_carrier:
        raise SizeTooLarge(
            f"{len(families)} upset families exceed bound {max_carrier}")
    fidx = {m: k for k, m in enumerate(families)}
    imp_t = strong.imp

    # req[p][q] = the elements forced into R by (P, Q, R) in the relation
    req = [[0] * nu for _ in range(nu)]
    for i, p in enumerate(umasks):
        for j, q in enumerate(umasks):
            out = 0
            for a in mask_elements(q):
                for b in range(base.n):
                    if p >> imp_t[a][b] & 1:
                        out |= 1 << b
            req[i][j] = out

    def fam_above(t: int) -> int:
        out = 0
        for k, pm in enumerate(umasks):
            if t & ~pm == 0:
                out |= 1 << k
        return out

    above = {t: fam_above(t) for row in req for t in row}
    for m in umasks:
        above.setdefault(m, fam_above(m))

    def in_rel(i: int, j: int, k: int) -> bool:
        return req[i][j] & ~umasks[k] == 0

    mins = {m: uposet.minimal_of(m) for m in families}
    tensor = []
    for x in families:
        row = []
        for y in families:
            out = 0
            for qi in mins[x]:
                for ri in mins[y]:
                    out |= above[umasks[umul[qi][ri]]]
            row.append(fidx[out])
        tensor.append(row)
    e_worlds = [j for j, q in enumerate(umasks) if q >> base.unit & 1]
    nab = []
    nab_per_world = []
    for i in range(nu):
        out = 0
        for j in e_worlds:
            out |= above[req[i][j]]
        nab_per_world.append(out)
    for x in families:
        out = 0
        for i in mask_elements(x):
            out |= nab_per_world[i]
        nab.append(fidx[out])
    imp = []
    for x in families:
        row = []
        for z in families:
            out = 0
            for i in range(nu):
                bad = 0
                for j in mask_elements(x):
                    bad |= above[req[i][j]]
                if bad & ~z == 0:
                    out |= 1 << i
            row.append(fidx[out])
        imp.append(row)

    def i_of(a: int) -> int:
        out = 0
        for k, pm in enumerate(umasks):
            if pm >> a & 1:
                out |= 1 << k
        return out

    embed = {a: fidx[i_of(a)] for a in range(base.n)}
    unit = embed[base.unit]
    report = EmbeddingReport(
        f"strong algebra ({base.n} elements, closed internalizing)",
        f"ternary-frame spacetime on {len(families)} upset families")
    report.add("claim (i): relation stable under left multiplication", all(
        not in_rel(i, j, k)
        or in_rel(i, umul[s][j], umul[s][k])
        for i in range(nu) for j in range(nu) for k in range(nu)
        for s in range(nu) if in_rel(i, j, k)))
    # adjunction against all principal generators covers all triples
    adj_ok = True
    for xi, x in enumerate(families):
        for zi, z in enumerate(families):
            target = families[imp[xi][zi]]
            for p in range(nu):
                lhs = families[tensor[xi][nab[fidx[above[umasks[p]]]]]] \
                    & ~z == 0
                if lhs != bool(target >> p & 1):
                    adj_ok = False
                    break
            if not adj_ok:
                break
        if not adj_ok:
            break
    report.add("adjunction X * nab Y <= Z iff Y <= X -> Z (all generators)",
               adj_ok)
    e_fam = families[unit]
    report.add("nabla oplax: nab e <= e",
               families[nab[unit]] & ~e_fam == 0)
    report.add("nabla oplax: nab (X*Y) <= nab X * nab Y", all(
        families[nab[tensor[x][y]]]
        & ~families[tensor[nab[x]][nab[y]]] == 0
        for x in range(len(families)) for y in range(len(families))))
    report.add("injective", len(set(embed.values())) == base.n)
    report.add("order reflecting", all(
        (families[embed[a]] & ~families[embed[b]] == 0) == base.poset.leq(a, b)
        for a in range(base.n) for b in range(base.n)))
    report.add("strict monoidal: unit", embed[base.unit] == unit)
    report.add("strict monoidal: tensor", all(
        embed[base.mul[a][b]] == tensor[embed[a]][embed[b]]
        for a in range(base.n) for b in range(base.n)))
    report.add("preserves implication", all(
        embed[imp_t[a][b]] == imp[embed[a]][embed[b]]
        for a in range(base.n) for b in range(base.n)))
    st = None
    if len(families) <= 64:
        q = FiniteQuantale(
            _world_poset(list(families), inclusion=True),
            tuple(tuple(r) for r in tensor), unit)
        st = Spacetime(q, MonotoneMap(q.poset, q.poset, tuple(nab)))
        report.add("carrier is a quantale and nabla oplax geometric", True)
        report.add("formula implication equals the adjoint implication", all(
            st.st_imp(x, z) == imp[x][z]
            for x in range(len(families)) for z in range(len(families))))
        report.add("adjunction on all triples (direct sweep)", all(
            (families[q.mul[x][st.nab(y)]] & ~families[z] == 0)
            == (families[y] & ~families[imp[x][z]] == 0)
            for x in range(len(families)) for y in range(len(families))
            for z in range(len(families))))
    return TernaryFrameResult(tuple(umasks), tuple(families), tensor, nab,
                              imp, unit, embed, report, st)


# -- downset representation of temporal algebras ------------------------------

@dataclass
class TemporalCompletionResult:
    spacetime: Spacetime
    completion: Completion
    embed: MonotoneMap
    imp_table: list
    report: EmbeddingReport


def downset_temporal_completion(t: TemporalAlgebra,
                                kind: str = "downset"
                                ) -> TemporalCompletionResult:
    """Complete a temporal algebra to a spacetime over its downsets/ideals.

    nabla(I) = down-closure of the pointwise image; I -> J collects the x
    with i * nab x in J for every i in I.  Scheme inheritance is certified
    for N, H, P, F, plus wF in the ideal (distributive) variant.
    """
    if kind not in ("downset", "ideal"):
        raise ValueError("kind must be downset or ideal")
    base = t.base
    comp = downset_completion(base) if kind == "downset" \
        else ideal_completion(base)
    q = comp.quantale
    masks = comp.masks
    idx = {m: k for k, m in enumerate(masks)}
    down = base.poset.down
    nab_table = []
    for m in masks:
        out = 0
        for i in mask_elements(m):
            out |= down[t.nabla[i]]
        nab_table.append(idx[out])
    st = Spacetime(q, MonotoneMap(q.poset, q.poset, tuple(nab_table)))
    imp_table = []
    for mi in masks:
        row = []
        for mj in masks:
            out = 0
            for x in range(base.n):
                if all(mj >> base.mul[i][t.nabla[x]] & 1
                       for i in mask_elements(mi)):
                    out |= 1 << x
            row.append(idx[out])
        imp_table.append(row)
    report = EmbeddingReport(
        f"temporal algebra ({base.n} elements)",
        f"{kind} spacetime ({q.n} elements)")
    n = q.n
    report.add("implication formula maps into the carrier", all(
        0 <= imp_table[i][j] < n for i in range(n) for j in range(n)))
    report.add("adjunction I * nab J <= K iff J <= I -> K (all triples)", all(
        q.leq(q.mul[i][nab_table[j]], k) == q.leq(j, imp_table[i][k])
        for i in range(n) for j in range(n) for k in range(n)))
    report.add("formula implication equals the adjoint implication", all(
        st.st_imp(i, j) == imp_table[i][j] for i in range(n) for j in range(n)))
    emb = comp.embed
    report.add("injective", emb.is_injective())
    report.add("order reflecting", emb.is_order_reflecting())
    report.add("strict monoidal: unit", emb.table[base.unit] == q.unit)
    report.add("strict monoidal: tensor", all(
        emb.table[base.mul[a][b]] == q.mul[emb.table[a]][emb.table[b]]
        for a in range(base.n) for b in range(base.n)))
    report.add("preserves nabla", all(
        emb.table[t.nabla[a]] == nab_table[emb.table[a]]
        for a in range(base.n)))
    report.add("preserves implication", all(
        emb.table[t.imp[a][b]] == imp_table[emb.table[a]][emb.table[b]]
        for a in range(base.n) for b in range(base.n)))
    if base.poset.is_lattice:
        report.add("preserves finite meets", all(
            emb.table[base.poset.meet_of(a, b)]
            == q.poset.meet_of(emb.table[a], emb.table[b])
            for a in range(base.n) for b in range(base.n)))
        if kind == "ideal":
            report.add("preserves finite joins", all(
                emb.table[base.poset.join_of(a, b)]
                == q.poset.join_of(emb.table[a], emb.table[b])
                for a in range(base.n) for b in range(base.n)))
    schemes = ["N", "H", "P", "F"] + (["wF"] if kind == "ideal" else [])
    for s in schemes:
        try:
            holds, _ = check_scheme(t, s)
        except StructureError:
            continue
        if holds:
            out_holds, w = check_scheme(st, s)
            report.add(f"scheme {s} inherited", out_holds,
                       "" if out_holds else f"witness {w}")
    return TemporalCompletionResult(st, comp, emb, imp_table, report)


# -- exploratory utility ------------------------------------------------------

def search_internalizing_counterexamples(max_size: int = 4):
    """Hunt for strong algebras that internalize their monoidal structure
    but not the closed structure.  Exploratory only: whether monoidal
    internalization alone suffices for a spacetime embedding is unknown,
    and this settles nothing; it merely lists candidate inputs worth study.
    """
    from .order import enumerate_quantales, enumerate_join_preserving_endomaps
    from .order import is_lax_monoidal

    out = []
    for q in enumerate_quantales(max_size):
        box_candidates = []
        for f in enumerate_join_preserving_endomaps(q.poset):
            from .order import right_adjoint
            g = right_adjoint(f)
            if is_lax_monoidal(g, q, q):
                box_candidates.append(g)
        for g in box_candidates:
            imp = tuple(
                tuple(g.table[q.residual_of(a, b)] for b in range(q.n))
                for a in range(q.n))
            try:
                alg = StrongAlgebra(q, imp)
            except StructureError:
                continue
            if alg.internalizes_monoidal() and not alg.internalizes_closed():
                out.append(alg)
    return out
