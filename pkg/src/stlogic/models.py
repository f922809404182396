"""Kripke models, topological models, forcing, validity and enumeration.

World sets are index sets; subsets of worlds (valuations, denotations) are
bitmasks.  Kripke forcing follows the modal clauses: nab A holds at w when
some R-predecessor of w forces A, and A -> B holds at w when every
R-successor forcing A forces B.  In the Kripke (structural) setting the
tensor collapses to meet and 1 to top.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import permutations, product
from typing import Iterable, Iterator, Optional

from .order import (
    FinitePoset,
    FiniteQuantale,
    MonotoneMap,
    SizeTooLarge,
    StructureError,
    mask_elements,
    _permute_mask,
)
from .spacetime import SCHEMES, Spacetime
from .syntax import (
    And, Atom, Bot, Formula, Imp, Nabla, One, Or, Sequent, Tensor, Top,
    sequent_atoms,
)


class UnknownAtom(KeyError):
    pass


@dataclass(frozen=True)
class KripkeFrame:
    """A poset of worlds with an order compatible accessibility relation."""

    worlds: FinitePoset
    rel: frozenset

    def __post_init__(self):
        object.__setattr__(self, "rel", frozenset(self.rel))
        p = self.worlds
        for (u, v) in self.rel:
            if not (0 <= u < p.n and 0 <= v < p.n):
                raise StructureError("relation out of range")
        for (u, v) in self.rel:
            for u2 in mask_elements(p.down[u]):
                for v2 in mask_elements(p.up[v]):
                    if (u2, v2) not in self.rel:
                        raise StructureError(
                            f"R not compatible with the order at "
                            f"({u2} <= {u}, {u} R {v}, {v} <= {v2})")

    @property
    def n(self) -> int:
        return self.worlds.n

    @cached_property
    def rsucc(self) -> tuple[int, ...]:
        out = [0] * self.n
        for (u, v) in self.rel:
            out[u] |= 1 << v
        return tuple(out)

    @cached_property
    def rpred(self) -> tuple[int, ...]:
        out = [0] * self.n
        for (u, v) in self.rel:
            out[v] |= 1 << u
        return tuple(out)

    def nabla_mask(self, mask: int) -> int:
        """R-image: {v : exists u in mask with (u, v) in R}."""
        out = 0
        for u in mask_elements(mask):
            out |= self.rsucc[u]
        return out

    def imp_mask(self, x: int, y: int) -> int:
        """{w : every R-successor of w in x is in y}; an upset by compatibility."""
        out = 0
        for w in range(self.n):
            if self.rsucc[w] & x & ~y == 0:
                out |= 1 << w
        return out

    def canonical_key(self):
        best = None
        n = self.n
        for p in permutations(range(n)):
            rows = [0] * n
            for a in range(n):
                rows[p[a]] = _permute_mask(self.worlds.up[a], p)
            rel = tuple(sorted((p[u], p[v]) for (u, v) in self.rel))
            key = (tuple(rows), rel)
            if best is None or key < best:
                best = key
        return best


@dataclass(frozen=True)
class KripkeModel:
    frame: KripkeFrame
    valuation: dict

    def __post_init__(self):
        p = self.frame.worlds
        for atom, mask in self.valuation.items():
            if not p.is_upset(mask):
                raise StructureError(f"valuation of {atom!r} is not an upset")

    @property
    def n(self) -> int:
        return self.frame.n

    def denotation(self, f: Formula, _memo=None) -> int:
        if _memo is None:
            _memo = {}
        if f in _memo:
            return _memo[f]
        fr = self.frame
        full = fr.worlds.full_mask
        if isinstance(f, Atom):
            if f.name not in self.valuation:
                raise UnknownAtom(f.name)
            out = self.valuation[f.name]
        elif isinstance(f, (Top, One)):
            out = full
        elif isinstance(f, Bot):
            out = 0
        elif isinstance(f, (And, Tensor)):
            out = self.denotation(f.left, _memo) & self.denotation(f.right, _memo)
        elif isinstance(f, Or):
            out = self.denotation(f.left, _memo) | self.denotation(f.right, _memo)
        elif isinstance(f, Imp):
            out = fr.imp_mask(self.denotation(f.left, _memo),
                              self.denotation(f.right, _memo))
        elif isinstance(f, Nabla):
            out = fr.nabla_mask(self.denotation(f.body, _memo))
        else:
            raise TypeError(f"not a formula: {f!r}")
        _memo[f] = out
        return out

    def forces(self, w: int, f: Formula) -> bool:
        return bool(self.denotation(f) >> w & 1)

    def valid(self, s: Sequent) -> bool:
        memo = {}
        mask = self.frame.worlds.full_mask
        for f in s.left:
            mask &= self.denotation(f, memo)
        return mask & ~self.denotation(s.right, memo) == 0

    def canonical_key(self):
        n = self.n
        atoms = tuple(sorted(self.valuation))
        best = None
        for p in permutations(range(n)):
            rows = [0] * n
            for a in range(n):
                rows[p[a]] = _permute_mask(self.frame.worlds.up[a], p)
            rel = tuple(sorted((p[u], p[v]) for (u, v) in self.frame.rel))
            vals = tuple(_permute_mask(self.valuation[a], p) for a in atoms)
            key = (tuple(rows), rel, atoms, vals)
            if best is None or key < best:
                best = key
        return best


def forces(m: KripkeModel, w: int, f: Formula) -> bool:
    return m.forces(w, f)


@dataclass(frozen=True)
class PropositionalKripkeModel:
    """Worlds with a bare relation; the language here has no nabla/tensor/1."""

    n: int
    rel: frozenset
    valuation: dict
    persistent: bool = False

    def __post_init__(self):
        object.__setattr__(self, "rel", frozenset(self.rel))
        if self.persistent:
            for atom, mask in self.valuation.items():
                for (u, v) in self.rel:
                    if mask >> u & 1 and not mask >> v & 1:
                        raise StructureError(
                            f"valuation of {atom!r} is not R-upward closed")

    @cached_property
    def rsucc(self) -> tuple[int, ...]:
        out = [0] * self.n
        for (u, v) in self.rel:
            out[u] |= 1 << v
        return tuple(out)

    def denotation(self, f: Formula, _memo=None) -> int:
        if _memo is None:
            _memo = {}
        if f in _memo:
            return _memo[f]
        full = (1 << self.n) - 1
        if isinstance(f, Atom):
            if f.name not in self.valuation:
                raise UnknownAtom(f.name)
            out = self.valuation[f.name]
        elif isinstance(f, Top):
            out = full
        elif isinstance(f, Bot):
            out = 0
        elif isinstance(f, And):
            out = self.denotation(f.left, _memo) & self.denotation(f.right, _memo)
        elif isinstance(f, Or):
            out = self.denotation(f.left, _memo) | self.denotation(f.right, _memo)
        elif isinstance(f, Imp):
            x = self.denotation(f.left, _memo)
            y = self.denotation(f.right, _memo)
            out = 0
            for w in range(self.n):
                if self.rsucc[w] & x & ~y == 0:
                    out |= 1 << w
        else:
            raise StructureError(
                "propositional models only interpret top/bot/and/or/imp")
        _memo[f] = out
        return out

    def forces(self, w: int, f: Formula) -> bool:
        return bool(self.denotation(f) >> w & 1)

    def valid(self, s: Sequent) -> bool:
        memo = {}
        mask = (1 << self.n) - 1
        for f in s.left:
            mask &= self.denotation(f, memo)
        return mask & ~self.denotation(s.right, memo) == 0


@dataclass(frozen=True)
class TopologicalModel:
    spacetime: Spacetime
    valuation: dict

    def value(self, f: Formula, _memo=None) -> int:
        if _memo is None:
            _memo = {}
        if f in _memo:
            return _memo[f]
        q = self.spacetime.quantale
        if isinstance(f, Atom):
            if f.name not in self.valuation:
                raise UnknownAtom(f.name)
            out = self.valuation[f.name]
        elif isinstance(f, Top):
            out = q.top
        elif isinstance(f, Bot):
            out = q.bottom
        elif isinstance(f, One):
            out = q.unit
        elif isinstance(f, And):
            out = q.poset.meet_of(self.value(f.left, _memo),
                                  self.value(f.right, _memo))
        elif isinstance(f, Or):
            out = q.poset.join_of(self.value(f.left, _memo),
                                  self.value(f.right, _memo))
        elif isinstance(f, Tensor):
            out = q.mul[self.value(f.left, _memo)][self.value(f.right, _memo)]
        elif isinstance(f, Imp):
            out = self.spacetime.st_imp(self.value(f.left, _memo),
                                        self.value(f.right, _memo))
        elif isinstance(f, Nabla):
            out = self.spacetime.nab(self.value(f.body, _memo))
        else:
            raise TypeError(f"not a formula: {f!r}")
        _memo[f] = out
        return out

    def valid(self, s: Sequent) -> bool:
        q = self.spacetime.quantale
        memo = {}
        acc = q.unit
        for f in s.left:
            acc = q.mul[acc][self.value(f, memo)]
        return q.leq(acc, self.value(s.right, memo))


def valid(m, s: Sequent) -> bool:
    return m.valid(s)


def upset_locale(poset: FinitePoset) -> tuple[FiniteQuantale, tuple[int, ...]]:
    """The locale of upsets of a poset, with the mask of each element."""
    masks = poset.upsets()
    idx = {m: k for k, m in enumerate(masks)}
    n = len(masks)
    up = []
    for i in range(n):
        row = 0
        for j in range(n):
            if masks[i] & ~masks[j] == 0:
                row |= 1 << j
        up.append(row)
    carrier = FinitePoset(tuple(up), tuple(f"U{m}" for m in masks))
    mul = tuple(
        tuple(idx[masks[i] & masks[j]] for j in range(n)) for i in range(n)
    )
    return FiniteQuantale(carrier, mul, idx[poset.full_mask]), tuple(masks)


def kripke_to_spacetime(k: KripkeModel) -> TopologicalModel:
    """The spacetime on the upset locale with the R-image modality; validity
    of every sequent is preserved and reflected."""
    q, masks = upset_locale(k.frame.worlds)
    idx = {m: i for i, m in enumerate(masks)}
    nab_table = tuple(idx[k.frame.nabla_mask(m)] for m in masks)
    st = Spacetime(q, MonotoneMap(q.poset, q.poset, nab_table))
    val = {atom: idx[mask] for atom, mask in k.valuation.items()}
    return TopologicalModel(st, val)


def check_kripke_scheme(k, scheme: str):
    """Scheme conditions on a Kripke frame or model; returns (holds, witness).

    For N the witness on success is the (unique) normality map pi; on
    failure it is None.  For the other schemes the witness on failure is the
    smallest offending world or pair.
    """
    frame = k.frame if isinstance(k, KripkeModel) else k
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    n = frame.n
    p = frame.worlds
    if scheme in ("N", "H"):
        pi = _find_pi(frame)
        if pi is None:
            return False, None
        if scheme == "N":
            return True, pi
        if sorted(pi) != list(range(n)):
            return False, pi
        inv = [0] * n
        for i, v in enumerate(pi):
            inv[v] = i
        iso = all(
            p.leq(a, b) == p.leq(pi[a], pi[b]) for a in range(n) for b in range(n)
        )
        return (True, pi) if iso else (False, pi)
    if scheme == "P":
        for (u, v) in sorted(frame.rel):
            if not p.leq(u, v):
                return False, (u, v)
        return True, None
    if scheme == "F":
        for w in range(n):
            if (w, w) not in frame.rel:
                return False, w
        return True, None
    # wF: R serial
    for u in range(n):
        if frame.rsucc[u] == 0:
            return False, u
    return True, None


def _find_pi(frame: KripkeFrame):
    """An order preserving pi with (u, v) in R iff u <= pi(v), if one exists."""
    p = frame.worlds
    n = frame.n
    for pi in product(range(n), repeat=n):
        ok = all(
            ((u, v) in frame.rel) == p.leq(u, pi[v])
            for u in range(n) for v in range(n)
        )
        if ok and all(
            p.leq(pi[a], pi[b]) for a in range(n) for b in range(n) if p.leq(a, b)
        ):
            return tuple(pi)
    return None


MAX_WORLDS = 5


def enumerate_posets(n: int, discrete: bool = False) -> Iterator[FinitePoset]:
    from .order import _labelled_posets

    if discrete:
        yield FinitePoset(tuple(1 << a for a in range(n)))
        return
    seen = set()
    for up in _labelled_posets(n):
        key = FinitePoset(up).canonical_key()
        if key not in seen:
            seen.add(key)
            yield FinitePoset(key)


def compatible_relations(poset: FinitePoset) -> list[frozenset]:
    """All accessibility relations compatible with the order, ascending."""
    n = poset.n
    pairs = [(u, v) for u in range(n) for v in range(n)]
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
        ok = True
        for (u, v) in rel:
            for u2 in mask_elements(poset.down[u]):
                for v2 in mask_elements(poset.up[v]):
                    if (u2, v2) not in rel:
                        ok = False
                        break
                if not ok:
                    break
            if not ok:
                break
        if ok:
            out.append(frozenset(rel))
    return out


def enumerate_kripke_frames(max_worlds: int, schemes: Iterable[str] = (),
                            order_mode: str = "posets") -> list[KripkeFrame]:
    """Frames up to isomorphism whose relation satisfies the scheme conditions."""
    if max_worlds > MAX_WORLDS:
        raise SizeTooLarge(f"frame enumeration capped at {MAX_WORLDS} worlds")
    schemes = tuple(schemes)
    seen = set()
    out = []
    for n in range(1, max_worlds + 1):
        for poset in enumerate_posets(n, discrete=order_mode == "discrete"):
            for rel in compatible_relations(poset):
                frame = KripkeFrame(poset, rel)
                if not all(check_kripke_scheme(frame, s)[0] for s in schemes):
                    continue
                key = frame.canonical_key()
                if key not in seen:
                    seen.add(key)
                    out.append(frame)
    return out


def enumerate_kripke_models(max_worlds: int, schemes: Iterable[str] = (),
                            atoms: Iterable[str] = ("p",),
                            order_mode: str = "posets") -> Iterator[KripkeModel]:
    """All models up to relabeling over the given atoms."""
    atoms = tuple(atoms)
    for frame in enumerate_kripke_frames(max_worlds, schemes, order_mode):
        upsets = frame.worlds.upsets()
        seen = set()
        for combo in product(upsets, repeat=len(atoms)):
            model = KripkeModel(frame, dict(zip(atoms, combo)))
            key = model.canonical_key()
            if key not in seen:
                seen.add(key)
                yield model


# -- propositional model classes (for the weak-implication systems) ---------

def _is_rooted_tree(n: int, rel: frozenset) -> bool:
    if n == 1:
        return True
    roots = [r for r in range(n)
             if all((r, w) in rel for w in range(n) if w != r)]
    if not roots:
        return False
    r = roots[0]
    for u in range(n):
        for v in range(n):
            for w in range(n):
                if (u, v) in rel and (v, w) in rel and (u, w) not in rel:
                    return False
    for w in range(n):
        preds = [u for u in range(n) if u != w and (u, w) in rel]
        for i, u in enumerate(preds):
            for v in preds[i + 1:]:
                if ((u, v) in rel) == ((v, u) in rel):
                    return False
    return True


PROP_CLASSES = {
    "KPC": (),
    "EKPC": ("serial",),
    "KTPC": ("reflexive",),
    "BPC": ("transitive", "persistent", "tree"),
    "EBPC": ("transitive", "persistent", "tree", "serial"),
    "IPC": ("transitive", "persistent", "tree", "reflexive"),
}


def _prop_class_ok(n: int, rel: frozenset, conds) -> bool:
    if "serial" in conds and any(
            not any((u, v) in rel for v in range(n)) for u in range(n)):
        return False
    if "reflexive" in conds and any((w, w) not in rel for w in range(n)):
        return False
    if "transitive" in conds:
        for (u, v) in rel:
            for w in range(n):
                if (v, w) in rel and (u, w) not in rel:
                    return False
    if "tree" in conds and not _is_rooted_tree(n, rel):
        return False
    return True


def enumerate_propositional_models(max_worlds: int, system: str,
                                   atoms: Iterable[str] = ("p",),
                                   ) -> Iterator[PropositionalKripkeModel]:
    if system not in PROP_CLASSES:
        raise ValueError(f"unknown system {system!r}")
    if max_worlds > MAX_WORLDS:
        raise SizeTooLarge(f"model enumeration capped at {MAX_WORLDS} worlds")
    conds = PROP_CLASSES[system]
    atoms = tuple(atoms)
    persistent = "persistent" in conds
    for n in range(1, max_worlds + 1):
        pairs = [(u, v) for u in range(n) for v in range(n)]
        seen = set()
        for bits in range(1 << len(pairs)):
            rel = frozenset(pairs[i] for i in range(len(pairs)) if bits >> i & 1)
            if not _prop_class_ok(n, rel, conds):
                continue
            for combo in product(range(1 << n), repeat=len(atoms)):
                if persistent and any(
                    mask >> u & 1 and not mask >> v & 1
                    for mask in combo for (u, v) in rel
                ):
                    continue
                key = _prop_canonical(n, rel, combo)
                if key in seen:
                    continue
                seen.add(key)
                yield PropositionalKripkeModel(
                    n, rel, dict(zip(atoms, combo)), persistent=persistent)


def _prop_canonical(n: int, rel: frozenset, combo):
    best = None
    for p in permutations(range(n)):
        r = tuple(sorted((p[u], p[v]) for (u, v) in rel))
        vals = tuple(_permute_mask(m, p) for m in combo)
        key = (r, vals)
        if best is None or key < best:
            best = key
    return best
