"""Downset, ideal, upset and filter completions of finite monoidal posets.

Subsets of a carrier are bitmasks throughout.  A completion materializes the
full completed carrier as a FiniteQuantale whose element i corresponds to the
mask ``masks[i]``; masks are kept so callers can relate completed elements
back to the source.  This is affordable because source carriers are tiny
(at most 2^5 downsets for the sizes this package enumerates).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional

from .order import (
    FinitePoset,
    FiniteQuantale,
    MonoidalPoset,
    MonotoneMap,
    NoFiniteJoins,
    NotDistributive,
    SizeTooLarge,
    StructureError,
    is_lax_monoidal,
    is_oplax_monoidal,
    mask_elements,
)


class LaxityMismatch(StructureError):
    pass


@dataclass(frozen=True)
class Completion:
    """A completed quantale together with the mask each element stands for."""

    source: MonoidalPoset
    quantale: FiniteQuantale
    masks: tuple[int, ...]
    embed: MonotoneMap
    kind: str

    def index_of(self, mask: int) -> int:
        return self.masks.index(mask)


def _subset_poset(masks: list[int], names: tuple[str, ...]) -> FinitePoset:
    n = len(masks)
    up = []
    for i in range(n):
        row = 0
        for j in range(n):
            if masks[i] & ~masks[j] == 0:
                row |= 1 << j
        up.append(row)
    return FinitePoset(tuple(up), names)


def _downset_mul(a: MonoidalPoset, masks: list[int], prefix: str):
    """Build quantale data for a carrier of downsets with the completed
    multiplication I*J = {x : exists i in I, j in J with x <= i*j}."""
    idx = {m: k for k, m in enumerate(masks)}
    down = a.poset.down
    n = len(masks)
    mul = []
    for i in range(n):
        row = []
        for j in range(n):
            out = 0
            for x in mask_elements(masks[i]):
                for y in mask_elements(masks[j]):
                    out |= down[a.mul[x][y]]
            if out not in idx:
                raise StructureError(
                    "completed multiplication left the carrier; "
                    "input violates the completion's preconditions")
            row.append(idx[out])
        mul.append(tuple(row))
    unit = idx[down[a.unit]]
    names = tuple(f"{prefix}{m}" for m in masks)
    poset = _subset_poset(masks, names)
    q = FiniteQuantale(poset, tuple(mul), unit)
    embed = MonotoneMap(a.poset, poset, tuple(idx[down[x]] for x in range(a.n)))
    return q, embed


def downset_completion(a: MonoidalPoset) -> Completion:
    """All downsets ordered by inclusion; the embedding is i(a) = {x : x <= a}."""
    masks = a.poset.downsets()
    q, embed = _downset_mul(a, masks, "D")
    return Completion(a, q, tuple(masks), embed, "downset")


def ideals(poset: FinitePoset) -> list[int]:
    """Downward closed masks containing bottom and closed under binary joins."""
    if poset.bottom is None:
        raise NoFiniteJoins(-1, -1)
    out = []
    for m in poset.downsets():
        if not m >> poset.bottom & 1:
            continue
        elems = mask_elements(m)
        ok = True
        for i, x in enumerate(elems):
            for y in elems[i + 1:]:
                j = poset.join_of(x, y)
                if j is None:
                    raise NoFiniteJoins(x, y)
                if not m >> j & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return out


def ideal_completion(a: MonoidalPoset) -> Completion:
    """Ideals ordered by inclusion; requires finite joins and distributivity."""
    a.check_distributive()
    masks = ideals(a.poset)
    q, embed = _downset_mul(a, masks, "D")
    return Completion(a, q, tuple(masks), embed, "ideal")


def lift_map(f: MonotoneMap, src: MonoidalPoset, tgt: MonoidalPoset,
             kind: str = "downset",
             completions: Optional[tuple[Completion, Completion]] = None):
    """Lift a lax or oplax monoidal map to the completed quantales.

    f_!(I) = {x : exists i in I with x <= f(i)}.  Returns (f_!, src
    completion, tgt completion); f_! has the same (op)laxity as f.
    """
    lax = is_lax_monoidal(f, src, tgt)
    oplax = is_oplax_monoidal(f, src, tgt)
    if not lax and not oplax:
        raise LaxityMismatch("map is neither lax nor oplax monoidal")
    if completions is not None:
        ca, cb = completions
    elif kind == "downset":
        ca, cb = downset_completion(src), downset_completion(tgt)
    elif kind == "ideal":
        if not f.is_join_preserving():
            raise LaxityMismatch("ideal lift needs a finite-join preserving map")
        ca, cb = ideal_completion(src), ideal_completion(tgt)
    else:
        raise ValueError(f"unknown completion kind {kind!r}")
    down = tgt.poset.down
    idx = {m: k for k, m in enumerate(cb.masks)}
    table = []
    for m in ca.masks:
        out = 0
        for i in mask_elements(m):
            out |= down[f.table[i]]
        table.append(idx[out])
    lifted = MonotoneMap(ca.quantale.poset, cb.quantale.poset, tuple(table))
    return lifted, ca, cb


def upsets_with_mul(a: MonoidalPoset) -> tuple[list[int], list[list[int]]]:
    """The poset U(A) of upsets with P*Q = {x : exists y in P, z in Q, x >= y*z},
    returned as (masks, multiplication table on mask indices)."""
    masks = a.poset.upsets()
    idx = {m: k for k, m in enumerate(masks)}
    up = a.poset.up
    mul = []
    for P in masks:
        row = []
        for Q in masks:
            out = 0
            for y in mask_elements(P):
                for z in mask_elements(Q):
                    out |= up[a.mul[y][z]]
            row.append(idx[out])
        mul.append(row)
    return masks, mul


def upset_completion(a: MonoidalPoset, max_upsets: int = 20,
                     max_carrier: int = 512) -> Completion:
    """Upsets of upsets of A; doubly exponential, so both layers are guarded.

    The completed masks index into U(A): element k of the carrier is the
    family {P in U(A) : mask bit for P set}, upward closed under inclusion
    of upsets.  The embedding is i(a) = {P in U(A) : a in P}.
    """
    umasks, umul = upsets_with_mul(a)
    nu = len(umasks)
    if nu > max_upsets:
        raise SizeTooLarge(f"|U(A)| = {nu} exceeds bound {max_upsets}")
    # order on U(A) is inclusion of masks
    uposet = _subset_poset(umasks, tuple(f"U{m}" for m in umasks))
    families = uposet.upsets()
    if len(families) > max_carrier:
        raise SizeTooLarge(
            f"carrier of the upset completion has {len(families)} elements "
            f"(bound {max_carrier})")
    fidx = {m: k for k, m in enumerate(families)}
    # contains[t] = family mask of all P with P >= t (as an upset of A)
    contains = {}

    def family_above(t: int) -> int:
        if t not in contains:
            out = 0
            for k, P in enumerate(umasks):
                if t & ~P == 0:
                    out |= 1 << k
            contains[t] = out
        return contains[t]

    mins = {m: uposet.minimal_of(m) for m in families}
    mul = []
    for X in families:
        row = []
        for Y in families:
            out = 0
            for qi in mins[X]:
                for ri in mins[Y]:
                    out |= family_above(umasks[umul[qi][ri]])
            row.append(fidx[out])
        mul.append(tuple(row))
    embed_masks = []
    for x in range(a.n):
        fam = 0
        for k, P in enumerate(umasks):
            if P >> x & 1:
                fam |= 1 << k
        embed_masks.append(fam)
    unit = fidx[embed_masks[a.unit]]
    names = tuple(f"U{m}" for m in families)
    poset = _subset_poset(families, names)
    q = FiniteQuantale(poset, tuple(mul), unit)
    embed = MonotoneMap(a.poset, poset, tuple(fidx[m] for m in embed_masks))
    return Completion(a, q, tuple(families), embed, "upset")


def filters(poset: FinitePoset) -> list[int]:
    """All filters of a meet-semilattice: nonempty upsets closed under meets."""
    if poset.top is None:
        raise StructureError("filters need a top element")
    out = []
    for m in poset.upsets():
        if m == 0:
            continue
        elems = mask_elements(m)
        ok = True
        for i, x in enumerate(elems):
            for y in elems[i + 1:]:
                w = poset.meet_of(x, y)
                if w is None:
                    raise StructureError(f"no meet for {x}, {y}")
                if not m >> w & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(m)
    return out


def check_lattice_distributive(poset: FinitePoset) -> None:
    if not poset.is_lattice:
        raise StructureError("not a lattice")
    for a in range(poset.n):
        for b in range(poset.n):
            for c in range(poset.n):
                lhs = poset.meet_of(a, poset.join_of(b, c))
                rhs = poset.join_of(poset.meet_of(a, b), poset.meet_of(a, c))
                if lhs != rhs:
                    raise NotDistributive(a, b, c)


def prime_filters(poset: FinitePoset) -> list[int]:
    """Proper filters P with a v b in P implying a in P or b in P."""
    check_lattice_distributive(poset)
    bot = poset.bottom
    out = []
    for m in filters(poset):
        if m >> bot & 1:
            continue
        prime = True
        for a in range(poset.n):
            for b in range(a + 1, poset.n):
                j = poset.join_of(a, b)
                if m >> j & 1 and not m >> a & 1 and not m >> b & 1:
                    prime = False
                    break
            if not prime:
                break
        if prime:
            out.append(m)
    return out
