"""Non-commutative spacetimes, temporal and strong algebras.

A spacetime is a quantale with a join preserving oplax endomap (the
temporal modality); its implication a ->s b is box(a => b) where box is
the right adjoint of the modality and => the canonical residual.  The
elementary counterpart is a temporal algebra, where the adjunction
a * nab(b) <= c  iff  b <= a -> c is postulated directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Optional

from .order import (
    FiniteQuantale,
    MonoidalPoset,
    MonotoneMap,
    StructureError,
    is_lax_monoidal,
    is_oplax_monoidal,
    is_strict_monoidal,
    left_adjoint,
    mask_elements,
    right_adjoint,
)

SCHEMES = ("N", "H", "P", "F", "wF")


class SchemeNViolated(StructureError):
    pass


class NotGeometric(StructureError):
    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.witness = witness


class NotEmbedding(StructureError):
    pass


class NoLeftAdjoint(StructureError):
    pass


@dataclass(frozen=True)
class Spacetime:
    """A quantale with a join preserving oplax modality."""

    quantale: FiniteQuantale
    nabla: MonotoneMap

    def __post_init__(self):
        q = self.quantale
        if self.nabla.source != q.poset or self.nabla.target != q.poset:
            raise StructureError("nabla must be an endomap of the quantale")
        self.nabla.check_join_preserving()
        # On a locale every join preserving endomap is oplax (monotonicity
        # plus top unit), so the check is skipped there.
        if not q.is_locale and not is_oplax_monoidal(self.nabla, q, q):
            raise StructureError("nabla is not oplax monoidal")

    @property
    def n(self) -> int:
        return self.quantale.n

    def nab(self, a: int) -> int:
        return self.nabla.table[a]

    @cached_property
    def box(self) -> MonotoneMap:
        return right_adjoint(self.nabla)

    def st_imp(self, a: int, b: int) -> int:
        return self.box.table[self.quantale.residual_of(a, b)]

    @cached_property
    def st_imp_table(self) -> tuple[tuple[int, ...], ...]:
        n = self.n
        return tuple(
            tuple(self.st_imp(a, b) for b in range(n)) for a in range(n)
        )

    def as_temporal_algebra(self) -> "TemporalAlgebra":
        return TemporalAlgebra(self.quantale, self.nabla.table, self.st_imp_table)


def box_of(s: Spacetime) -> MonotoneMap:
    """The right adjoint of the modality; lax monoidal since nabla is oplax."""
    return s.box


def st_implication(s: Spacetime, a: int, b: int) -> int:
    return s.st_imp(a, b)


def enumerate_nablas(q: FiniteQuantale) -> Iterator[MonotoneMap]:
    """All join preserving oplax endomaps of a quantale, deterministic order."""
    from .order import enumerate_join_preserving_endomaps

    for f in enumerate_join_preserving_endomaps(q.poset):
        if q.is_locale or is_oplax_monoidal(f, q, q):
            yield f


def enumerate_spacetimes(max_size: int) -> Iterator[Spacetime]:
    from .order import enumerate_quantales

    for q in enumerate_quantales(max_size):
        for nab in enumerate_nablas(q):
            yield Spacetime(q, nab)


@dataclass(frozen=True)
class TemporalAlgebra:
    """Monoidal poset with nabla and -> tied by a * nab(b) <= c iff b <= a -> c."""

    base: MonoidalPoset
    nabla: tuple[int, ...]
    imp: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = self.base
        n = b.n
        if len(self.nabla) != n or len(self.imp) != n:
            raise StructureError("table size mismatch")
        for a in range(n):
            for x in range(n):
                for c in range(n):
                    lhs = b.leq(b.mul[a][self.nabla[x]], c)
                    rhs = b.leq(x, self.imp[a][c])
                    if lhs != rhs:
                        raise StructureError(
                            f"temporal adjunction fails at ({a}, {x}, {c})")

    @property
    def n(self) -> int:
        return self.base.n

    def nab(self, a: int) -> int:
        return self.nabla[a]

    def imp_of(self, a: int, b: int) -> int:
        return self.imp[a][b]

    def as_strong_algebra(self) -> "StrongAlgebra":
        return StrongAlgebra(self.base, self.imp)

    @cached_property
    def nabla_map(self) -> MonotoneMap:
        return MonotoneMap(self.base.poset, self.base.poset, self.nabla)


@dataclass(frozen=True)
class StrongAlgebra:
    """Monoidal poset with an implication internalizing reflexivity and
    transitivity of the order."""

    base: MonoidalPoset
    imp: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        b = self.base
        n = b.n
        if len(self.imp) != n or any(len(r) != n for r in self.imp):
            raise StructureError("implication table has wrong shape")
        for a in range(n):
            if not b.leq(b.unit, self.imp[a][a]):
                raise StructureError(f"e <= {a} -> {a} fails")
        for a in range(n):
            for x in range(n):
                for c in range(n):
                    if not b.leq(b.mul[self.imp[a][x]][self.imp[x][c]],
                                 self.imp[a][c]):
                        raise StructureError(
                            f"transitivity axiom fails at ({a}, {x}, {c})")
        for a in range(n):
            for a2 in range(n):
                if not b.leq(a, a2):
                    continue
                for c in range(n):
                    if not b.leq(self.imp[a2][c], self.imp[a][c]):
                        raise StructureError(
                            "implication not antitone in its first argument")
                    if not b.leq(self.imp[c][a], self.imp[c][a2]):
                        raise StructureError(
                            "implication not monotone in its second argument")

    @property
    def n(self) -> int:
        return self.base.n

    def imp_of(self, a: int, b: int) -> int:
        return self.imp[a][b]

    def internalizes_monoidal(self) -> bool:
        """a -> b <= (c * a) -> (c * b) for all triples."""
        b = self.base
        return all(
            b.leq(self.imp[x][y], self.imp[b.mul[c][x]][b.mul[c][y]])
            for x in range(self.n) for y in range(self.n) for c in range(self.n)
        )

    def left_residual(self) -> Optional[tuple[tuple[int, ...], ...]]:
        """The residual of the multiplication if it exists: a * b <= c iff
        b <= res[a][c]."""
        b = self.base
        n = self.n
        out = []
        for a in range(n):
            row = []
            for c in range(n):
                mask = 0
                for x in range(n):
                    if b.leq(b.mul[a][x], c):
                        mask |= 1 << x
                g = b.poset.greatest_of(mask)
                if g is None or not all(
                    b.leq(b.mul[a][x], c) == b.leq(x, g) for x in range(n)
                ):
                    return None
                row.append(g)
            out.append(tuple(row))
        return tuple(out)

    def internalizes_closed(self) -> bool:
        """Closed plus monoidal internalization plus a*b -> c <= b -> (a => c)."""
        res = self.left_residual()
        if res is None or not self.internalizes_monoidal():
            return False
        b = self.base
        return all(
            b.leq(self.imp[b.mul[a][x]][c], self.imp[x][res[a][c]])
            for a in range(self.n) for x in range(self.n) for c in range(self.n)
        )

    def internalizes_joins(self) -> bool:
        """(a v b) -> c = (a -> c) ^ (b -> c); needs joins and meets."""
        p = self.base.poset
        if not p.is_lattice:
            return False
        return all(
            self.imp[p.join_of(a, b)][c]
            == p.meet_of(self.imp[a][c], self.imp[b][c])
            for a in range(self.n) for b in range(self.n) for c in range(self.n)
        )

    def internalizes_meets(self) -> bool:
        """a -> (b ^ c) = (a -> b) ^ (a -> c); the meet-monoidal reading of
        monoidal internalization."""
        p = self.base.poset
        if not p.is_lattice:
            return False
        return all(
            self.imp[a][p.meet_of(b, c)]
            == p.meet_of(self.imp[a][b], self.imp[a][c])
            for a in range(self.n) for b in range(self.n) for c in range(self.n)
        )


def check_scheme(x, scheme: str) -> tuple[bool, Optional[int]]:
    """Whether a Spacetime or TemporalAlgebra satisfies a rule scheme.

    Returns (holds, witness); the witness is the smallest failing element,
    or None when the scheme holds.  wF on a structure without a bottom is
    reported as inapplicable by raising StructureError.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"unknown scheme {scheme!r}")
    if isinstance(x, Spacetime):
        base = x.quantale
        nab = x.nabla.table
        nabla_map = x.nabla
    else:
        base = x.base
        nab = x.nabla
        nabla_map = x.nabla_map
    n = base.n
    if scheme == "N":
        if not base.leq(base.unit, nab[base.unit]):
            return False, base.unit
        for a in range(n):
            for b in range(n):
                if nab[base.mul[a][b]] != base.mul[nab[a]][nab[b]]:
                    return False, a
        return True, None
    if scheme == "H":
        holds_n, w = check_scheme(x, "N")
        if not holds_n:
            return False, w
        if isinstance(x, Spacetime):
            # bijective strict geometric: joins are preserved by construction
            if len(set(nab)) != n:
                dup = min(a for a in range(n) if nab.count(nab[a]) > 1)
                return False, dup
            return True, None
        imp = x.imp
        for a in range(n):
            for b in range(n):
                if nab[imp[a][b]] != imp[nab[a]][nab[b]]:
                    return False, a
        return True, None
    if scheme == "P":
        for a in range(n):
            if not base.leq(nab[a], a):
                return False, a
        return True, None
    if scheme == "F":
        for a in range(n):
            if not base.leq(a, nab[a]):
                return False, a
        return True, None
    # wF
    bot = base.poset.bottom
    if bot is None:
        raise StructureError("wF is inapplicable: no bottom element")
    for a in range(n):
        if nab[a] == bot and a != bot:
            return False, a
    return True, None


def satisfies_schemes(x, schemes) -> bool:
    return all(check_scheme(x, s)[0] for s in schemes)


@dataclass(frozen=True)
class ImageAlgebra:
    """The left residuated algebra the modality induces on its image."""

    carrier: tuple[int, ...]
    imp: dict
    meet: dict


def nabla_image_algebra(t: TemporalAlgebra) -> ImageAlgebra:
    """Restrict to nabla's image with a ->' b = nabla(a -> b); needs scheme N.

    The result is left residuated: a * b <= c iff b <= a ->' c on the image,
    with meets (when the base has them) given by nabla(box(a ^ b)).
    """
    holds, w = check_scheme(t, "N")
    if not holds:
        raise SchemeNViolated(f"nabla does not preserve multiplication (witness {w})")
    base = t.base
    carrier = tuple(sorted(set(t.nabla)))
    imp = {}
    for a in carrier:
        for b in carrier:
            imp[(a, b)] = t.nabla[t.imp[a][b]]
    # residuation on the image
    for a in carrier:
        for b in carrier:
            for c in carrier:
                lhs = base.leq(base.mul[a][b], c)
                rhs = base.leq(b, imp[(a, c)])
                if lhs != rhs:
                    raise StructureError(
                        f"image residuation fails at ({a}, {b}, {c})")
    meet = {}
    p = base.poset
    if p.is_lattice:
        # box on the underlying structure: greatest x with nabla x <= a
        def box(a: int) -> int:
            mask = 0
            for y in range(base.n):
                if base.leq(t.nabla[y], a):
                    mask |= 1 << y
            return p.join_mask(mask)

        for a in carrier:
            for b in carrier:
                meet[(a, b)] = t.nabla[box(p.meet_of(a, b))]
    return ImageAlgebra(carrier, imp, meet)


def is_geometric_morphism(f: MonotoneMap, s: Spacetime, t: Spacetime) -> bool:
    """Strict geometric and commuting with the modalities."""
    if not is_strict_monoidal(f, s.quantale, t.quantale):
        return False
    if not f.is_join_preserving():
        return False
    return all(
        f.table[s.nab(a)] == t.nab(f.table[a]) for a in range(s.n)
    )


def is_logical_morphism(f: MonotoneMap, s: Spacetime, t: Spacetime,
                        return_witness: bool = False):
    """f_!(f b * nab_T a) = b * nab_S (f_! a) at all pairs, cross-checked
    against direct preservation of the spacetime implication."""
    if not is_geometric_morphism(f, s, t):
        raise NotGeometric("not a geometric morphism of spacetimes")
    try:
        f_shriek = left_adjoint(f)
    except StructureError as exc:
        raise NoLeftAdjoint(str(exc))
    qs, qt = s.quantale, t.quantale
    witness = None
    for a in range(t.n):
        for b in range(s.n):
            lhs = f_shriek.table[qt.mul[f.table[b]][t.nab(a)]]
            rhs = qs.mul[b][s.nab(f_shriek.table[a])]
            if lhs != rhs:
                witness = (a, b)
                break
        if witness:
            break
    direct = all(
        f.table[s.st_imp(a, b)] == t.st_imp(f.table[a], f.table[b])
        for a in range(s.n) for b in range(s.n)
    )
    ok = witness is None
    if ok != direct:
        raise StructureError(
            "logical-morphism characterizations disagree; this contradicts "
            "the adjoint characterization and indicates a broken input")
    if return_witness:
        return ok, witness
    return ok


def transfer_nabla(s: Spacetime, f: MonotoneMap, target: FiniteQuantale) -> Spacetime:
    """Move the modality along a strict geometric embedding into target.

    nabla_Y = f . nabla_S . f_!; f becomes a logical morphism and schemes
    F and wF are inherited.
    """
    if not is_strict_monoidal(f, s.quantale, target) or not f.is_join_preserving():
        raise NotGeometric("f is not strict geometric")
    if not f.is_order_reflecting():
        raise NotEmbedding("f is not order reflecting")
    try:
        f_shriek = left_adjoint(f)
    except StructureError as exc:
        raise NoLeftAdjoint(str(exc))
    table = tuple(
        f.table[s.nab(f_shriek.table[a])] for a in range(target.n)
    )
    nab = MonotoneMap(target.poset, target.poset, table)
    return Spacetime(target, nab)
