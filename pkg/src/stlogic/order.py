"""Finite posets, monotone maps, monoidal posets, quantales and adjoints.

Carriers are index sets {0, .., n-1}; the order is stored as bitmask rows
(``up[a]`` is the mask of all b with a <= b) so that joins, meets and the
various exhaustive checks are plain integer operations.  Every structure
validates its axioms on construction and is immutable afterwards, which
makes all operations in this package pure functions over shared values.

Joins of arbitrary subsets are computed as folds of binary joins starting
from the bottom element.  That is only correct because every carrier here
is finite; none of this code makes sense for infinite posets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Iterator, Optional, Sequence


class StructureError(ValueError):
    """A finite structure violates one of its defining axioms."""


class NotAntisymmetric(StructureError):
    def __init__(self, a, b):
        super().__init__(f"antisymmetry fails: {a} <= {b} and {b} <= {a} with {a} != {b}")
        self.witness = (a, b)


class NotTransitive(StructureError):
    def __init__(self, a, b, c):
        super().__init__(f"transitivity fails: {a} <= {b} <= {c} but not {a} <= {c}")
        self.witness = (a, b, c)


class NoJoin(StructureError):
    def __init__(self, subset):
        super().__init__(f"subset {sorted(subset)} has no least upper bound")
        self.witness = frozenset(subset)


class NotJoinPreserving(StructureError):
    def __init__(self, subset):
        super().__init__(f"map does not preserve the join of {sorted(subset)}")
        self.witness = frozenset(subset)


class NotMeetPreserving(StructureError):
    def __init__(self, subset):
        super().__init__(f"map does not preserve the meet of {sorted(subset)}")
        self.witness = frozenset(subset)


class NotDistributive(StructureError):
    def __init__(self, a, b, c):
        super().__init__(f"multiplication does not distribute at ({a}, {b}, {c})")
        self.witness = (a, b, c)


class NoFiniteJoins(StructureError):
    def __init__(self, a, b):
        super().__init__(f"join of {a} and {b} does not exist")
        self.witness = (a, b)


class SizeTooLarge(StructureError):
    pass


def _mask_iter(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_elements(mask: int) -> list[int]:
    """Indices set in a bitmask, ascending."""
    return list(_mask_iter(mask))


@dataclass(frozen=True)
class FinitePoset:
    """A finite partial order; ``up[a]`` is the bitmask {b : a <= b}."""

    up: tuple[int, ...]
    names: tuple[str, ...] = ()

    def __post_init__(self):
        n = len(self.up)
        if n == 0:
            raise StructureError("empty carrier")
        if not self.names:
            object.__setattr__(self, "names", tuple(f"x{i}" for i in range(n)))
        if len(self.names) != n:
            raise StructureError("names/carrier size mismatch")
        full = (1 << n) - 1
        for a, row in enumerate(self.up):
            if row & ~full:
                raise StructureError("order mask out of range")
            if not row >> a & 1:
                raise StructureError(f"order not reflexive at {a}")
        # smallest witnesses first: scan in index order
        for a in range(n):
            for b in _mask_iter(self.up[a]):
                if b != a and self.up[b] >> a & 1:
                    raise NotAntisymmetric(a, b)
                if self.up[b] & ~self.up[a]:
                    c = (self.up[b] & ~self.up[a] & -(self.up[b] & ~self.up[a])).bit_length() - 1
                    raise NotTransitive(a, b, c)

    @property
    def n(self) -> int:
        return len(self.up)

    @cached_property
    def down(self) -> tuple[int, ...]:
        """down[a] = bitmask {b : b <= a}."""
        n = self.n
        out = [0] * n
        for a in range(n):
            for b in _mask_iter(self.up[a]):
                out[b] |= 1 << a
        return tuple(out)

    def leq(self, a: int, b: int) -> bool:
        return bool(self.up[a] >> b & 1)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def bottom(self) -> Optional[int]:
        for a in range(self.n):
            if self.up[a] == self.full_mask:
                return a
        return None

    @cached_property
    def top(self) -> Optional[int]:
        for a in range(self.n):
            if self.down[a] == self.full_mask:
                return a
        return None

    def upper_bounds(self, subset_mask: int) -> int:
        m = self.full_mask
        for a in _mask_iter(subset_mask):
            m &= self.up[a]
        return m

    def lower_bounds(self, subset_mask: int) -> int:
        m = self.full_mask
        for a in _mask_iter(subset_mask):
            m &= self.down[a]
        return m

    def least_of(self, mask: int) -> Optional[int]:
        """The least element of a mask, or None."""
        for a in _mask_iter(mask):
            if mask & ~self.up[a] == 0:
                return a
        return None

    def greatest_of(self, mask: int) -> Optional[int]:
        for a in _mask_iter(mask):
            if mask & ~self.down[a] == 0:
                return a
        return None

    def join_of(self, a: int, b: int) -> Optional[int]:
        return self.least_of(self.upper_bounds(1 << a | 1 << b))

    def meet_of(self, a: int, b: int) -> Optional[int]:
        return self.greatest_of(self.lower_bounds(1 << a | 1 << b))

    @cached_property
    def is_lattice(self) -> bool:
        """Bottom plus all binary joins; on a finite carrier this gives all joins and meets."""
        if self.bottom is None:
            return False
        return all(
            self.join_of(a, b) is not None
            for a in range(self.n)
            for b in range(a + 1, self.n)
        )

    @cached_property
    def join_table(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_lattice:
            raise NoJoin(set(range(self.n)))
        return tuple(
            tuple(self.join_of(a, b) for b in range(self.n)) for a in range(self.n)
        )

    @cached_property
    def meet_table(self) -> tuple[tuple[int, ...], ...]:
        if not self.is_lattice:
            raise NoJoin(set(range(self.n)))
        return tuple(
            tuple(self.meet_of(a, b) for b in range(self.n)) for a in range(self.n)
        )

    def join_mask(self, mask: int) -> int:
        """Join of a subset given as a mask; empty join is the bottom."""
        bot = self.bottom
        if bot is None:
            raise NoJoin(set())
        acc = bot
        for a in _mask_iter(mask):
            j = self.join_of(acc, a)
            if j is None:
                raise NoJoin(set(_mask_iter(mask)))
            acc = j
        return acc

    def meet_mask(self, mask: int) -> int:
        top = self.top
        if top is None:
            raise NoJoin(set())
        acc = top
        for a in _mask_iter(mask):
            m = self.meet_of(acc, a)
            if m is None:
                raise NoJoin(set(_mask_iter(mask)))
            acc = m
        return acc

    @cached_property
    def join_irreducibles(self) -> tuple[int, ...]:
        """Elements that are not the join of the elements strictly below them."""
        out = []
        for a in range(self.n):
            below = self.down[a] & ~(1 << a)
            if self.bottom is not None and self.join_mask(below) != a:
                out.append(a)
        return tuple(out)

    def is_upset(self, mask: int) -> bool:
        return all(self.up[a] & ~mask == 0 for a in _mask_iter(mask))

    def is_downset(self, mask: int) -> bool:
        return all(self.down[a] & ~mask == 0 for a in _mask_iter(mask))

    def downsets(self) -> list[int]:
        """All downward closed masks, ascending as integers (deterministic)."""
        return [m for m in range(1 << self.n) if self.is_downset(m)]

    def upsets(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.is_upset(m)]

    def up_closure(self, mask: int) -> int:
        out = 0
        for a in _mask_iter(mask):
            out |= self.up[a]
        return out

    def down_closure(self, mask: int) -> int:
        out = 0
        for a in _mask_iter(mask):
            out |= self.down[a]
        return out

    def minimal_of(self, mask: int) -> list[int]:
        return [a for a in _mask_iter(mask) if self.down[a] & mask == 1 << a]

    def opposite(self) -> "FinitePoset":
        return FinitePoset(self.down, self.names)

    def rename(self, names: Sequence[str]) -> "FinitePoset":
        return FinitePoset(self.up, tuple(names))

    def canonical_key(self):
        """Minimum over relabelings of the order matrix; equal iff isomorphic."""
        return _canonical_poset_key(self.up)


def _permute_mask(mask: int, relabel: Sequence[int]) -> int:
    out = 0
    for a in _mask_iter(mask):
        out |= 1 << relabel[a]
    return out


def _canonical_poset_key(up: Sequence[int]) -> tuple[int, ...]:
    n = len(up)
    best = None
    for p in permutations(range(n)):
        # p maps old index -> new index
        rows = [0] * n
        for a in range(n):
            rows[p[a]] = _permute_mask(up[a], p)
        key = tuple(rows)
        if best is None or key < best:
            best = key
    return best


def validate_poset(pairs: Iterable[tuple[int, int]], n: int,
                   names: Sequence[str] = ()) -> FinitePoset:
    """Build a poset from (a, b) pairs meaning a <= b.

    Reflexive pairs are added automatically; antisymmetry and transitivity
    are checked as given, with the smallest witnesses reported.
    """
    up = [1 << a for a in range(n)]
    for a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise StructureError(f"pair ({a}, {b}) out of range")
        up[a] |= 1 << b
    return FinitePoset(tuple(up), tuple(names))


@dataclass(frozen=True)
class MonotoneMap:
    """An order preserving function given by its value table."""

    source: FinitePoset
    target: FinitePoset
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.source.n:
            raise StructureError("table size mismatch")
        for v in self.table:
            if not 0 <= v < self.target.n:
                raise StructureError("table value out of range")
        for a in range(self.source.n):
            for b in _mask_iter(self.source.up[a]):
                if not self.target.leq(self.table[a], self.table[b]):
                    raise StructureError(
                        f"not monotone: {a} <= {b} but f({a}) !<= f({b})")

    def __call__(self, a: int) -> int:
        return self.table[a]

    def compose(self, other: "MonotoneMap") -> "MonotoneMap":
        """self after other."""
        if other.target is not self.source and other.target != self.source:
            raise StructureError("composition mismatch")
        return MonotoneMap(other.source, self.target,
                           tuple(self.table[v] for v in other.table))

    def is_identity(self) -> bool:
        return self.source == self.target and self.table == tuple(range(self.source.n))

    def check_join_preserving(self) -> None:
        """Binary joins plus bottom; enough for all joins on a finite lattice."""
        src, tgt = self.source, self.target
        if src.bottom is None or tgt.bottom is None:
            raise NotJoinPreserving(set())
        if self.table[src.bottom] != tgt.bottom:
            raise NotJoinPreserving(set())
        for a in range(src.n):
            for b in range(a + 1, src.n):
                j = src.join_of(a, b)
                if j is None:
                    raise NoJoin({a, b})
                tj = tgt.join_of(self.table[a], self.table[b])
                if tj != self.table[j]:
                    raise NotJoinPreserving({a, b})

    def is_join_preserving(self) -> bool:
        try:
            self.check_join_preserving()
            return True
        except StructureError:
            return False

    def check_meet_preserving(self) -> None:
        src, tgt = self.source, self.target
        if src.top is None or tgt.top is None:
            raise NotMeetPreserving(set())
        if self.table[src.top] != tgt.top:
            raise NotMeetPreserving(set())
        for a in range(src.n):
            for b in range(a + 1, src.n):
                m = src.meet_of(a, b)
                if m is None:
                    raise NoJoin({a, b})
                tm = tgt.meet_of(self.table[a], self.table[b])
                if tm != self.table[m]:
                    raise NotMeetPreserving({a, b})

    def is_meet_preserving(self) -> bool:
        try:
            self.check_meet_preserving()
            return True
        except StructureError:
            return False

    def is_order_reflecting(self) -> bool:
        return all(
            self.source.leq(a, b)
            for a in range(self.source.n)
            for b in range(self.source.n)
            if self.target.leq(self.table[a], self.table[b])
        )

    def is_injective(self) -> bool:
        return len(set(self.table)) == len(self.table)


def identity_map(p: FinitePoset) -> MonotoneMap:
    return MonotoneMap(p, p, tuple(range(p.n)))


@dataclass(frozen=True)
class MonoidalPoset:
    """A poset with a compatible monoid (Def: associative, unital, monotone)."""

    poset: FinitePoset
    mul: tuple[tuple[int, ...], ...]
    unit: int

    def __post_init__(self):
        n = self.poset.n
        if len(self.mul) != n or any(len(r) != n for r in self.mul):
            raise StructureError("multiplication table has wrong shape")
        if not 0 <= self.unit < n:
            raise StructureError("unit out of range")
        mul = self.mul
        e = self.unit
        for a in range(n):
            if mul[e][a] != a or mul[a][e] != a:
                raise StructureError(f"unit law fails at {a}")
        for a in range(n):
            for b in range(n):
                ab = mul[a][b]
                for c in range(n):
                    if mul[ab][c] != mul[a][mul[b][c]]:
                        raise StructureError(
                            f"associativity fails at ({a}, {b}, {c})")
        up = self.poset.up
        for a in range(n):
            for b in _mask_iter(up[a]):
                if b == a:
                    continue
                for c in range(n):
                    if not up[mul[c][a]] >> mul[c][b] & 1:
                        raise StructureError(
                            f"multiplication not monotone at {c} * ({a} <= {b})")
                    if not up[mul[a][c]] >> mul[b][c] & 1:
                        raise StructureError(
                            f"multiplication not monotone at ({a} <= {b}) * {c}")

    @property
    def n(self) -> int:
        return self.poset.n

    @property
    def names(self):
        return self.poset.names

    def tensor(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def leq(self, a: int, b: int) -> bool:
        return self.poset.leq(a, b)

    def is_distributive(self) -> bool:
        """Multiplication distributes over all finite joins (incl. empty)."""
        try:
            self.check_distributive()
            return True
        except StructureError:
            return False

    def check_distributive(self) -> None:
        p = self.poset
        if p.bottom is None:
            raise NoFiniteJoins(-1, -1)
        bot = p.bottom
        n = self.n
        for a in range(n):
            if self.mul[a][bot] != bot:
                raise NotDistributive(a, bot, bot)
            if self.mul[bot][a] != bot:
                raise NotDistributive(bot, a, a)
        for b in range(n):
            for c in range(b + 1, n):
                j = p.join_of(b, c)
                if j is None:
                    raise NoFiniteJoins(b, c)
                for a in range(n):
                    lhs = self.mul[a][j]
                    rhs = p.join_of(self.mul[a][b], self.mul[a][c])
                    if rhs is None or lhs != rhs:
                        raise NotDistributive(a, b, c)
                    lhs2 = self.mul[j][a]
                    rhs2 = p.join_of(self.mul[b][a], self.mul[c][a])
                    if rhs2 is None or lhs2 != rhs2:
                        raise NotDistributive(b, c, a)

    def opposite(self) -> "MonoidalPoset":
        return MonoidalPoset(self.poset.opposite(), self.mul, self.unit)

    def canonical_key(self):
        n = self.n
        best = None
        for p in permutations(range(n)):
            rows = [0] * n
            for a in range(n):
                rows[p[a]] = _permute_mask(self.poset.up[a], p)
            tab = [[0] * n for _ in range(n)]
            for a in range(n):
                for b in range(n):
                    tab[p[a]][p[b]] = p[self.mul[a][b]]
            key = (tuple(rows), tuple(map(tuple, tab)), p[self.unit])
            if best is None or key < best:
                best = key
        return best


def meet_monoidal(poset: FinitePoset) -> MonoidalPoset:
    """The meet structure as monoid; requires a lattice with top."""
    if not poset.is_lattice:
        raise StructureError("meet structure needs a lattice")
    return MonoidalPoset(poset, poset.meet_table, poset.top)


class FiniteQuantale(MonoidalPoset):
    """A monoidal poset whose carrier is a (finite, hence complete) lattice
    and whose multiplication distributes over all joins on both sides."""

    def __init__(self, poset, mul, unit):
        super().__init__(poset=poset, mul=mul, unit=unit)
        if not poset.is_lattice:
            raise NoJoin(set(range(poset.n)))
        self.check_distributive()

    @classmethod
    def from_monoidal(cls, m: MonoidalPoset) -> "FiniteQuantale":
        return cls(m.poset, m.mul, m.unit)

    @property
    def bottom(self) -> int:
        return self.poset.bottom

    @property
    def top(self) -> int:
        return self.poset.top

    @cached_property
    def is_locale(self) -> bool:
        return self.unit == self.top and self.mul == self.poset.meet_table

    def join(self, elems: Iterable[int]) -> int:
        mask = 0
        for a in elems:
            mask |= 1 << a
        return self.poset.join_mask(mask)

    def meet(self, elems: Iterable[int]) -> int:
        mask = 0
        for a in elems:
            mask |= 1 << a
        return self.poset.meet_mask(mask)

    @cached_property
    def residual_table(self) -> tuple[tuple[int, ...], ...]:
        """residual_table[a][c] is a => c, the right adjoint of a * (-)."""
        n = self.n
        out = []
        for a in range(n):
            row = []
            for c in range(n):
                mask = 0
                for x in range(n):
                    if self.poset.leq(self.mul[a][x], c):
                        mask |= 1 << x
                row.append(self.poset.join_mask(mask))
            out.append(tuple(row))
        return tuple(out)

    def residual_of(self, a: int, c: int) -> int:
        return self.residual_table[a][c]


def join(q: FiniteQuantale, elems: Iterable[int]) -> int:
    """Least upper bound of a subset; the empty join is the bottom."""
    return q.join(elems)


def right_adjoint(f: MonotoneMap) -> MonotoneMap:
    """g(b) = join {a : f(a) <= b}; requires f join preserving."""
    f.check_join_preserving()
    src, tgt = f.source, f.target
    table = []
    for b in range(tgt.n):
        mask = 0
        for a in range(src.n):
            if tgt.leq(f.table[a], b):
                mask |= 1 << a
        table.append(src.join_mask(mask))
    return MonotoneMap(tgt, src, tuple(table))


def left_adjoint(g: MonotoneMap) -> MonotoneMap:
    """f(a) = meet {b : a <= g(b)}; requires g meet preserving."""
    g.check_meet_preserving()
    src, tgt = g.source, g.target
    table = []
    for a in range(tgt.n):
        mask = 0
        for b in range(src.n):
            if tgt.leq(a, g.table[b]):
                mask |= 1 << b
        table.append(src.meet_mask(mask))
    return MonotoneMap(tgt, src, tuple(table))


def is_adjunction(f: MonotoneMap, g: MonotoneMap) -> bool:
    """f(a) <= b iff a <= g(b), at every pair."""
    return all(
        f.target.leq(f.table[a], b) == f.source.leq(a, g.table[b])
        for a in range(f.source.n)
        for b in range(f.target.n)
    )


def residual(q: FiniteQuantale, a: int) -> MonotoneMap:
    """The canonical implication a => (-): right adjoint of x -> a * x."""
    return MonotoneMap(q.poset, q.poset, q.residual_table[a])


def is_lax_monoidal(f: MonotoneMap, src: MonoidalPoset, tgt: MonoidalPoset) -> bool:
    t = f.table
    if not tgt.leq(tgt.unit, t[src.unit]):
        return False
    return all(
        tgt.leq(tgt.mul[t[a]][t[b]], t[src.mul[a][b]])
        for a in range(src.n) for b in range(src.n)
    )


def is_oplax_monoidal(f: MonotoneMap, src: MonoidalPoset, tgt: MonoidalPoset) -> bool:
    t = f.table
    if not tgt.leq(t[src.unit], tgt.unit):
        return False
    return all(
        tgt.leq(t[src.mul[a][b]], tgt.mul[t[a]][t[b]])
        for a in range(src.n) for b in range(src.n)
    )


def is_strict_monoidal(f: MonotoneMap, src: MonoidalPoset, tgt: MonoidalPoset) -> bool:
    return is_lax_monoidal(f, src, tgt) and is_oplax_monoidal(f, src, tgt)


# ---------------------------------------------------------------------------
# enumeration

MAX_ENUM_SIZE = 5


def _labelled_posets(n: int) -> Iterator[tuple[int, ...]]:
    """All reflexive antisymmetric transitive up-mask vectors on n points."""
    # Depth-first fill of up[a] rows with incremental checks.
    rows: list[int] = []

    def consistent(a: int, row: int) -> bool:
        if not row >> a & 1:
            return False
        for b in range(a):
            if row >> b & 1 and rows[b] >> a & 1:
                return False  # antisymmetry with earlier rows
        return True

    def transitive(up: list[int]) -> bool:
        for a in range(n):
            for b in _mask_iter(up[a]):
                if up[b] & ~up[a]:
                    return False
        return True

    def rec(a: int) -> Iterator[tuple[int, ...]]:
        if a == n:
            up = list(rows)
            if transitive(up):
                yield tuple(up)
            return
        for row in range(1 << n):
            if consistent(a, row):
                rows.append(row)
                yield from rec(a + 1)
                rows.pop()

    yield from rec(0)


@lru_cache(maxsize=None)
def enumerate_lattices(n: int) -> tuple[FinitePoset, ...]:
    """Non-isomorphic lattices with exactly n elements, deterministic order."""
    if n > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"lattice enumeration capped at {MAX_ENUM_SIZE}")
    seen = {}
    for up in _labelled_posets(n):
        p = FinitePoset(up)
        if not p.is_lattice:
            continue
        key = _canonical_poset_key(up)
        if key not in seen:
            seen[key] = FinitePoset(key)
    return tuple(seen[k] for k in sorted(seen))


def _monoid_structures(poset: FinitePoset) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
    """All (mul, unit) making the lattice a quantale, by pruned backtracking."""
    n = poset.n
    bot = poset.bottom
    up = poset.up
    joins = poset.join_table
    for e in range(n):
        if e == bot and n > 1:
            continue  # bot * x = bot forces x = bot
        mul = [[-1] * n for _ in range(n)]
        for a in range(n):
            mul[e][a] = a
            mul[a][e] = a
            mul[bot][a] = bot
            mul[a][bot] = bot
        if n > 1 and (mul[e][bot] != bot or mul[bot][e] != bot):
            continue
        free = [(a, b) for a in range(n) for b in range(n) if mul[a][b] == -1]

        def monotone_ok(a: int, b: int, v: int) -> bool:
            for a2 in range(n):
                for b2 in range(n):
                    w = mul[a2][b2]
                    if w == -1:
                        continue
                    if up[a2] >> a & 1 and up[b2] >> b & 1 and not up[w] >> v & 1:
                        return False
                    if up[a] >> a2 & 1 and up[b] >> b2 & 1 and not up[v] >> w & 1:
                        return False
            return True

        def full_check() -> bool:
            for a in range(n):
                for b in range(n):
                    ab = mul[a][b]
                    for c in range(n):
                        if mul[ab][c] != mul[a][mul[b][c]]:
                            return False
            for a in range(n):
                for b in range(n):
                    for c in range(n):
                        j = joins[b][c]
                        if mul[a][j] != joins[mul[a][b]][mul[a][c]]:
                            return False
                        if mul[j][a] != joins[mul[b][a]][mul[c][a]]:
                            return False
            return True

        def rec(i: int) -> Iterator[tuple[tuple[tuple[int, ...], ...], int]]:
            if i == len(free):
                if full_check():
                    yield tuple(tuple(r) for r in mul), e
                return
            a, b = free[i]
            for v in range(n):
                mul[a][b] = -1
                if monotone_ok(a, b, v):
                    mul[a][b] = v
                    yield from rec(i + 1)
            mul[a][b] = -1

        yield from rec(0)


@lru_cache(maxsize=None)
def enumerate_quantales(max_size: int) -> tuple[FiniteQuantale, ...]:
    """All non-isomorphic quantales with carrier size <= max_size."""
    if max_size > MAX_ENUM_SIZE:
        raise SizeTooLarge(f"quantale enumeration capped at {MAX_ENUM_SIZE}")
    out = []
    for n in range(1, max_size + 1):
        for lattice in enumerate_lattices(n):
            seen = set()
            for mul, e in _monoid_structures(lattice):
                q = FiniteQuantale(lattice, mul, e)
                key = q.canonical_key()
                if key not in seen:
                    seen.add(key)
                    out.append(q)
    return tuple(out)


def enumerate_join_preserving_endomaps(poset: FinitePoset) -> Iterator[MonotoneMap]:
    """All join preserving maps poset -> poset (poset must be a lattice)."""
    if not poset.is_lattice:
        raise NoJoin(set(range(poset.n)))
    n = poset.n
    irr = poset.join_irreducibles
    bot = poset.bottom

    def extend(assign: dict[int, int]) -> Optional[tuple[int, ...]]:
        table = []
        for a in range(n):
            mask = 0
            for j in irr:
                if poset.leq(j, a):
                    mask |= 1 << assign[j]
            table.append(poset.join_mask(mask))
        if table[bot] != bot:
            return None
        for a in range(n):
            for b in range(a + 1, n):
                if table[poset.join_of(a, b)] != poset.join_of(table[a], table[b]):
                    return None
        return tuple(table)

    def rec(i: int, assign: dict[int, int]) -> Iterator[MonotoneMap]:
        if i == len(irr):
            table = extend(assign)
            if table is not None:
                yield MonotoneMap(poset, poset, table)
            return
        j = irr[i]
        for v in range(n):
            ok = all(
                poset.leq(assign[irr[k]], v) or not poset.leq(irr[k], j)
                for k in range(i)
            ) and all(
                poset.leq(v, assign[irr[k]]) or not poset.leq(j, irr[k])
                for k in range(i)
            )
            if ok:
                assign[j] = v
                yield from rec(i + 1, assign)
                del assign[j]

    yield from rec(0, {})
