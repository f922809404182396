"""Text format for algebras and models.

Algebra files, one declaration per line, '#' starts a comment:

    elements: a b c
    leq: a<=b b<=c          # reflexive-transitive closure is applied
    unit: e
    mul: a b = c            # omitted pairs default to meet if `locale` is set
    locale
    nabla: a -> b           # optional; total map required when present

Model files:

    worlds: u v
    order: u<=v             # reflexive-transitive closure applied
    rel: u->v
    val p: u v
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .order import (
    FinitePoset,
    FiniteQuantale,
    MonoidalPoset,
    MonotoneMap,
    NotAntisymmetric,
    StructureError,
)


class FormatError(ValueError):
    def __init__(self, msg, line=None):
        super().__init__(msg if line is None else f"line {line}: {msg}")
        self.line = line


@dataclass
class AlgebraSpec:
    """Raw parse of an algebra file, before structure validation."""

    names: list[str]
    leq_pairs: list[tuple[int, int]]
    unit: Optional[int] = None
    mul_entries: dict[tuple[int, int], int] = field(default_factory=dict)
    locale: bool = False
    nabla: Optional[dict[int, int]] = None


def _strip(line: str) -> str:
    if "#" in line:
        line = line[: line.index("#")]
    return line.strip()


def parse_algebra_spec(text: str) -> AlgebraSpec:
    names: list[str] = []
    index: dict[str, int] = {}
    leq_pairs: list[tuple[int, int]] = []
    unit = None
    mul_entries: dict[tuple[int, int], int] = {}
    locale = False
    nabla: dict[int, int] = {}
    saw_nabla = False

    def look(tok: str, lineno: int) -> int:
        if tok not in index:
            raise FormatError(f"unknown element {tok!r}", lineno)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if line == "locale":
            locale = True
            continue
        if ":" not in line:
            raise FormatError(f"cannot parse {line!r}", lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        if key == "elements":
            for tok in rest.split():
                if tok in index:
                    raise FormatError(f"duplicate element {tok!r}", lineno)
                index[tok] = len(names)
                names.append(tok)
        elif key == "leq":
            for tok in rest.split():
                if "<=" not in tok:
                    raise FormatError(f"expected a<=b, got {tok!r}", lineno)
                a, _, b = tok.partition("<=")
                leq_pairs.append((look(a, lineno), look(b, lineno)))
        elif key == "unit":
            unit = look(rest, lineno)
        elif key == "mul":
            head, _, val = rest.partition("=")
            parts = head.split()
            if len(parts) != 2 or not val.strip():
                raise FormatError(f"expected 'mul: a b = c', got {rest!r}", lineno)
            a, b = (look(t, lineno) for t in parts)
            mul_entries[(a, b)] = look(val.strip(), lineno)
        elif key == "nabla":
            saw_nabla = True
            a, _, b = rest.partition("->")
            if not b:
                raise FormatError(f"expected 'nabla: a -> b', got {rest!r}", lineno)
            nabla[look(a.strip(), lineno)] = look(b.strip(), lineno)
        else:
            raise FormatError(f"unknown declaration {key!r}", lineno)

    if not names:
        raise FormatError("no elements declared")
    return AlgebraSpec(names, leq_pairs, unit, mul_entries, locale,
                       nabla if saw_nabla else None)


def poset_from_spec(spec: AlgebraSpec) -> FinitePoset:
    n = len(spec.names)
    up = [1 << a for a in range(n)]
    for a, b in spec.leq_pairs:
        up[a] |= 1 << b
    # transitive closure
    changed = True
    while changed:
        changed = False
        for a in range(n):
            row = up[a]
            for b in range(n):
                if row >> b & 1 and up[b] & ~row:
                    row |= up[b]
                    changed = True
            up[a] = row
    # antisymmetry must be checked here (closure hides nothing else)
    for a in range(n):
        for b in range(n):
            if a != b and up[a] >> b & 1 and up[b] >> a & 1:
                raise NotAntisymmetric(spec.names[a], spec.names[b])
    return FinitePoset(tuple(up), tuple(spec.names))


def monoidal_from_spec(spec: AlgebraSpec) -> MonoidalPoset:
    poset = poset_from_spec(spec)
    n = poset.n
    if spec.locale:
        if not poset.is_lattice:
            raise StructureError("locale flag on a carrier that is not a lattice")
        default = poset.meet_table
        unit = poset.top if spec.unit is None else spec.unit
    else:
        default = None
        unit = spec.unit
    if unit is None:
        raise StructureError("no unit declared")
    mul = [[None] * n for _ in range(n)]
    for (a, b), c in spec.mul_entries.items():
        mul[a][b] = c
    for a in range(n):
        if mul[unit][a] is None:
            mul[unit][a] = a
        if mul[a][unit] is None:
            mul[a][unit] = a
    for a in range(n):
        for b in range(n):
            if mul[a][b] is None:
                if default is None:
                    raise StructureError(
                        f"mul entry {poset.names[a]} {poset.names[b]} missing "
                        "(only locales may omit entries)")
                mul[a][b] = default[a][b]
    return MonoidalPoset(poset, tuple(tuple(r) for r in mul), unit)


def quantale_from_text(text: str) -> FiniteQuantale:
    return FiniteQuantale.from_monoidal(monoidal_from_spec(parse_algebra_spec(text)))


def monoidal_from_text(text: str) -> MonoidalPoset:
    return monoidal_from_spec(parse_algebra_spec(text))


def spacetime_from_text(text: str):
    """Parse a full spacetime (quantale plus `nabla:` lines)."""
    from .spacetime import Spacetime  # cycle guard

    spec = parse_algebra_spec(text)
    q = FiniteQuantale.from_monoidal(monoidal_from_spec(spec))
    if spec.nabla is None:
        raise StructureError("no nabla declared")
    if sorted(spec.nabla) != list(range(q.n)):
        raise StructureError("nabla must be a total map")
    nab = MonotoneMap(q.poset, q.poset, tuple(spec.nabla[a] for a in range(q.n)))
    return Spacetime(q, nab)


def algebra_to_text(m: MonoidalPoset, nabla: Optional[MonotoneMap] = None) -> str:
    names = m.names
    n = m.n
    lines = [f"elements: {' '.join(names)}"]
    covers = []
    for a in range(n):
        for b in range(n):
            if a != b and m.poset.leq(a, b):
                # only covers; closure restores the rest
                between = m.poset.up[a] & m.poset.down[b] & ~(1 << a) & ~(1 << b)
                if between == 0:
                    covers.append(f"{names[a]}<={names[b]}")
    if covers:
        lines.append("leq: " + " ".join(covers))
    lines.append(f"unit: {names[m.unit]}")
    is_meet = (
        m.poset.is_lattice
        and m.unit == m.poset.top
        and m.mul == m.poset.meet_table
    )
    if is_meet:
        lines.append("locale")
    else:
        for a in range(n):
            for b in range(n):
                lines.append(f"mul: {names[a]} {names[b]} = {names[m.mul[a][b]]}")
    if nabla is not None:
        for a in range(n):
            lines.append(f"nabla: {names[a]} -> {names[nabla.table[a]]}")
    return "\n".join(lines) + "\n"


# -- model files ------------------------------------------------------------

@dataclass
class ModelSpec:
    names: list[str]
    order_pairs: list[tuple[int, int]]
    rel: list[tuple[int, int]]
    valuation: dict[str, list[int]]


def parse_model_spec(text: str) -> ModelSpec:
    names: list[str] = []
    index: dict[str, int] = {}
    order_pairs: list[tuple[int, int]] = []
    rel: list[tuple[int, int]] = []
    valuation: dict[str, list[int]] = {}

    def look(tok: str, lineno: int) -> int:
        if tok not in index:
            raise FormatError(f"unknown world {tok!r}", lineno)
        return index[tok]

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = _strip(raw)
        if not line:
            continue
        if ":" not in line:
            raise FormatError(f"cannot parse {line!r}", lineno)
        key, _, rest = line.partition(":")
        key = key.strip()
        rest = rest.strip()
        if key == "worlds":
            for tok in rest.split():
                if tok in index:
                    raise FormatError(f"duplicate world {tok!r}", lineno)
                index[tok] = len(names)
                names.append(tok)
        elif key == "order":
            for tok in rest.split():
                a, sep, b = tok.partition("<=")
                if not sep:
                    raise FormatError(f"expected u<=v, got {tok!r}", lineno)
                order_pairs.append((look(a, lineno), look(b, lineno)))
        elif key == "rel":
            for tok in rest.split():
                a, sep, b = tok.partition("->")
                if not sep:
                    raise FormatError(f"expected u->v, got {tok!r}", lineno)
                rel.append((look(a, lineno), look(b, lineno)))
        elif key.startswith("val "):
            atom = key[4:].strip()
            if not atom:
                raise FormatError("val needs an atom name", lineno)
            valuation[atom] = [look(t, lineno) for t in rest.split()]
        else:
            raise FormatError(f"unknown declaration {key!r}", lineno)
    if not names:
        raise FormatError("no worlds declared")
    return ModelSpec(names, order_pairs, rel, valuation)


def kripke_from_text(text: str):
    from .models import KripkeFrame, KripkeModel  # cycle guard

    spec = parse_model_spec(text)
    poset = poset_from_spec(
        AlgebraSpec(spec.names, spec.order_pairs))
    rel = frozenset(spec.rel)
    frame = KripkeFrame(poset, rel)
    val = {}
    for atom, worlds in spec.valuation.items():
        mask = 0
        for w in worlds:
            mask |= 1 << w
        val[atom] = mask
    return KripkeModel(frame, val)


def kripke_to_text(model) -> str:
    poset = model.frame.worlds
    names = poset.names
    lines = [f"worlds: {' '.join(names)}"]
    pairs = [
        f"{names[a]}<={names[b]}"
        for a in range(poset.n)
        for b in range(poset.n)
        if a != b and poset.leq(a, b)
    ]
    if pairs:
        lines.append("order: " + " ".join(pairs))
    if model.frame.rel:
        lines.append("rel: " + " ".join(
            f"{names[a]}->{names[b]}" for a, b in sorted(model.frame.rel)))
    for atom in sorted(model.valuation):
        worlds = [names[w] for w in range(poset.n)
                  if model.valuation[atom] >> w & 1]
        lines.append(f"val {atom}: {' '.join(worlds)}")
    return "\n".join(lines) + "\n"
