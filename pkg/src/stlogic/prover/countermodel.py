"""Countermodel search over the enumerated model universes.

Structural logics are refuted in Kripke models of the matching class;
weak-implication systems in propositional models of their class; the
non-structural logics in spacetimes over small quantales.  A returned
model invalidates the sequent; a miss is inconclusive.
"""

from __future__ import annotations

from itertools import product
from typing import Optional

from ..models import (
    KripkeModel, PropositionalKripkeModel, TopologicalModel,
    enumerate_kripke_frames, enumerate_propositional_models,
)
from ..spacetime import enumerate_spacetimes, satisfies_schemes
from ..syntax import Sequent, Tensor, One, sequent_atoms, subformulas
from .rules import LogicSpec


def _uses_tensor(s: Sequent) -> bool:
    for f in s.left + (s.right,):
        for g in subformulas(f):
            if isinstance(g, (Tensor, One)):
                return True
    return False


def search_countermodel(s: Sequent, logic: LogicSpec, max_worlds: int):
    """First enumerated model of the logic's class invalidating s, or None."""
    atoms = tuple(sorted(sequent_atoms(s))) or ("p",)
    if logic.is_subint:
        for m in enumerate_propositional_models(max_worlds, logic.base, atoms):
            if not m.valid(s):
                return m
        return None
    if logic.effective_structural:
        for frame in enumerate_kripke_frames(max_worlds,
                                             logic.effective_schemes):
            upsets = frame.worlds.upsets()
            for combo in product(upsets, repeat=len(atoms)):
                m = KripkeModel(frame, dict(zip(atoms, combo)))
                if not m.valid(s):
                    return m
        return None
    # non-structural: spacetimes over quantales of bounded size
    size = min(max_worlds, 5)
    for st in enumerate_spacetimes(size):
        if not satisfies_schemes(st, logic.effective_schemes):
            continue
        for combo in product(range(st.n), repeat=len(atoms)):
            m = TopologicalModel(st, dict(zip(atoms, combo)))
            if not m.valid(s):
                return m
    return None
