"""Workbench for finite quantales with a temporal modality, their sequent
calculi, Kripke and topological semantics and representation constructions,
all verified exhaustively at small carrier sizes."""

__version__ = "0.1.0"
