from .rules import (
    FL_L, IPC, ISTL, STL, LogicSpec, ProofCheckError, ProofTree,
    RuleMismatch, SchemeNotEnabled, StructuralNotEnabled, check_proof,
    is_valid_proof, proof_from_sexpr, proof_to_sexpr,
)
from .search import DepthExhausted, search_proof
from .countermodel import search_countermodel
from .library import paper_derivation_library
from .nd import (
    NDJudgment, NDProof, RuleNotInSystem, embed_subint, expand_nd_proof,
    nd_check, nd_is_valid, nd_search,
)

__all__ = [
    "FL_L", "IPC", "ISTL", "STL", "LogicSpec", "ProofCheckError",
    "ProofTree", "RuleMismatch", "SchemeNotEnabled", "StructuralNotEnabled",
    "check_proof", "is_valid_proof", "proof_from_sexpr", "proof_to_sexpr",
    "DepthExhausted", "search_proof", "search_countermodel",
    "paper_derivation_library", "NDJudgment", "NDProof", "RuleNotInSystem",
    "embed_subint", "expand_nd_proof", "nd_check", "nd_is_valid", "nd_search",
]
