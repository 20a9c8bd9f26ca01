"""Mostar index of tree-like phenylenes: exact computation, enumeration and extremal checks."""

from .cuts import CutClass, cut_classes, mostar_cut
from .enumeration import ClassCatalog, count_by_invariant, enumerate_classes
from .errors import (GraphInputError, InvalidTreeError, NotAChainError, PhenyleneError, RangeError,
                     ResourceBoundError, SlotError)
from .families import chain_from_turns, cl, describe, linear, parse_family, pl
from .formulas import mo_linear, mo_pl, mo_second, mo_third_chain
from .geometry import geometric_embedding, has_overlap
from .graph import MolecularGraph, are_isomorphic, certificate, edge_split, mostar_direct
from .model import Junction, PhenyleneTree, expand, join, mirror, validate
from .verify import rank, verify

__all__ = [
    "ClassCatalog", "CutClass", "GraphInputError", "InvalidTreeError", "Junction", "MolecularGraph",
    "NotAChainError", "PhenyleneError", "PhenyleneTree", "RangeError", "ResourceBoundError", "SlotError",
    "are_isomorphic", "certificate", "chain_from_turns", "cl", "count_by_invariant", "cut_classes",
    "describe", "edge_split", "enumerate_classes", "expand", "geometric_embedding", "has_overlap",
    "join", "linear", "mirror", "mo_linear", "mo_pl", "mo_second", "mo_third_chain", "mostar_cut",
    "mostar_direct", "parse_family", "pl", "rank", "validate", "verify",
]
