"""Exact Laplacian spectra and graph parameters of cographs built from creation sequences."""

from cgraphs.errors import (
    CGraphError,
    ConsistencyFailure,
    Disconnected,
    EmptySequence,
    NoConvergence,
    NonPositivePart,
    OddLengthUnsupported,
    OrderTooSmall,
    SequenceParseError,
    TooLarge,
)
from cgraphs.seqcore import (
    CreationSequence,
    Family,
    FamilyTag,
    count_sequences,
    enumerate_sequences,
    parse_sequence,
    recognize_families,
    validate,
)
from cgraphs.graphbuild import CGraph, build_direct, build_recursive, degrees, laplacian
from cgraphs.spectra import LaplacianSpectrum, full_spectrum, quotient_eigs, quotient_matrix
from cgraphs.graphparams import GraphParams, algebraic_connectivity, clique_number, compute_params

__version__ = "0.1.0"

__all__ = [
    "CGraph",
    "CGraphError",
    "ConsistencyFailure",
    "CreationSequence",
    "Disconnected",
    "EmptySequence",
    "Family",
    "FamilyTag",
    "GraphParams",
    "LaplacianSpectrum",
    "NoConvergence",
    "NonPositivePart",
    "OddLengthUnsupported",
    "OrderTooSmall",
    "SequenceParseError",
    "TooLarge",
    "algebraic_connectivity",
    "build_direct",
    "build_recursive",
    "clique_number",
    "compute_params",
    "count_sequences",
    "degrees",
    "enumerate_sequences",
    "full_spectrum",
    "laplacian",
    "parse_sequence",
    "quotient_eigs",
    "quotient_matrix",
    "recognize_families",
    "validate",
]
