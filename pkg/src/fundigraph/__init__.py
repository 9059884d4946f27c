"""Functional digraphs: sums, direct products, canonical forms, division and
non-primality witnesses."""
from __future__ import annotations

from .algebra import add, cycle, cycle_product, identity, lcm, product, scalar, sum_of_cycles_product, zero
from .core import (
    CanonicalForm,
    FunctionalDigraph,
    HeightProfile,
    IsoMap,
    SumOfCycles,
    canonical_digraph,
    canonical_form,
    check_iso_map,
    components,
    cyclic_part,
    find_isomorphism,
    height_profile,
    in_f1,
    is_connected,
    is_isomorphic,
    parse_literal,
    to_dot,
    truncate,
)
from .division import Tri, divides, factorization, is_irreducible, quotients
from .enumeration import EnumFilter, all_digraphs, brute_force_digraphs, count_digraphs
from .errors import (
    FunDigraphError,
    MalformedInputError,
    NotInF1Error,
    NoWitnessError,
    ParseError,
    SizeLimitError,
    WitnessInvalidError,
)
from .expr import eval_text, parse
from .kernels import BACKEND
from .witness import WitnessReport, build_witness, verify_witness

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
