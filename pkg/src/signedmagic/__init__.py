"""signedmagic - construct, verify and search signed magic rectangles SMR(m,n;k,3)."""

from .assembler import Route, assemble, enumerate_params, generate, generate_with_route
from .core import Block, Params, Partition, SparseRectangle, params_new, symbol_set
from .errors import (
    InadmissibleParametersError,
    SearchExhaustedError,
    SignedMagicError,
    VerificationError,
)
from .verifier import VerificationReport, verify_smr

__version__ = "0.1.0"

__all__ = [
    "Block",
    "InadmissibleParametersError",
    "Params",
    "Partition",
    "Route",
    "SearchExhaustedError",
    "SignedMagicError",
    "SparseRectangle",
    "VerificationError",
    "VerificationReport",
    "assemble",
    "enumerate_params",
    "generate",
    "generate_with_route",
    "params_new",
    "symbol_set",
    "verify_smr",
]
