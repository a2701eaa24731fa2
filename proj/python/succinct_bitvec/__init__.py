"""Rank/select bit vectors: BlockBitVec, FastBitVec and RRR-compressed RRRBitVec."""

from ._core import (
    BlockBitVec,
    FastBitVec,
    FormatError,
    RawBitVector,
    RRRBitVec,
    bench,
    deserialize,
    fuzz,
    generate,
    rrr,
    serialize,
)

__all__ = [
    "BlockBitVec",
    "FastBitVec",
    "FormatError",
    "RawBitVector",
    "RRRBitVec",
    "bench",
    "deserialize",
    "fuzz",
    "generate",
    "rrr",
    "serialize",
]
