from .sl2z import IDENTITY, PHI_A, PHI_B, SL2ZMatrix
from .word import (
    FreeWord,
    canonical_label,
    decompose_special,
    enumerate_words,
    format_word,
    parse_word,
    phi,
    random_word,
    recompose_special,
    sigma,
    word_inverse,
    word_length,
    word_mul,
)

__all__ = [
    "IDENTITY",
    "PHI_A",
    "PHI_B",
    "SL2ZMatrix",
    "FreeWord",
    "canonical_label",
    "decompose_special",
    "enumerate_words",
    "format_word",
    "parse_word",
    "phi",
    "random_word",
    "recompose_special",
    "sigma",
    "word_inverse",
    "word_length",
    "word_mul",
]
