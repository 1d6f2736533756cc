from .context import search_context
from .core import (
    J2_MINUS_ONE,
    J2_PLUS_ONE,
    JordanPower,
    NumberSystem,
    evaluate,
    evaluate_fast_j2m1,
    evaluate_fast_j2p1,
    jn_minus_one_system,
    jordan_power_entry,
    length_lower_bound,
    negate_word_j2p1,
    norm_bound_constant,
)
from .counting import LaurentTable, count_reps, count_table, count_table_j2m1, count_table_j2p1
from .errors import (
    CertificationError,
    InvalidInputError,
    JordanumError,
    ResourceLimitError,
    WordParseError,
)
from .j2_minus_one import (
    CanonicalForm,
    ThresholdSeq,
    min_length_j2m1,
    min_weight_j2m1,
    threshold_term,
    weight_witness_j2m1,
    witness_j2m1,
)
from .j2_plus_one import ExtremalPair, extremal_j2p1, min_length_j2p1, swap_table, witness_j2p1
from .jn_minus_one import (
    UnitWordLadder,
    bezout,
    build_ladder,
    combine_words,
    full_representation,
    fullness_certificate,
    lower_unit_word,
    pad_even,
)
from .oracle import enumerate_min_length, enumerate_min_weight, verify_norm_bound
from .word import DigitWord, Letter

__version__ = "0.1.0"

__all__ = [
    "DigitWord",
    "Letter",
    "NumberSystem",
    "J2_PLUS_ONE",
    "J2_MINUS_ONE",
    "jn_minus_one_system",
    "JordanPower",
    "jordan_power_entry",
    "evaluate",
    "evaluate_fast_j2p1",
    "evaluate_fast_j2m1",
    "negate_word_j2p1",
    "norm_bound_constant",
    "length_lower_bound",
    "ExtremalPair",
    "extremal_j2p1",
    "min_length_j2p1",
    "witness_j2p1",
    "swap_table",
    "ThresholdSeq",
    "threshold_term",
    "CanonicalForm",
    "min_length_j2m1",
    "witness_j2m1",
    "min_weight_j2m1",
    "weight_witness_j2m1",
    "pad_even",
    "bezout",
    "combine_words",
    "lower_unit_word",
    "UnitWordLadder",
    "build_ladder",
    "full_representation",
    "fullness_certificate",
    "LaurentTable",
    "count_table",
    "count_table_j2p1",
    "count_table_j2m1",
    "count_reps",
    "enumerate_min_length",
    "enumerate_min_weight",
    "verify_norm_bound",
    "search_context",
    "JordanumError",
    "InvalidInputError",
    "WordParseError",
    "ResourceLimitError",
    "CertificationError",
]
