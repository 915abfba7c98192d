"""Multilingual unified syllabification in the pronunciation and spelling domains."""

from .align import AlignmentPath, dtw, project_breaks, ssp_dtw_syllabify
from .errors import (
    ConfigurationError,
    DictParseError,
    SyllabError,
    UndefinedMetricError,
    UnknownSymbolError,
    UnsupportedNumeralError,
)
from .evaluate import (
    AblationResult,
    juncture_accuracy,
    run_ablation,
    syllable_histogram,
    word_accuracy,
)
from .lexicon import (
    CorpusFormat,
    FallbackConfig,
    Lexicon,
    Phone,
    Pronunciation,
    SyllabifiedLexicon,
    g2p_fallback,
    load_pron_dict,
    load_syllabified_corpus,
    lookup,
    sc_correction,
)
from .pipeline import (
    Resources,
    WordRecord,
    annotate_corpus,
    consistency_report,
    merge_stress,
    syllabify_word,
)
from .sonority import (
    SonorityHierarchy,
    SonorityPoint,
    SonoritySequence,
    hierarchy_for,
    load_hierarchy,
    sonority_sequence,
)
from .ssp import Syllabification, count_nuclei, ssp_breaks, syllabify_symbols
from .textnorm import Token, expand_acronym, normalize, num_to_words, tokenize

__version__ = "0.1.0"

__all__ = [
    "AblationResult", "AlignmentPath", "ConfigurationError", "CorpusFormat",
    "DictParseError", "FallbackConfig", "Lexicon", "Phone", "Pronunciation",
    "Resources", "SonorityHierarchy", "SonorityPoint", "SonoritySequence",
    "SyllabError", "SyllabifiedLexicon", "Syllabification", "Token",
    "UndefinedMetricError", "UnknownSymbolError", "UnsupportedNumeralError",
    "WordRecord", "annotate_corpus", "consistency_report", "count_nuclei",
    "dtw", "expand_acronym", "g2p_fallback", "hierarchy_for",
    "juncture_accuracy", "load_hierarchy", "load_pron_dict",
    "load_syllabified_corpus", "lookup", "merge_stress", "normalize",
    "num_to_words", "project_breaks", "run_ablation", "sc_correction",
    "sonority_sequence", "ssp_breaks", "ssp_dtw_syllabify",
    "syllabify_symbols", "syllabify_word", "syllable_histogram", "tokenize",
    "word_accuracy",
]
