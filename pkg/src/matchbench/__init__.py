"""matchbench: exact single-pattern byte search.

A collection of practical exact string-matching algorithms (comparison
based, factor-oracle based and bit-parallel), a dual-mode benchmark
harness (wall-clock time / instrumented character reads), result-table
and best-map reporting, and an alphabet-size x pattern-length selection
map for picking a searcher automatically.
"""

from .automata import FactorOracle, build_factor_oracle, search_bom, search_ebom
from .bench import (
    ALLOWED_SIGMAS,
    CORPUS_EXPECTATIONS,
    BenchConfig,
    Measurement,
    generate_rand_text,
    load_corpus,
    run_benchmark,
    sample_patterns,
    sample_positions,
    standard_texts,
)
from .bitparallel import (
    lbndm_filter_candidates,
    search_bmh_sbndm,
    search_bndm,
    search_fsbndm,
    search_lbndm,
    search_sa,
    search_sbndm,
    search_sbndm_bmh,
    search_sbndmq,
    search_so,
    state_word_count,
)
from .comparison import (
    search_br,
    search_fjs,
    search_hashq,
    search_hor,
    search_qs,
    search_ssef,
    search_tvsbs,
)
from .core import (
    WORD,
    ApplicabilityError,
    InstrumentedText,
    Pattern,
    Text,
    WordSpec,
    brute_force_search,
    verify_equal,
)
from .differential import DifferentialReport, Mismatch, run_differential
from .registry import (
    DEFAULT_SELECTION_MAP,
    REGISTRY,
    AlgorithmDescriptor,
    SelectionMap,
    SizeClasses,
    applicable_algorithms,
    build_registry,
    classify,
    get_algorithm,
    select,
    select_applicable,
)
from .report import BestMap, parse_measurements_csv, render_best_map, render_table

__version__ = "0.1.0"

__all__ = [
    "ALLOWED_SIGMAS",
    "ApplicabilityError",
    "AlgorithmDescriptor",
    "BenchConfig",
    "BestMap",
    "CORPUS_EXPECTATIONS",
    "DEFAULT_SELECTION_MAP",
    "DifferentialReport",
    "FactorOracle",
    "InstrumentedText",
    "Measurement",
    "Mismatch",
    "Pattern",
    "REGISTRY",
    "SelectionMap",
    "SizeClasses",
    "Text",
    "WORD",
    "WordSpec",
    "applicable_algorithms",
    "brute_force_search",
    "build_factor_oracle",
    "build_registry",
    "classify",
    "generate_rand_text",
    "get_algorithm",
    "lbndm_filter_candidates",
    "load_corpus",
    "parse_measurements_csv",
    "render_best_map",
    "render_table",
    "run_benchmark",
    "run_differential",
    "sample_patterns",
    "sample_positions",
    "search_bmh_sbndm",
    "search_bndm",
    "search_bom",
    "search_br",
    "search_ebom",
    "search_fjs",
    "search_fsbndm",
    "search_hashq",
    "search_hor",
    "search_lbndm",
    "search_qs",
    "search_sa",
    "search_sbndm",
    "search_sbndm_bmh",
    "search_sbndmq",
    "search_so",
    "search_ssef",
    "search_tvsbs",
    "select",
    "select_applicable",
    "standard_texts",
    "state_word_count",
    "verify_equal",
]
