"""Algorithm catalog and the alphabet-size x pattern-length selection map.

The registry lists every implemented searcher with its family and
applicability bounds (the "-" cells of the result tables fall out of
those bounds).  The default selection map records the winning algorithm
per (sigma class, m class) cell; cells without a stated winner carry the
best entry of the matching result tables and are tagged "derived-fill"
so reports can tell the two apart.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import partial
from typing import Callable

from . import automata, bitparallel, comparison
from .core import WORD, WordSpec, as_haystack, as_needle

COMPARISON = "comparison"
AUTOMATA = "automata"
BIT_PARALLEL = "bit-parallel"

FAMILIES = (COMPARISON, AUTOMATA, BIT_PARALLEL)


@dataclass(frozen=True)
class AlgorithmDescriptor:
    """Identity, family and applicability bounds of one searcher."""

    id: str
    family: str
    m_min: int
    m_max: int | None  # inclusive; None = unbounded
    needs_word: bool  # state must fit the machine word
    compile: Callable[[bytes], Callable] = field(compare=False, repr=False)

    def applicable(self, m: int) -> bool:
        if m < self.m_min:
            return False
        return self.m_max is None or m <= self.m_max

    def search(self, pattern, text) -> list[int]:
        return self.compile(as_needle(pattern))(as_haystack(text))


def build_registry(word: WordSpec = WORD) -> tuple[AlgorithmDescriptor, ...]:
    """All implemented algorithms in canonical order (family, then age),
    with the word-relative bounds resolved against the given word width."""
    w = word.w
    d = AlgorithmDescriptor
    return (
        d("HOR", COMPARISON, 1, None, False, comparison.compile_hor),
        d("QS", COMPARISON, 1, None, False, comparison.compile_qs),
        d("BR", COMPARISON, 1, None, False, comparison.compile_br),
        d("TVSBS", COMPARISON, 1, None, False, comparison.compile_tvsbs),
        d("FJS", COMPARISON, 1, None, False, comparison.compile_fjs),
        d("HASH3", COMPARISON, 3, None, False, partial(comparison.compile_hashq, 3)),
        d("HASH5", COMPARISON, 5, None, False, partial(comparison.compile_hashq, 5)),
        d("HASH8", COMPARISON, 8, None, False, partial(comparison.compile_hashq, 8)),
        d("SSEF", COMPARISON, 32, None, False, partial(comparison.compile_ssef, word=word)),
        d("BOM", AUTOMATA, 1, None, False, automata.compile_bom),
        d("EBOM", AUTOMATA, 2, None, False, automata.compile_ebom),
        d("SO", BIT_PARALLEL, 1, None, False, partial(bitparallel.compile_so, word=word)),
        d("SA", BIT_PARALLEL, 1, None, False, partial(bitparallel.compile_sa, word=word)),
        d("BNDM", BIT_PARALLEL, 1, w, True, partial(bitparallel.compile_bndm, word=word)),
        d("SBNDM", BIT_PARALLEL, 1, w, True, partial(bitparallel.compile_sbndm, word=word)),
        d("LBNDM", BIT_PARALLEL, 1, None, False, partial(bitparallel.compile_lbndm, word=word)),
        d("SBNDM-BMH", BIT_PARALLEL, 1, w, True, partial(bitparallel.compile_sbndm_bmh, word=word)),
        d("BMH-SBNDM", BIT_PARALLEL, 1, w, True, partial(bitparallel.compile_bmh_sbndm, word=word)),
        d("FSBNDM", BIT_PARALLEL, 1, w - 1, True, partial(bitparallel.compile_fsbndm, word=word)),
        d("SBNDMq2", BIT_PARALLEL, 2, w, True, partial(bitparallel.compile_sbndmq, 2, word=word)),
        d("SBNDMq4", BIT_PARALLEL, 4, w, True, partial(bitparallel.compile_sbndmq, 4, word=word)),
        d("SBNDMq6", BIT_PARALLEL, 6, w, True, partial(bitparallel.compile_sbndmq, 6, word=word)),
        d("SBNDMq8", BIT_PARALLEL, 8, w, True, partial(bitparallel.compile_sbndmq, 8, word=word)),
    )


REGISTRY: tuple[AlgorithmDescriptor, ...] = build_registry()

_BY_ID = {a.id.upper(): a for a in REGISTRY}


def get_algorithm(algo_id: str) -> AlgorithmDescriptor:
    """Case-insensitive registry lookup."""
    try:
        return _BY_ID[algo_id.upper()]
    except KeyError:
        raise KeyError(f"unknown algorithm {algo_id!r}; known: {', '.join(a.id for a in REGISTRY)}") from None


def applicable_algorithms(m: int, registry=REGISTRY) -> list[AlgorithmDescriptor]:
    """All registry entries whose bounds admit pattern length m."""
    if m < 1:
        raise ValueError("pattern length must be >= 1")
    return [a for a in registry if a.applicable(m)]


M_CLASSES = ("very_short", "short", "long", "very_long")
SIGMA_CLASSES = ("very_small", "small", "large", "very_large")

# inclusive m bounds per class (None = unbounded)
M_CLASS_RANGES = {
    "very_short": (1, 4),
    "short": (5, 32),
    "long": (33, 256),
    "very_long": (257, None),
}


@dataclass(frozen=True)
class SizeClasses:
    sigma_class: str
    m_class: str


def classify(sigma: int, m: int) -> SizeClasses:
    """Deterministic class pair: m <= 4 / <= 32 / <= 256 / beyond, and
    sigma < 4 / < 32 / < 128 / beyond (sigma=128 counts as very large)."""
    if not 1 <= sigma <= 256:
        raise ValueError(f"alphabet size must be in [1, 256], got {sigma}")
    if m < 1:
        raise ValueError("pattern length must be >= 1")
    if m <= 4:
        mc = "very_short"
    elif m <= 32:
        mc = "short"
    elif m <= 256:
        mc = "long"
    else:
        mc = "very_long"
    if sigma < 4:
        sc = "very_small"
    elif sigma < 32:
        sc = "small"
    elif sigma < 128:
        sc = "large"
    else:
        sc = "very_large"
    return SizeClasses(sc, mc)


PAPER_STATED = "paper-stated"
DERIVED_FILL = "derived-fill"
MEASURED = "measured"


@dataclass(frozen=True)
class MapCell:
    algorithm: str
    provenance: str
    alternates: tuple[str, ...] = ()


@dataclass(frozen=True)
class SelectionMap:
    """Total (sigma_class, m_class) -> algorithm table."""

    cells: dict[tuple[str, str], MapCell]

    def cell(self, sigma_class: str, m_class: str) -> MapCell:
        return self.cells[(sigma_class, m_class)]

    def to_csv(self) -> str:
        lines = ["sigma_class,m_class,algorithm,provenance"]
        for sc in SIGMA_CLASSES:
            for mc in M_CLASSES:
                cell = self.cells[(sc, mc)]
                lines.append(f"{sc},{mc},{cell.algorithm},{cell.provenance}")
        return "\n".join(lines) + "\n"


def default_selection_map() -> SelectionMap:
    cells = {
        ("very_small", "very_short"): MapCell("SA", PAPER_STATED),
        ("very_small", "short"): MapCell("HASH5", DERIVED_FILL),
        ("very_small", "long"): MapCell("HASH8", DERIVED_FILL),
        ("very_small", "very_long"): MapCell("SSEF", PAPER_STATED),
        ("small", "very_short"): MapCell("TVSBS", PAPER_STATED),
        ("small", "short"): MapCell("HASH5", PAPER_STATED),
        ("small", "long"): MapCell("HASH8", PAPER_STATED, ("SBNDMq4",)),
        ("small", "very_long"): MapCell("SSEF", PAPER_STATED),
        ("large", "very_short"): MapCell("FJS", PAPER_STATED),
        ("large", "short"): MapCell("EBOM", PAPER_STATED),
        ("large", "long"): MapCell("FSBNDM", PAPER_STATED, ("TVSBS",)),
        ("large", "very_long"): MapCell("SSEF", PAPER_STATED),
        ("very_large", "very_short"): MapCell("FJS", PAPER_STATED),
        ("very_large", "short"): MapCell("EBOM", PAPER_STATED, ("SBNDM-BMH", "BMH-SBNDM")),
        ("very_large", "long"): MapCell("FSBNDM", PAPER_STATED),
        ("very_large", "very_long"): MapCell("LBNDM", PAPER_STATED),
    }
    return SelectionMap(cells)


DEFAULT_SELECTION_MAP = default_selection_map()


def select(sigma: int, m: int, selection_map: SelectionMap = DEFAULT_SELECTION_MAP) -> AlgorithmDescriptor:
    """Map entry for the (sigma, m) cell, regardless of exact-m bounds."""
    classes = classify(sigma, m)
    cell = selection_map.cell(classes.sigma_class, classes.m_class)
    return get_algorithm(cell.algorithm)


# chain tried when a cell's entries are out of bounds at the exact m
_FALLBACK_IDS = ("SSEF", "HASH3", "HOR")


def select_applicable(sigma: int, m: int, selection_map: SelectionMap = DEFAULT_SELECTION_MAP) -> AlgorithmDescriptor:
    """Like select(), but guarantees the result is applicable at m.

    The map winner can be gated by the word width inside its own cell
    (e.g. the long-pattern cells at m > w); the cell alternates and then a
    fixed fallback chain cover those lengths.
    """
    classes = classify(sigma, m)
    cell = selection_map.cell(classes.sigma_class, classes.m_class)
    for algo_id in (cell.algorithm, *cell.alternates, *_FALLBACK_IDS):
        algo = get_algorithm(algo_id)
        if algo.applicable(m):
            return algo
    raise AssertionError(f"no applicable algorithm for m={m}")  # HOR is total
