"""Benchmark harness: text provisioning, pattern sampling and dual-mode
measurement.

Two metrics are supported.  "time" measures wall-clock milliseconds of the
search phase only (preprocessing and pattern setup stay outside the timed
region, and every pattern gets one untimed warm-up search first).  "reads"
counts single-character accesses through InstrumentedText, which is
deterministic for a fixed seed and therefore bit-reproducible.
"""

from __future__ import annotations

import hashlib
import statistics
import time
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .core import InstrumentedText, Pattern, Text
from .registry import REGISTRY, AlgorithmDescriptor

#: Generator name pinned into benchmark output metadata for reproducibility.
PRNG_NAME = "numpy-pcg64"

ALLOWED_SIGMAS = (2, 4, 8, 16, 32, 64, 128, 256)

DEFAULT_LENGTHS = (2, 4, 8, 16, 32, 64, 128, 256, 512, 1024)

#: Full-scale random-buffer size (5 MiB).
FULL_TEXT_SIZE = 5 * 2**20
#: 1 MiB desk-scale size used by the tests.
DESK_TEXT_SIZE = 2**20

METRICS = ("time", "reads")


@dataclass(frozen=True)
class BenchConfig:
    lengths: tuple[int, ...] = DEFAULT_LENGTHS
    patterns_per_length: int = 400
    seed: int = 1
    metric: str = "time"
    text_size: int = FULL_TEXT_SIZE
    warmup: bool = True

    def __post_init__(self):
        object.__setattr__(self, "lengths", tuple(self.lengths))
        if any(b <= a for a, b in zip(self.lengths, self.lengths[1:])):
            raise ValueError("lengths must be strictly increasing")
        if not self.lengths:
            raise ValueError("lengths must be non-empty")
        if self.patterns_per_length < 1:
            raise ValueError("patterns_per_length must be >= 1")
        if self.metric not in METRICS:
            raise ValueError(f"metric must be one of {METRICS}")
        if self.text_size < 1:
            raise ValueError("text_size must be >= 1")


@dataclass(frozen=True)
class Measurement:
    """One benchmark cell: mean over patterns_per_length searches."""

    text_id: str
    sigma: int
    family: str
    algorithm: str
    m: int
    runs: int
    mean_value: float  # milliseconds (time) or character reads (reads)
    stddev: float
    mean_occurrences: float
    metric: str


def derive_seed(*parts) -> int:
    """Stable 64-bit sub-seed from the root seed and cell identity."""
    h = hashlib.blake2b("|".join(str(p) for p in parts).encode(), digest_size=8)
    return int.from_bytes(h.digest(), "big")


def generate_rand_text(sigma: int, size: int, seed: int, allow_any_sigma: bool = False) -> Text:
    """Uniform i.i.d. random text over byte values 0..sigma-1.

    Deterministic for a fixed (sigma, size, seed).  sigma is restricted to
    the standard power-of-two set unless allow_any_sigma is set.
    """
    if not allow_any_sigma and sigma not in ALLOWED_SIGMAS:
        raise ValueError(f"sigma must be one of {ALLOWED_SIGMAS} (or pass allow_any_sigma=True)")
    if not 1 <= sigma <= 256:
        raise ValueError(f"sigma must be in [1, 256], got {sigma}")
    if size < 1:
        raise ValueError("size must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    data = rng.integers(0, sigma, size=size, dtype=np.uint8).tobytes()
    return Text(data, f"rand{sigma}")


#: (length in bytes, approximate distinct characters) of the reference corpora.
CORPUS_EXPECTATIONS = {
    "ecoli": (4_638_690, 4),
    "bible": (4_047_392, 63),
    "world192": (2_473_400, 94),
    "hs": (3_295_751, 20),
}


def load_corpus(path, expected_id: str | None = None) -> Text:
    """Load a corpus file as raw bytes.

    For the known corpus ids the loader checks the advisory length and
    alphabet expectations; mismatches warn rather than fail, since corpus
    editions vary.
    """
    path = Path(path)
    data = path.read_bytes()
    text_id = expected_id or path.stem
    text = Text(data, text_id)
    expected = CORPUS_EXPECTATIONS.get(text_id)
    if expected is not None:
        exp_n, exp_sigma = expected
        if len(data) != exp_n:
            warnings.warn(
                f"corpus {text_id!r}: expected n={exp_n:,} bytes, got {len(data):,}"
                " (different edition?)",
                stacklevel=2,
            )
        sigma = text.alphabet_size()
        if abs(sigma - exp_sigma) > 2:
            warnings.warn(
                f"corpus {text_id!r}: expected sigma~{exp_sigma}, got {sigma}",
                stacklevel=2,
            )
    return text


def sample_positions(text: Text, m: int, count: int, seed: int) -> list[int]:
    """Uniform extraction positions in [0, n-m], deterministic per seed."""
    n = len(text)
    if m > n:
        raise ValueError(f"cannot sample length-{m} patterns from a length-{n} text")
    if count < 1:
        raise ValueError("count must be >= 1")
    rng = np.random.Generator(np.random.PCG64(seed))
    return rng.integers(0, n - m + 1, size=count).tolist()


def sample_patterns(text: Text, m: int, count: int, seed: int) -> list[Pattern]:
    """Patterns extracted from the text at sample_positions(...) — each one
    therefore occurs in the text at least once."""
    return [Pattern(text.data[i : i + m]) for i in sample_positions(text, m, count, seed)]


def standard_texts(cfg: BenchConfig, sigmas=ALLOWED_SIGMAS) -> list[Text]:
    """The standard Rand-sigma buffer suite, generated at cfg.text_size
    with per-buffer sub-seeds."""
    return [
        generate_rand_text(sigma, cfg.text_size, derive_seed(cfg.seed, "rand", sigma))
        for sigma in sigmas
    ]


def _measure_cell(cfg: BenchConfig, text: Text, sigma: int, algo: AlgorithmDescriptor,
                  m: int, patterns: list[Pattern]) -> Measurement:
    values = []
    occurrences = 0
    if cfg.metric == "time":
        hay = text.data
        for pat in patterns:
            run = algo.compile(pat.data)
            if cfg.warmup:
                run(hay)
            t0 = time.perf_counter_ns()
            res = run(hay)
            t1 = time.perf_counter_ns()
            values.append((t1 - t0) / 1e6)
            occurrences += len(res)
    else:
        it = InstrumentedText(text)
        for pat in patterns:
            run = algo.compile(pat.data)
            before = it.reads
            res = run(it)
            values.append(float(it.reads - before))
            occurrences += len(res)
    return Measurement(
        text_id=text.id,
        sigma=sigma,
        family=algo.family,
        algorithm=algo.id,
        m=m,
        runs=len(patterns),
        mean_value=statistics.fmean(values),
        stddev=statistics.pstdev(values),
        mean_occurrences=occurrences / len(patterns),
        metric=cfg.metric,
    )


def run_benchmark(cfg: BenchConfig, texts, algos=None, parallel: bool = False) -> list[Measurement]:
    """One Measurement per (text, algorithm, m) cell where the algorithm is
    applicable at m and m fits the text; other cells are omitted.

    The same extracted pattern set is shared by every algorithm of a
    (text, m) cell.  parallel=True runs cells on a thread pool and is only
    allowed in reads mode, which keeps time measurements free of
    concurrent load.
    """
    if algos is None:
        algos = REGISTRY
    if not texts or not algos:
        raise ValueError("need at least one text and one algorithm")
    if parallel and cfg.metric != "reads":
        raise ValueError("parallel runs are only allowed in reads mode")

    cells = []
    pattern_cache: dict[tuple[str, int], list[Pattern]] = {}
    for text in texts:
        sigma = text.alphabet_size()
        for algo in algos:
            for m in cfg.lengths:
                if m > len(text) or not algo.applicable(m):
                    continue
                key = (text.id, m)
                if key not in pattern_cache:
                    pattern_cache[key] = sample_patterns(
                        text, m, cfg.patterns_per_length, derive_seed(cfg.seed, text.id, m)
                    )
                cells.append((text, sigma, algo, m, pattern_cache[key]))

    if parallel:
        with ThreadPoolExecutor() as pool:
            return list(pool.map(lambda c: _measure_cell(cfg, *c), cells))
    return [_measure_cell(cfg, *cell) for cell in cells]
