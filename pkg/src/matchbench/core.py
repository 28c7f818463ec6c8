"""Core domain types and the reference search oracle.

Searchers treat the haystack as an indexable sequence of byte values.  Raw
``bytes`` is the fast path; :class:`InstrumentedText` wraps a text and
counts every single-character read, which is the machine-independent cost
metric used by the benchmark's "reads" mode.  To keep that accounting
honest, no searcher in this package ever slices the haystack: text access
is one character at a time.
"""

from __future__ import annotations

from dataclasses import dataclass


class ApplicabilityError(ValueError):
    """An algorithm was asked to run outside its pattern-length bounds."""

    def __init__(self, algorithm: str, m: int, bound: str):
        self.algorithm = algorithm
        self.m = m
        self.bound = bound
        super().__init__(f"{algorithm} is not applicable at m={m}: requires {bound}")


@dataclass(frozen=True)
class Text:
    """Immutable haystack of raw byte values with a short label."""

    data: bytes
    id: str = "text"

    def __post_init__(self):
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))
        if not self.id:
            raise ValueError("text id must be non-empty")

    def __len__(self) -> int:
        return len(self.data)

    def alphabet_size(self) -> int:
        """Number of distinct byte values present."""
        return len(set(self.data))


@dataclass(frozen=True)
class Pattern:
    """Immutable needle; the empty pattern is rejected."""

    data: bytes

    def __post_init__(self):
        if not isinstance(self.data, bytes):
            object.__setattr__(self, "data", bytes(self.data))
        if len(self.data) == 0:
            raise ValueError("pattern must have length >= 1")

    def __len__(self) -> int:
        return len(self.data)


@dataclass(frozen=True)
class WordSpec:
    """Bit width of the machine word assumed by the bit-parallel family."""

    w: int = 64

    def __post_init__(self):
        if self.w not in (32, 64, 128):
            raise ValueError(f"word width must be 32, 64 or 128, got {self.w}")


#: Process-wide default word width.
WORD = WordSpec(64)


class InstrumentedText:
    """Wraps a text and counts every single-character access.

    Searching through the wrapper returns exactly the same occurrences as
    searching the raw bytes; only the accounting is added.  The counter
    never decreases.  Not thread-safe: one counter, no locking.
    """

    __slots__ = ("data", "id", "reads")

    def __init__(self, text: Text | bytes):
        if isinstance(text, Text):
            self.data = text.data
            self.id = text.id
        else:
            self.data = bytes(text)
            self.id = "text"
        self.reads = 0

    def __len__(self) -> int:
        return len(self.data)

    def __getitem__(self, i: int) -> int:
        if isinstance(i, slice):
            raise TypeError("sliced access would hide reads; index one character at a time")
        self.reads += 1
        return self.data[i]

    def __iter__(self):
        for c in self.data:
            self.reads += 1
            yield c


def as_haystack(text):
    """Unwrap a Text to raw bytes; keep instrumented wrappers intact."""
    if isinstance(text, Text):
        return text.data
    if isinstance(text, (bytes, bytearray)):
        return bytes(text)
    return text


def as_needle(pattern) -> bytes:
    """Pattern bytes, rejecting the empty needle."""
    if isinstance(pattern, Pattern):
        return pattern.data
    b = bytes(pattern)
    if not b:
        raise ValueError("pattern must have length >= 1")
    return b


def match_at(hay, i: int, p: bytes) -> bool:
    """Left-to-right window verification, one character read at a time."""
    for k in range(len(p)):
        if hay[i + k] != p[k]:
            return False
    return True


def brute_force_search(pattern, text) -> list[int]:
    """Check every alignment of the pattern against the text.

    Returns all 0-based start positions, overlapping occurrences included,
    in ascending order.  A pattern longer than the text yields an empty
    result.  This is the oracle every other searcher is tested against.
    """
    p = as_needle(pattern)
    hay = as_haystack(text)
    n, m = len(hay), len(p)
    out: list[int] = []
    if m > n:
        return out
    first = p[0]
    for i in range(n - m + 1):
        if hay[i] != first:
            continue
        k = 1
        while k < m and hay[i + k] == p[k]:
            k += 1
        if k == m:
            out.append(i)
    return out


def verify_equal(a, b) -> bool:
    """True iff two occurrence sequences are identical, order included."""
    return list(a) == list(b)
