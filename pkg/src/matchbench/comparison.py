"""Comparison-based searchers.

Horspool and Quick-Search shift on one character, Berry-Ravindran and
TVSBS on the two characters following the window, FJS mixes Quick-Search
skips with KMP verification, HASHq shifts on hashed q-grams, and SSEF
filters long patterns through per-block bit fingerprints.

Each algorithm comes as a ``compile_*`` factory returning a searcher
closure over the preprocessed tables (so benchmarks can time the search
phase alone) plus a plain ``search_*`` convenience wrapper.
"""

from __future__ import annotations

from .core import WORD, ApplicabilityError, WordSpec, as_haystack, as_needle, match_at


def _horspool_table(p: bytes) -> list[int]:
    # shift indexed by the text character under the window's last position
    m = len(p)
    tbl = [m] * 256
    for i in range(m - 1):
        tbl[p[i]] = m - 1 - i
    return tbl


def _sunday_table(p: bytes) -> list[int]:
    # shift indexed by the text character just past the window
    m = len(p)
    tbl = [m + 1] * 256
    for i in range(m):
        tbl[p[i]] = m - i
    return tbl


def _br_table(p: bytes) -> list[int]:
    # flat 256x256 shift table addressed by the two characters after the
    # window; min over: pair occurring inside p, window-final char as first
    # of the pair, p[0] as second of the pair, or skipping past both
    m = len(p)
    tbl = [m + 2] * 65536
    p0 = p[0]
    for a in range(256):
        tbl[(a << 8) | p0] = m + 1
    for i in range(m - 1):
        idx = (p[i] << 8) | p[i + 1]
        s = m - i
        if s < tbl[idx]:
            tbl[idx] = s
    row = p[m - 1] << 8
    for b in range(256):
        tbl[row | b] = 1
    return tbl


def kmp_failure(p: bytes) -> list[int]:
    """fail[j] = length of the longest proper border of p[:j], for j in 0..m."""
    m = len(p)
    fail = [0] * (m + 1)
    k = 0
    for j in range(1, m):
        while k and p[j] != p[k]:
            k = fail[k]
        if p[j] == p[k]:
            k += 1
        fail[j + 1] = k
    return fail


def compile_hor(p: bytes):
    """Horspool: verify the window, advance by the last-character shift."""
    m = len(p)
    tbl = _horspool_table(p)
    last = p[m - 1]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            c = hay[pos + m - 1]
            if c == last and match_at(hay, pos, p):
                out.append(pos)
            pos += tbl[c]
        return out

    return run


def compile_qs(p: bytes):
    """Quick-Search: verify the window, shift on the character past it."""
    m = len(p)
    qs = _sunday_table(p)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            if match_at(hay, pos, p):
                out.append(pos)
            if pos == end:
                break
            pos += qs[hay[pos + m]]
        return out

    return run


def compile_br(p: bytes):
    """Berry-Ravindran: shift on the two characters after the window."""
    m = len(p)
    tbl = _br_table(p)
    qs = _sunday_table(p)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            if match_at(hay, pos, p):
                out.append(pos)
            if pos == end:
                break
            if pos + m + 1 < n:
                pos += tbl[(hay[pos + m] << 8) | hay[pos + m + 1]]
            else:
                # second lookahead character is off the end of the text
                pos += qs[hay[pos + m]]
        return out

    return run


def compile_tvsbs(p: bytes):
    """TVSBS: first/last guard characters, then BR-style two-char shift."""
    m = len(p)
    tbl = _br_table(p)
    qs = _sunday_table(p)
    first = p[0]
    last = p[m - 1]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            if hay[pos + m - 1] == last and hay[pos] == first:
                k = 1
                while k < m - 1 and hay[pos + k] == p[k]:
                    k += 1
                if k >= m - 1:
                    out.append(pos)
            if pos == end:
                break
            if pos + m + 1 < n:
                pos += tbl[(hay[pos + m] << 8) | hay[pos + m + 1]]
            else:
                pos += qs[hay[pos + m]]
        return out

    return run


def compile_fjs(p: bytes):
    """FJS hybrid: Quick-Search skips while the window's last character
    mismatches, KMP verification once anchored.  The KMP carry-over keeps
    the worst case linear."""
    m = len(p)
    qs = _sunday_table(p)
    fail = kmp_failure(p)
    last = p[m - 1]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        end = n - m
        pos = 0
        j = 0
        while pos <= end:
            if j == 0:
                while hay[pos + m - 1] != last:
                    if pos == end:
                        return out
                    pos += qs[hay[pos + m]]
                    if pos > end:
                        return out
                while j < m - 1 and hay[pos + j] == p[j]:
                    j += 1
                if j == m - 1:
                    out.append(pos)
                    j = m
            else:
                # prefix carried over from the previous alignment
                while j < m and hay[pos + j] == p[j]:
                    j += 1
                if j == m:
                    out.append(pos)
            if j == 0:
                pos += 1
            else:
                f = fail[j]
                pos += j - f
                j = f
        return out

    return run


HASH_GRAM_LENGTHS = (3, 5, 8)


def _gram_hash(seq, start: int, q: int) -> int:
    h = 0
    for k in range(q):
        h = ((h << 1) + seq[start + k]) & 0xFFFF
    return h


def compile_hashq(q: int, p: bytes):
    """HASHq: shift table keyed on the hash of the window's last q-gram.

    A zero shift marks a candidate alignment; after verifying it the
    window advances by the precomputed next-smallest shift for that hash.
    Hash collisions only cause extra verification, never a miss.
    """
    if q not in HASH_GRAM_LENGTHS:
        raise ValueError(f"q must be one of {HASH_GRAM_LENGTHS}, got {q}")
    m = len(p)
    if m < q:
        raise ApplicabilityError(f"HASH{q}", m, f"m >= {q}")
    default = m - q + 1
    tbl = [default] * 65536
    for i in range(q - 1, m - 1):  # q-grams ending before the last position
        h = _gram_hash(p, i - q + 1, q)
        s = m - 1 - i
        if s < tbl[h]:
            tbl[h] = s
    h_last = _gram_hash(p, m - q, q)
    advance = tbl[h_last]
    tbl[h_last] = 0

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            base = pos + m - q
            h = 0
            for k in range(q):
                h = ((h << 1) + hay[base + k]) & 0xFFFF
            s = tbl[h]
            if s:
                pos += s
            else:
                if match_at(hay, pos, p):
                    out.append(pos)
                pos += advance
        return out

    return run


def _pick_filter_bit(p: bytes) -> int:
    # most informative bit position across the pattern's characters;
    # ties prefer the most significant bit
    m = len(p)
    best_bit = 7
    best_balance = -1
    for bit in range(7, -1, -1):
        ones = 0
        for c in p:
            ones += (c >> bit) & 1
        balance = min(ones, m - ones)
        if balance > best_balance:
            best_balance = balance
            best_bit = bit
    return best_bit


def _filter_width(m: int, w: int) -> int:
    # largest power of two <= min(w, m // 2); m >= 32 keeps this >= 16,
    # so the sampling stride m - width + 1 stays above m/2
    lim = min(w, m // 2)
    width = 16
    while width * 2 <= lim:
        width *= 2
    return width


def compile_ssef(p: bytes, word: WordSpec = WORD):
    """SSEF-style fingerprint filter for long patterns (m >= 32).

    One filter bit per character of a width-W block; text blocks sampled
    every m-W+1 positions so any occurrence fully contains one sample.
    Fingerprint hits map back to the matching in-pattern offsets, and only
    those alignments are verified.
    """
    m = len(p)
    if m < 32:
        raise ApplicabilityError("SSEF", m, "m >= 32")
    width = _filter_width(m, word.w)
    stride = m - width + 1
    bit = _pick_filter_bit(p)
    fps: dict[int, list[int]] = {}
    for j in range(m - width + 1):
        f = 0
        for k in range(width):
            f |= ((p[j + k] >> bit) & 1) << k
        fps.setdefault(f, []).append(j)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        hi_block = n - width
        hi_start = n - m
        s = 0
        while s <= hi_block:
            f = 0
            for k in range(width):
                f |= ((hay[s + k] >> bit) & 1) << k
            offs = fps.get(f)
            if offs is not None:
                # consecutive sampled blocks cover disjoint start ranges,
                # so descending offsets keep the output ascending
                for j in reversed(offs):
                    i = s - j
                    if 0 <= i <= hi_start and match_at(hay, i, p):
                        out.append(i)
            s += stride
        return out

    return run


def search_hor(pattern, text) -> list[int]:
    return compile_hor(as_needle(pattern))(as_haystack(text))


def search_qs(pattern, text) -> list[int]:
    return compile_qs(as_needle(pattern))(as_haystack(text))


def search_br(pattern, text) -> list[int]:
    return compile_br(as_needle(pattern))(as_haystack(text))


def search_tvsbs(pattern, text) -> list[int]:
    return compile_tvsbs(as_needle(pattern))(as_haystack(text))


def search_fjs(pattern, text) -> list[int]:
    return compile_fjs(as_needle(pattern))(as_haystack(text))


def search_hashq(q: int, pattern, text) -> list[int]:
    return compile_hashq(q, as_needle(pattern))(as_haystack(text))


def search_ssef(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_ssef(as_needle(pattern), word)(as_haystack(text))
