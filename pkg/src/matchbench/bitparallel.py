"""Bit-parallel searchers: the Shift-Or/Shift-And pair and the BNDM family.

States are Python ints used as packed bit vectors.  An int holding m bits
is the ceil(m/w)-machine-word state the word-level algorithms maintain;
carry propagation between words happens inside the arbitrary-precision
arithmetic, so the per-character cost still scales with ceil(m/w).

The BNDM family is gated at m <= w (m <= w-1 for FSBNDM's lookahead bit):
outside those bounds a typed ApplicabilityError is raised rather than
falling back silently.
"""

from __future__ import annotations

from .comparison import _horspool_table, kmp_failure
from .core import WORD, ApplicabilityError, WordSpec, as_haystack, as_needle, match_at


def state_word_count(m: int, word: WordSpec = WORD) -> int:
    """Machine words needed for an m-bit prefix-automaton state."""
    return -(-m // word.w)


def forward_masks(p: bytes) -> list[int]:
    """bit j of table[c] set iff p[j] == c."""
    tbl = [0] * 256
    for j, c in enumerate(p):
        tbl[c] |= 1 << j
    return tbl


def backward_masks(p: bytes) -> list[int]:
    """bit (m-1-i) of table[c] set iff p[i] == c (reversed-pattern convention)."""
    m = len(p)
    tbl = [0] * 256
    for i, c in enumerate(p):
        tbl[c] |= 1 << (m - 1 - i)
    return tbl


def compile_so(p: bytes, word: WordSpec = WORD):
    """Shift-Or: one state update per text character, no early exit.

    Works for any m; for m > w the state simply spans ceil(m/w) words.
    """
    m = len(p)
    mask = (1 << m) - 1
    B = [(~v) & mask for v in forward_masks(p)]
    high = 1 << (m - 1)

    def run(hay) -> list[int]:
        out: list[int] = []
        append = out.append
        state = mask
        i = 0
        for c in hay:
            state = ((state << 1) | B[c]) & mask
            if state & high == 0:
                append(i - m + 1)
            i += 1
        return out

    return run


def compile_sa(p: bytes, word: WordSpec = WORD):
    """Shift-And: dual of Shift-Or with the complemented convention."""
    m = len(p)
    B = forward_masks(p)
    high = 1 << (m - 1)

    def run(hay) -> list[int]:
        out: list[int] = []
        append = out.append
        state = 0
        i = 0
        for c in hay:
            state = ((state << 1) | 1) & B[c]
            if state & high:
                append(i - m + 1)
            i += 1
        return out

    return run


def compile_bndm(p: bytes, word: WordSpec = WORD):
    """BNDM: backward scan of the nondeterministic suffix automaton of the
    reversed pattern; shift = window start of the last recognized prefix."""
    m = len(p)
    if m > word.w:
        raise ApplicabilityError("BNDM", m, f"m <= w ({word.w})")
    B = backward_masks(p)
    mask = (1 << m) - 1
    high = 1 << (m - 1)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            j = m - 1
            last = m
            D = mask
            while True:
                D &= B[hay[pos + j]]
                if D == 0:
                    break
                if D & high:
                    if j > 0:
                        last = j
                    else:
                        out.append(pos)
                        break
                if j == 0:
                    break
                D = (D << 1) & mask
                j -= 1
            pos += last
        return out

    return run


def _sbndm_body(p: bytes, B: list[int]):
    # shared simplified-BNDM window loop; a full-window survivor is the
    # pattern itself, so no re-verification is needed
    m = len(p)
    per = m - kmp_failure(p)[m]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            D = B[hay[pos + m - 1]]
            if D == 0:
                pos += m
                continue
            j = m - 1
            while j > 0:
                j -= 1
                D = (D << 1) & B[hay[pos + j]]
                if D == 0:
                    break
            if D:
                out.append(pos)
                pos += per
            else:
                pos += j + 1
        return out

    return run


def compile_sbndm(p: bytes, word: WordSpec = WORD):
    """Simplified BNDM: no prefix bookkeeping; fixed period shift after a
    full-window survival."""
    m = len(p)
    if m > word.w:
        raise ApplicabilityError("SBNDM", m, f"m <= w ({word.w})")
    return _sbndm_body(p, backward_masks(p))


SBNDM_GRAM_LENGTHS = (2, 4, 6, 8)


def compile_sbndmq(q: int, p: bytes, word: WordSpec = WORD):
    """SBNDMq: enter each window by AND-ing q shifted masks over the last
    q characters, then continue the plain backward loop."""
    if q not in SBNDM_GRAM_LENGTHS:
        raise ValueError(f"q must be one of {SBNDM_GRAM_LENGTHS}, got {q}")
    m = len(p)
    if m < q:
        raise ApplicabilityError(f"SBNDMq{q}", m, f"m >= {q}")
    if m > word.w:
        raise ApplicabilityError(f"SBNDMq{q}", m, f"m <= w ({word.w})")
    B = backward_masks(p)
    per = m - kmp_failure(p)[m]
    entry_shift = m - q + 1

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            D = B[hay[pos + m - 1]] << (q - 1)
            for k in range(1, q):
                D &= B[hay[pos + m - 1 - k]] << (q - 1 - k)
            if D == 0:
                pos += entry_shift
                continue
            j = m - q
            while j > 0:
                j -= 1
                D = (D << 1) & B[hay[pos + j]]
                if D == 0:
                    break
            if D:
                out.append(pos)
                pos += per
            else:
                pos += j + 1
        return out

    return run


def compile_fsbndm(p: bytes, word: WordSpec = WORD):
    """Forward SBNDM: the (m+1)-bit state carries one lookahead character.

    Equivalent to simplified BNDM over the pattern extended by a trailing
    wildcard, which is why every mask keeps bit 0 set.
    """
    m = len(p)
    if m > word.w - 1:
        raise ApplicabilityError("FSBNDM", m, f"m <= w-1 ({word.w - 1})")
    B = [(v << 1) | 1 for v in backward_masks(p)]
    per = m - kmp_failure(p)[m]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        end = n - m
        pos = 0
        while pos < end:
            D = B[hay[pos + m]]
            j = m
            while j > 0:
                j -= 1
                D = (D << 1) & B[hay[pos + j]]
                if D == 0:
                    break
            if D:
                out.append(pos)
                pos += per
            else:
                pos += j + 1
        # the last alignment has no lookahead character; check it directly
        if match_at(hay, end, p):
            out.append(end)
        return out

    return run


def _superimposed_masks(p: bytes, w: int) -> tuple[list[int], int, int]:
    # reduced position j accepts any character of its k-wide slice of p;
    # remainder characters join the last class
    m = len(p)
    k = -(-m // w)
    ell = m // k
    B = [0] * 256
    for j in range(ell):
        hi = (j + 1) * k if j < ell - 1 else m
        bit = 1 << (ell - 1 - j)
        for c in p[j * k : hi]:
            B[c] |= bit
    return B, ell, k


def _lbndm_scan(B: list[int], ell: int, k: int, hay):
    # simplified-BNDM filter over the text subsampled at stride k; yields
    # the text alignment of every surviving reduced window
    n = len(hay)
    if n == 0:
        return
    end_red = (n - 1) // k + 1 - ell
    r = 0
    while r <= end_red:
        D = B[hay[(r + ell - 1) * k]]
        if D == 0:
            r += ell
            continue
        j = ell - 1
        while j > 0:
            j -= 1
            D = (D << 1) & B[hay[(r + j) * k]]
            if D == 0:
                break
        if D:
            yield r * k
            r += 1
        else:
            r += j + 1


def compile_lbndm(p: bytes, word: WordSpec = WORD):
    """LBNDM: BNDM over the superimposed pattern as a filter for long
    patterns; every filter hit is verified against the full pattern.

    With m <= w the superimposition factor is 1 and this degenerates to a
    plain BNDM scan.
    """
    m = len(p)
    B, ell, k = _superimposed_masks(p, word.w)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        hi_start = n - m
        for base in _lbndm_scan(B, ell, k, hay):
            # a hit at base covers candidate starts (base-k, base]
            lo = base - k + 1
            if lo < 0:
                lo = 0
            hi = base if base <= hi_start else hi_start
            for i in range(lo, hi + 1):
                if match_at(hay, i, p):
                    out.append(i)
        return out

    return run


def lbndm_filter_candidates(pattern, text, word: WordSpec = WORD) -> list[tuple[int, int]]:
    """Candidate start ranges [lo, hi] produced by the superimposition
    filter, before any verification.  Exposed for soundness checks."""
    p = as_needle(pattern)
    hay = as_haystack(text)
    m = len(p)
    n = len(hay)
    if m > n:
        return []
    B, ell, k = _superimposed_masks(p, word.w)
    hi_start = n - m
    ranges = []
    for base in _lbndm_scan(B, ell, k, hay):
        lo = max(base - k + 1, 0)
        hi = min(base, hi_start)
        if lo <= hi:
            ranges.append((lo, hi))
    return ranges


def compile_sbndm_bmh(p: bytes, word: WordSpec = WORD):
    """SBNDM with Horspool shift: take the larger of the BNDM-test shift
    and the bad-character shift of the window's last character."""
    m = len(p)
    if m > word.w:
        raise ApplicabilityError("SBNDM-BMH", m, f"m <= w ({word.w})")
    B = backward_masks(p)
    hs = _horspool_table(p)
    per = m - kmp_failure(p)[m]

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            c = hay[pos + m - 1]
            D = B[c]
            if D == 0:
                pos += m
                continue
            j = m - 1
            while j > 0:
                j -= 1
                D = (D << 1) & B[hay[pos + j]]
                if D == 0:
                    break
            if D:
                out.append(pos)
                base = per
            else:
                base = j + 1
            h = hs[c]
            pos += h if h > base else base
        return out

    return run


def compile_bmh_sbndm(p: bytes, word: WordSpec = WORD):
    """Horspool with BNDM test: always advance by the bad-character shift;
    windows whose last character occurs in the pattern get the bit-parallel
    backward test."""
    m = len(p)
    if m > word.w:
        raise ApplicabilityError("BMH-SBNDM", m, f"m <= w ({word.w})")
    B = backward_masks(p)
    hs = _horspool_table(p)

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            c = hay[pos + m - 1]
            D = B[c]
            if D:
                j = m - 1
                while j > 0:
                    j -= 1
                    D = (D << 1) & B[hay[pos + j]]
                    if D == 0:
                        break
                if D:
                    out.append(pos)
            pos += hs[c]
        return out

    return run


def search_so(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_so(as_needle(pattern), word)(as_haystack(text))


def search_sa(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_sa(as_needle(pattern), word)(as_haystack(text))


def search_bndm(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_bndm(as_needle(pattern), word)(as_haystack(text))


def search_sbndm(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_sbndm(as_needle(pattern), word)(as_haystack(text))


def search_sbndmq(q: int, pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_sbndmq(q, as_needle(pattern), word)(as_haystack(text))


def search_fsbndm(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_fsbndm(as_needle(pattern), word)(as_haystack(text))


def search_lbndm(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_lbndm(as_needle(pattern), word)(as_haystack(text))


def search_sbndm_bmh(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_sbndm_bmh(as_needle(pattern), word)(as_haystack(text))


def search_bmh_sbndm(pattern, text, word: WordSpec = WORD) -> list[int]:
    return compile_bmh_sbndm(as_needle(pattern), word)(as_haystack(text))
