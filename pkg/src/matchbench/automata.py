"""Factor-oracle searchers: BOM and its two-character-entry variant EBOM.

Both scan each window right to left through the factor oracle of the
reversed pattern.  The oracle may accept a few words that are not factors;
that slack is safe because full-window survival only gates a verification.
"""

from __future__ import annotations

from .core import ApplicabilityError, as_haystack, as_needle, match_at


class FactorOracle:
    """Factor oracle of a word (Allauzen-Crochemore-Raffinot on-line build).

    States 0..m, at most 2m-1 external transitions.  Accepts at least every
    factor of the word.
    """

    __slots__ = ("word", "transitions")

    def __init__(self, word: bytes):
        m = len(word)
        trans: list[dict[int, int]] = [dict() for _ in range(m + 1)]
        supply = [-1] * (m + 1)
        for i in range(1, m + 1):
            c = word[i - 1]
            trans[i - 1][c] = i
            k = supply[i - 1]
            while k > -1 and c not in trans[k]:
                trans[k][c] = i
                k = supply[k]
            supply[i] = 0 if k == -1 else trans[k][c]
        self.word = word
        self.transitions = trans

    @property
    def state_count(self) -> int:
        return len(self.transitions)

    def accepts(self, s: bytes) -> bool:
        state = 0
        for c in s:
            nxt = self.transitions[state].get(c)
            if nxt is None:
                return False
            state = nxt
        return True

    def external_transition_count(self) -> int:
        return sum(len(d) for d in self.transitions) - len(self.word)


def build_factor_oracle(pattern) -> FactorOracle:
    """Oracle over the reversed pattern, as used by the backward scan."""
    return FactorOracle(as_needle(pattern)[::-1])


def compile_bom(p: bytes):
    """Backward Oracle Matching: on transition failure after k consumed
    characters shift by m-k; on full survival verify and shift by 1."""
    m = len(p)
    trans = FactorOracle(p[::-1]).transitions

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            state = 0
            j = m - 1
            while j >= 0:
                nxt = trans[state].get(hay[pos + j])
                if nxt is None:
                    break
                state = nxt
                j -= 1
            if j >= 0:
                pos += j + 1
            else:
                if match_at(hay, pos, p):
                    out.append(pos)
                pos += 1
        return out

    return run


def compile_ebom(p: bytes):
    """Extended BOM: enters each window through a dense 256x256 table
    holding the oracle state after the window's last two characters.

    Shifts mirror BOM's exactly (a dead first character still shifts by m),
    so the two-character entry costs at most one extra read per window.
    """
    m = len(p)
    if m < 2:
        raise ApplicabilityError("EBOM", m, "m >= 2")
    trans = FactorOracle(p[::-1]).transitions
    init = trans[0]
    ft: list[int | None] = [None] * 65536
    for c1, s1 in init.items():
        row = c1 << 8
        for c2, s2 in trans[s1].items():
            ft[row | c2] = s2
    in_pattern = [False] * 256
    for c in init:
        in_pattern[c] = True

    def run(hay) -> list[int]:
        n = len(hay)
        out: list[int] = []
        if m > n:
            return out
        pos = 0
        end = n - m
        while pos <= end:
            c1 = hay[pos + m - 1]
            state = ft[(c1 << 8) | hay[pos + m - 2]]
            if state is None:
                pos += m - 1 if in_pattern[c1] else m
                continue
            j = m - 3
            while j >= 0:
                nxt = trans[state].get(hay[pos + j])
                if nxt is None:
                    break
                state = nxt
                j -= 1
            if j >= 0:
                pos += j + 1
            else:
                if match_at(hay, pos, p):
                    out.append(pos)
                pos += 1
        return out

    return run


def search_bom(pattern, text) -> list[int]:
    return compile_bom(as_needle(pattern))(as_haystack(text))


def search_ebom(pattern, text) -> list[int]:
    return compile_ebom(as_needle(pattern))(as_haystack(text))
