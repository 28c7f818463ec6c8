import numpy as np
import pytest

from matchbench.bench import generate_rand_text
from matchbench.comparison import (
    _br_table,
    _horspool_table,
    _sunday_table,
    compile_hashq,
    search_br,
    search_fjs,
    search_hashq,
    search_hor,
    search_qs,
    search_ssef,
    search_tvsbs,
)
from matchbench.core import ApplicabilityError, InstrumentedText, brute_force_search

from conftest import assert_matches_oracle, fuzz_cases, rand_bytes


def test_hor_trivial():
    assert search_hor(b"aba", b"ababa") == [0, 2]
    assert search_hor(b"zz", b"abab") == []


def test_qs_trivial():
    assert search_qs(b"aba", b"ababa") == [0, 2]
    assert search_qs(b"zz", b"abab") == []


def test_br_trivial():
    assert search_br(b"ab", b"abab") == [0, 2]
    assert search_br(b"abcab", b"abc") == []  # m > n


def test_tvsbs_trivial():
    assert search_tvsbs(b"abba", b"abba") == [0]
    assert search_tvsbs(b"aa", b"bbbb") == []


def test_fjs_trivial():
    assert search_fjs(b"aaa", b"aaaaa") == [0, 1, 2]
    assert search_fjs(b"ab", b"ba") == []


@pytest.mark.parametrize("search_fn", [search_hor, search_qs, search_br, search_tvsbs, search_fjs])
def test_fuzz_against_oracle(search_fn):
    ran = assert_matches_oracle(search_fn, fuzz_cases(11, 500, 1, 64, n_max=2048))
    assert ran == 500


def test_fjs_periodic_patterns():
    rng = np.random.default_rng(12)
    for _ in range(100):
        k = int(rng.integers(1, 12))
        p = b"ab" * k
        n = int(rng.integers(len(p), 600))
        t = rand_bytes(rng, 2, n).replace(b"\x00", b"a").replace(b"\x01", b"b")
        assert search_fjs(p, t) == brute_force_search(p, t)


def test_hashq_trivial():
    assert search_hashq(3, b"abc", b"aabcc") == [1]


def test_hashq_applicability():
    with pytest.raises(ApplicabilityError):
        search_hashq(5, b"abcd", b"whatever")  # m=4 < q=5
    with pytest.raises(ApplicabilityError):
        search_hashq(8, b"abcdefg", b"whatever")
    with pytest.raises(ValueError):
        search_hashq(4, b"abcd", b"whatever")  # q not in {3,5,8}


@pytest.mark.parametrize("q", [3, 5, 8])
def test_hashq_fuzz(q):
    assert_matches_oracle(
        lambda p, t: search_hashq(q, p, t),
        fuzz_cases(100 + q, 500, q, 256, n_max=1024),
    )


def test_hashq_reads_only_sampled_grams():
    # with the pattern's final q-gram absent from the text there are no
    # candidate windows, so all reads group into q consecutive positions
    q, m = 3, 12
    p = bytes([0] * (m - q)) + bytes([7, 8, 9])
    t = bytes([0, 1] * 500)

    class Recorder:
        def __init__(self, data):
            self.data = data
            self.indices = []

        def __len__(self):
            return len(self.data)

        def __getitem__(self, i):
            self.indices.append(i)
            return self.data[i]

    rec = Recorder(t)
    assert compile_hashq(q, p)(rec) == []
    assert rec.indices, "filter must read something"
    assert len(rec.indices) % q == 0
    for k in range(0, len(rec.indices), q):
        gram = rec.indices[k : k + q]
        assert gram == list(range(gram[0], gram[0] + q))


def test_ssef_degenerate_periodic():
    assert search_ssef(b"\x00" * 32, b"\x00" * 1024) == list(range(993))


def test_ssef_applicability():
    with pytest.raises(ApplicabilityError):
        search_ssef(b"x" * 16, b"whatever")
    with pytest.raises(ApplicabilityError):
        search_ssef(b"x" * 31, b"whatever")


def test_ssef_fuzz():
    assert_matches_oracle(
        search_ssef,
        fuzz_cases(13, 500, 32, 1024, sigmas=(2, 4, 64), n_max=4096),
    )


@pytest.mark.parametrize(
    "search_fn,min_m",
    [
        (search_hor, 1),
        (search_qs, 1),
        (search_br, 1),
        (search_tvsbs, 1),
        (search_fjs, 1),
        (lambda p, t: search_hashq(3, p, t), 3),
        (search_ssef, 32),
    ],
)
def test_planted_occurrence_never_skipped(search_fn, min_m):
    # shift safety: a pattern planted at a random position is always found
    rng = np.random.default_rng(14)
    for _ in range(200):
        sigma = int(rng.choice([2, 4, 64]))
        m = int(rng.integers(min_m, max(min_m + 1, 48)))
        n = int(rng.integers(m, 800))
        t = rand_bytes(rng, sigma, n)
        i = int(rng.integers(0, n - m + 1))
        p = t[i : i + m]
        assert i in search_fn(p, t)


def test_shift_table_bounds():
    rng = np.random.default_rng(15)
    for _ in range(100):
        m = int(rng.integers(1, 40))
        p = rand_bytes(rng, int(rng.choice([1, 2, 256])), m)
        assert all(1 <= s <= m for s in _horspool_table(p))
        assert all(1 <= s <= m + 1 for s in _sunday_table(p))
        assert all(1 <= s <= m + 2 for s in _br_table(p))


def test_hor_sublinear_reads_on_rand64(rand64_1mib):
    # qualitative sublinearity: well under half a read per text character
    text = rand64_1mib
    n = len(text)
    rng = np.random.default_rng(16)
    for m in (8, 32):
        i = int(rng.integers(0, n - m + 1))
        p = text.data[i : i + m]
        it = InstrumentedText(text)
        search_hor(p, it)
        assert it.reads < 0.5 * n
