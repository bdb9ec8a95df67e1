"""Exit gates.  Each test records one PASS/FAIL line, printed after the run.

Run directly with ``python3 tests/test_acceptance.py`` or as part of pytest.
"""

import random
import time
from math import comb

import pytest

from helpers import matching_sum, record
from qshuffle.cli import main
from qshuffle.relations import CATALOG, verify, verify_range
from qshuffle.series import SERIES_IDENTITIES, verify_series_identity
from qshuffle.shuffle import shuffle, shuffle_oracle
from qshuffle.words import Word, all_words, classify, in_U_by_orthogonality


def _sweep(prefixes, bound):
    fids = [fid for fid in CATALOG if fid.startswith(prefixes)]
    t0 = time.perf_counter()
    reports = [r for fid in fids for r in verify_range(fid, bound)]
    return fids, reports, time.perf_counter() - t0


def _gate(number, fids, reports, elapsed, limit, what):
    failed = [f"{r.id}{r.params}" for r in reports if not r.passed]
    ok = not failed and elapsed < limit
    record(number, ok, f"{what}: {len(fids)} families, {len(reports)} instances, "
                       f"{len(failed)} failures, {elapsed:.2f} s (limit {limit} s)")
    assert not failed, failed[:10]
    assert elapsed < limit


def test_1_serre_relations():
    t0 = time.perf_counter()
    reports = [verify("serre.x", []), verify("serre.y", [])]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reports) and elapsed < 1e-3
    record(1, ok, f"q-Serre relations: both pass in {elapsed * 1e3:.3f} ms (limit 1 ms)")
    assert all(r.passed for r in reports)
    assert elapsed < 1e-3


def test_2_letter_commutators():
    fids, reports, elapsed = _sweep(("P4.",), 4)
    assert len(fids) == 32 and len(reports) == 160
    _gate(2, fids, reports, elapsed, 5, "letter commutators n <= 4")


def test_3_convolutions_and_corollaries():
    fids, reports, elapsed = _sweep(("P5.",), 3)
    assert len(fids) == 40
    _gate(3, fids, reports, elapsed, 30, "convolutions and cleared corollaries n <= 3")


def test_4_generating_functions():
    t0 = time.perf_counter()
    reports = [verify_series_identity(sid, 8) for sid in SERIES_IDENTITIES]
    mismatched = []
    for sid, ident in SERIES_IDENTITIES.items():
        lhs = ident.lhs(8)
        mismatched += [(sid, m) for m in range(9) if lhs[m] != matching_sum(sid, m)]
    elapsed = time.perf_counter() - t0
    failed = [r.id for r in reports if not r.passed]
    ok = not failed and not mismatched and elapsed < 60
    record(4, ok, f"generating functions through t^8: {len(reports)} identities, {len(failed)} failures, "
                  f"{len(mismatched)} coefficient mismatches against finite sums, {elapsed:.2f} s (limit 60 s)")
    assert not failed and not mismatched
    assert elapsed < 60


def test_5_alternating_word_relations():
    fids, reports, elapsed = _sweep(("A.",), 6)
    assert len(reports) == 18 * 28
    _gate(5, fids, reports, elapsed, 30, "alternating-word relations i + j <= 6")


def test_6_doubly_alternating_commutators():
    fids, reports, elapsed = _sweep(("B.",), 4)
    assert len(fids) == 44 and len(reports) == 44 * 15
    _gate(6, fids, reports, elapsed, 60, "doubly alternating commutators i + j <= 4")


def test_7_alternating_convolutions():
    fids, reports, elapsed = _sweep(("C.",), 3)
    assert len(fids) == 12
    _gate(7, fids, reports, elapsed, 30, "alternating convolutions n <= 3")


def test_8_classification_against_orthogonality():
    t0 = time.perf_counter()
    disagree = []
    count = 0
    for n in range(1, 11):
        for w in all_words(n):
            count += 1
            if classify(w).in_U != in_U_by_orthogonality(w):
                disagree.append(str(w))
    elapsed = time.perf_counter() - t0
    ok = count == 2046 and not disagree and elapsed < 60
    record(8, ok, f"classification vs ideal orthogonality: {count} words, {len(disagree)} disagreements, "
                  f"{elapsed:.2f} s (limit 60 s)")
    assert count == 2046 and not disagree
    assert elapsed < 60


def test_9_shuffle_correctness():
    t0 = time.perf_counter()
    bad = []
    exhaustive = 0
    for total in range(11):
        for r in range(total + 1):
            for u in all_words(r):
                for v in all_words(total - r):
                    exhaustive += 1
                    if shuffle(u, v) != shuffle_oracle(u, v):
                        bad.append(("oracle", str(u), str(v)))
    rng = random.Random(20240601)

    def rand_word(n):
        return Word("".join(rng.choice("xy") for _ in range(n)))

    for _ in range(1000):
        total = rng.randint(0, 16)
        r = rng.randint(0, total)
        u, v = rand_word(r), rand_word(total - r)
        if shuffle(u, v) != shuffle_oracle(u, v):
            bad.append(("random", str(u), str(v)))
    for _ in range(200):
        u, v, w = (rand_word(rng.randint(0, 4)) for _ in range(3))
        if shuffle(shuffle(u, v), w) != shuffle(u, shuffle(v, w)):
            bad.append(("assoc", str(u), str(v), str(w)))
    for _ in range(200):
        u, v = rand_word(rng.randint(0, 8)), rand_word(rng.randint(0, 8))
        if sum(c.at_one() for _, c in shuffle(u, v).items()) != comb(len(u) + len(v), len(u)):
            bad.append(("binomial", str(u), str(v)))
    elapsed = time.perf_counter() - t0
    record(9, not bad, f"shuffle correctness: {exhaustive} exhaustive pairs, 1000 random pairs, "
                       f"200 triples, 200 binomial checks, {len(bad)} failures, {elapsed:.2f} s")
    assert not bad, bad[:5]


def test_10_verify_all_end_to_end(capsys):
    t0 = time.perf_counter()
    status = main(["verify-all", "--bound-one", "4", "--bound-two", "4", "--order", "8"])
    status_a = main(["verify-all", "--group", "A.", "--bound-two", "6"])
    elapsed = time.perf_counter() - t0
    summary = capsys.readouterr().out.strip().splitlines()
    ok = status == 0 and status_a == 0 and elapsed < 300
    record(10, ok, f"verify-all at acceptance bounds: exit {status}/{status_a}, {elapsed:.2f} s (limit 300 s); "
                   f"{summary[-1] if summary else ''}")
    assert status == 0 and status_a == 0
    assert elapsed < 300


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-p", "no:cacheprovider", "-W", "ignore::pytest.PytestAssertRewriteWarning"]))
