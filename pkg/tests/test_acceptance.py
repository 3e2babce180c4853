"""Acceptance checks.  Each test prints one PASS/FAIL line with its elapsed
time and fails if the stated time limit is exceeded."""

import random
import time
from contextlib import contextmanager


from cantor_swaps import cli
from cantor_swaps.address import addresses_of_length, enumerate_addresses, incomparable
from cantor_swaps.algorithms import (
    SUITES,
    decompose_swap,
    even_factorization,
    run_suite,
    swap_product,
)
from cantor_swaps.element import from_swap, identity, inverse, order_of, supports_disjoint
from cantor_swaps.presentations import (
    Presentation,
    Relator,
    evaluate,
    evaluate_word,
    genset_abc,
    genset_swaps,
    genset_uv,
    infinite_family_counts,
    presentation_P3,
    truncated_infinite_presentation,
)
from cantor_swaps.treepair import to_tree_pair
from cantor_swaps.words import flatten, parse, word_to_expr

from conftest import ABC_SWAPS, act_swaps, random_swap, random_swap_list, word_swaps


@contextmanager
def criterion(capsys, number, title, limit):
    start = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - start
        status = "PASS" if elapsed < limit else "FAIL"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[acceptance {number:>2}] {status} {title} ({elapsed:.2f}s, limit {limit}s)")
    assert elapsed < limit, f"took {elapsed:.2f}s, limit {limit}s"


def suite_ok(capsys, name, total):
    code = cli.main(["verify", name])
    out = capsys.readouterr().out
    assert code == 0, out
    assert f"{name}: {total}/{total} passed" in out


def test_c01_p3(capsys):
    with criterion(capsys, 1, "p3: eight relations in swap and word form", 1.0):
        suite_ok(capsys, "p3", 8)
        rep = run_suite(presentation_P3())
        assert all(len(r.forms) >= 2 for r in presentation_P3().relators)
        assert rep.ok


def test_c02_p3_kb(capsys):
    with criterion(capsys, 2, "p3-kb: eight shortened relators", 1.0):
        suite_ok(capsys, "p3-kb", 8)


def test_c03_two_gen(capsys):
    with criterion(capsys, 3, "two-gen: seven relators, |u| = 6, |v| = 3", 1.0):
        suite_ok(capsys, "two-gen", 7)
        assert order_of(genset_uv()["u"]) == 6
        assert order_of(genset_uv()["v"]) == 3


def test_c04_cfp(capsys):
    with criterion(capsys, 4, "cfp: fourteen relators; eight auxiliary swap formulas", 1.0):
        suite_ok(capsys, "cfp", 14)
        suite_ok(capsys, "cfp-lemma", 8)


def test_c05_swap_table(capsys):
    with criterion(capsys, 5, "swap-table: 71 entries match their swaps", 2.0):
        suite_ok(capsys, "swap-table", 71)


def test_c06_inf_l3(capsys):
    with criterion(capsys, 6, "inf-L3: order/conjugacy/split relations, length <= 3", 10.0):
        suite_ok(capsys, "inf-L3", 14432)
        c = infinite_family_counts(truncated_infinite_presentation(3))
        assert (c.order, c.conjugacy, c.split) == (142, 14268, 22)


def test_c07_swap_families(capsys):
    with criterion(capsys, 7, "swap identity families: 35 families, 3932 instances", 10.0):
        suite_ok(capsys, "section3", 3932)


def test_c08_prop51_tietze(capsys):
    with criterion(capsys, 8, "prop51 and tietze-uv identities", 1.0):
        suite_ok(capsys, "prop51", 6)
        suite_ok(capsys, "tietze-uv", 6)


def test_c09_tree_pairs(capsys):
    with criterion(capsys, 9, "tree-pair numbering of <100 11>, u and v", 1.0):
        f3 = to_tree_pair(from_swap("100", "11"))
        assert f3.domain_numbering == (1, 2, 3, 4) and f3.range_numbering == (1, 4, 3, 2)
        assert to_tree_pair(evaluate("u", genset_uv())).range_numbering == (2, 1, 5, 3, 4)
        assert to_tree_pair(evaluate("v", genset_uv())).range_numbering == (1, 4, 2, 3)


def _oracle_equal(w1, w2, f, g, tail):
    n = max(f.depth, g.depth)
    s1, s2 = word_swaps(w1, ABC_SWAPS), word_swaps(w2, ABC_SWAPS)
    return all(act_swaps(p + tail, s1) == act_swaps(p + tail, s2) for p in addresses_of_length(n))


def _random_word(rng, max_len=16):
    return tuple((rng.choice("abc"), rng.choice((1, -1))) for _ in range(rng.randint(0, max_len)))


def test_c10_properties(capsys):
    rng = random.Random(10)
    gs = genset_abc()
    tail = "".join(rng.choice("01") for _ in range(48))
    with criterion(capsys, 10, "property suite (axioms, equality oracle, decomposition, parity, disjointness)", 60.0):
        # group axioms on 500 random triples
        for _ in range(500):
            f, g, h = (swap_product(random_swap_list(rng, rng.randint(0, 5), max_len=4)) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * identity() == f == identity() * f
            assert (f * inverse(f)).is_identity() and (inverse(f) * f).is_identity()

        # canonical equality agrees with the action oracle on 1000 random words
        relators = ["a a", "b b b", "(a b)^4", "c^(a c) a^-1"]
        equal_seen = 0
        for i in range(1000):
            w1 = _random_word(rng)
            if i % 2:
                k = rng.randint(0, len(w1))
                ins = flatten(parse(rng.choice(relators)))
                w2 = w1[:k] + ins + w1[k:]
            else:
                w2 = _random_word(rng)
            f, g = evaluate_word(w1, gs), evaluate_word(w2, gs)
            same = f == g
            equal_seen += same
            assert same == _oracle_equal(w1, w2, f, g, tail)
        assert equal_seen >= 500

        # decomposition checked on every incomparable pair with lengths <= 4
        addrs = [a for a in enumerate_addresses(4) if a]
        checked = 0
        for a in addrs:
            for b in addrs:
                if incomparable(a, b):
                    word = decompose_swap(a, b)
                    assert evaluate(word_to_expr(word), genset_swaps()) == from_swap(a, b)
                    checked += 1
        assert checked == 734

        # parity correction on 500 random inputs
        for _ in range(500):
            pairs = random_swap_list(rng, rng.randint(0, 7), max_len=4)
            out = even_factorization(pairs)
            assert len(out) % 2 == 0 and len(out) <= len(pairs) + 1
            assert swap_product(out) == swap_product(pairs)

        # disjoint supports commute, on 500 random swap pairs
        disjoint = 0
        for _ in range(500):
            s, t = from_swap(*random_swap(rng, 4)), from_swap(*random_swap(rng, 4))
            if supports_disjoint(s, t):
                disjoint += 1
                assert s * t == t * s
        # keep the implication from passing vacuously
        assert disjoint >= 50


def test_c11_negative_controls(capsys, monkeypatch):
    with criterion(capsys, 11, "sabotaged suites fail with nonzero exit", 5.0):
        p = presentation_P3()
        broken = Presentation("p3", p.generators, p.relators + (Relator.of("sabotage", "a"),), p.genset)
        rep = run_suite(broken)
        assert not rep.ok and rep.passed == 8 and rep.total == 9
        monkeypatch.setitem(SUITES, "p3", lambda: broken)
        code = cli.main(["verify", "p3"])
        out = capsys.readouterr().out
        assert code == 1
        assert "p3: 8/9 passed" in out and "FAIL sabotage: a" in out

        # a corrupted transcription of a long relator is caught too
        kb = SUITES["p3-kb"]()
        r = kb.relators[5]
        corrupted = Relator.of(r.label, r.text.replace("(c b)^2", "(c b)^3", 1))
        bad_kb = Presentation("p3-kb", kb.generators, kb.relators[:5] + (corrupted,) + kb.relators[6:], kb.genset)
        monkeypatch.setitem(SUITES, "p3-kb", lambda: bad_kb)
        assert cli.main(["verify", "p3-kb"]) == 1
        capsys.readouterr()
        assert cli.main(["verify", "all", "--tsv"]) == 1
        capsys.readouterr()
