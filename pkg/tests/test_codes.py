import random

import pytest

from raylab.codes import (
    Code,
    begins_like,
    canonical_loop,
    canonicalize,
    format_code,
    normalize,
    parse,
    reverse_word,
)
from raylab.errors import CodeSyntaxError, OutOfWindowError
from raylab.model import build_model
from raylab.sampling import random_code


def test_parse_examples(m6):
    assert parse("S: s1 s-1 @ p1", m6) == Code("S", (1, -1), 2)
    assert parse("S: @ b1", m6) == Code("S", (), 1)
    with pytest.raises(OutOfWindowError):
        parse("S: s9 @ b1", build_model(3))
    with pytest.raises(CodeSyntaxError):
        parse("X: s1 @ b1", m6)
    with pytest.raises(CodeSyntaxError):
        parse("S: s1 @ b0", m6)


def test_normalize_examples(m6):
    assert normalize(Code("S", (1, 2, 2, 1), 2), m6) == Code("S", (), 2)
    assert normalize(Code("S", (0, 1), None), m6) == Code("N", (1,), None)
    a2 = Code("S", (1, -1, 2, 1, -1, 1, 0, -1, 1, -1), 3)
    assert normalize(a2, m6) == a2


def test_normalize_idempotent(m6, rng):
    for _ in range(300):
        raw = Code(
            rng.choice("NS"),
            tuple(rng.choice(range(-6, 6)) for _ in range(rng.randint(0, 8))),
            rng.choice([None] + [k for k in range(-6, 7) if k]),
        )
        once = normalize(raw, m6)
        assert normalize(once, m6) == once


def _insert_inverse_moves(rng, m, code, moves):
    """Apply random inverse elementary moves to a reduced code."""
    start, word, end = code.start, list(code.word), code.end
    for _ in range(moves):
        move = rng.choice(["dup", "head", "tail"])
        if move == "dup":
            i = rng.randint(0, len(word))
            seg = rng.choice(range(-m.window, m.window))
            word[i:i] = [seg, seg]
        elif move == "head":
            seg = rng.choice(m.segments_at_inf())
            word.insert(0, seg)
            start = "N" if start == "S" else "S"
        else:
            adj = m.segments_at_inf() if end is None else m.segments_at_block(end)
            word.append(rng.choice(adj))
    return Code(start, tuple(word), end)


def test_confluence_roundtrip(m6, rng):
    for _ in range(250):
        code = random_code(rng, m6, maxlen=6, loop_prob=0.3)
        noisy = _insert_inverse_moves(rng, m6, code, rng.randint(1, 6))
        assert canonicalize(noisy, m6) == code


def test_begins_like(m6):
    a1 = parse("S: s1 s-1 @ p1", m6)
    a2 = parse("S: s1 s-1 s2 s1 s-1 s1 s0 s-1 s1 s-1 @ p2", m6)
    assert begins_like(a2, a1.word)
    assert not begins_like(a1, a2.word)
    assert not begins_like(Code("N", (1, -1), 2), a1.word)


def test_reverse_word(rng):
    assert reverse_word((1, -1)) == (-1, 1)
    assert reverse_word(()) == ()
    for _ in range(50):
        w = tuple(rng.randint(-5, 5) for _ in range(rng.randint(0, 9)))
        assert reverse_word(reverse_word(w)) == w


def test_canonical_loop_examples(m6):
    assert canonical_loop(Code("S", (2, 1), None), m6) == Code("S", (1, 2), None)
    assert canonical_loop(Code("N", (1,), None), m6) == Code("N", (1,), None)
    assert canonical_loop(Code("S", (0, 1), None), m6) == Code("N", (1,), None)


def test_round_trip(m6, rng):
    for _ in range(200):
        code = random_code(rng, m6, maxlen=7, loop_prob=0.3)
        assert parse(format_code(code), m6) == code


def test_end_hemisphere_is_derived(m6):
    code = parse("S: s1 s-1 s2 @ b1", m6)
    assert code.end_hemisphere == ("S" if len(code.word) % 2 == 0 else "N")
    for i in range(len(code.word) + 1):
        assert code.hemisphere(i) == ("S" if i % 2 == 0 else "N")


def test_normal_form_soundness_small_universe(m3):
    """Distinct normal forms name distinct classes: on the bounded universe
    every disjoint same-endpoint pair is separated by the intersection
    profile of some witness, per the exhaustive oracle."""
    from raylab import tight
    from raylab.experiments import small_universe

    univ = small_universe(m3, 2)
    pool = sorted(small_universe(m3, 3), key=lambda c: len(c.word))
    for i, x in enumerate(univ):
        for y in univ[i + 1 :]:
            if x.end != y.end:
                continue
            if tight.brute_min_crossings(m3, x, y) > 0:
                continue
            assert any(
                tight.brute_min_crossings(m3, w, x)
                != tight.brute_min_crossings(m3, w, y)
                for w in pool
            ), (x, y)


def test_slidable_empty_codes_merge(m6):
    assert normalize(Code("N", (), 1), m6) == Code("S", (), 1)
    assert normalize(Code("N", (), -1), m6) == Code("S", (), -1)
    # farther endpoints stay genuinely two-sided
    assert normalize(Code("N", (), 2), m6) == Code("N", (), 2)
