"""Seeded random generators for codes, code pairs, and mapping-class words.

Everything takes an explicit ``random.Random`` so experiment runs are
reproducible from their seed alone.
"""

from __future__ import annotations

from .codes import Code, canonicalize
from .errors import RaylabError
from .mcg import MappingClassWord, invert, named
from .model import TruncatedModel
from .tight import are_disjoint, is_essential, is_simple


def random_word(rng, model: TruncatedModel, maxlen: int, minlen: int = 0,
                span: int | None = None):
    lo = -model.window if span is None else max(-model.window, -span)
    hi = model.window - 1 if span is None else min(model.window - 1, span - 1)
    segs = list(range(lo, hi + 1))
    n = rng.randint(minlen, maxlen)
    word = []
    for _ in range(n):
        c = rng.choice(segs)
        while word and c == word[-1]:
            c = rng.choice(segs)
        word.append(c)
    return tuple(word)


def random_code(rng, model: TruncatedModel, maxlen: int, loop_prob: float = 0.0,
                span: int | None = None):
    """A canonical code; ``span`` caps letters and endpoints to [-span, span]."""
    word = random_word(rng, model, maxlen, span=span)
    hi = model.window if span is None else min(model.window, span)
    if rng.random() < loop_prob:
        end = None
    else:
        end = rng.choice([k for k in range(-hi, hi + 1) if k])
    start = rng.choice("NS")
    return canonicalize(Code(start, word, end), model)


def random_simple_ray(rng, model: TruncatedModel, maxlen: int, tries: int = 400):
    for _ in range(tries):
        code = random_code(rng, model, maxlen, loop_prob=0.0)
        if is_simple(model, code):
            return code
    raise RaylabError("could not sample a simple ray")


def random_loop_vertex(rng, model: TruncatedModel, maxlen: int, tries: int = 400):
    """A simple essential canonical loop."""
    for _ in range(tries):
        code = random_code(rng, model, maxlen, loop_prob=1.0)
        if code.word and is_simple(model, code) and is_essential(model, code):
            return code
    raise RaylabError("could not sample an essential simple loop")


def random_disjoint_pair(rng, model: TruncatedModel, maxlen: int, tries: int = 4000):
    """Two distinct simple rays realizable disjointly."""
    for _ in range(tries):
        x = random_simple_ray(rng, model, maxlen)
        y = random_simple_ray(rng, model, maxlen)
        if x != y and are_disjoint(model, x, y):
            return x, y
    raise RaylabError("could not sample a disjoint pair")


_MC_ALPHABET = ("t1", "t1^-1", "t2", "t2^-1", "phi")


def random_mc_word(rng, model: TruncatedModel, maxlen: int, minlen: int = 1):
    """An orientation-preserving word over t1, t2, their inverses, and phi."""
    n = rng.randint(minlen, maxlen)
    word = MappingClassWord(())
    names = []
    for _ in range(n):
        pick = rng.choice(_MC_ALPHABET)
        names.append(pick)
        base = named(pick.split("^")[0])
        factor = invert(base) if pick.endswith("^-1") else base
        word = factor * word
    return word, "*".join(reversed(names))
