"""Crossing-word codes for arcs based at infinity.

An arc from infinity is recorded by the hemisphere of its first excursion
(``S`` or ``N``), the word of equator segments it crosses in order, and its
endpoint (a block, or infinity again for a loop).  A reduced word has no
adjacent repeated letter; additionally a leading letter adjacent to infinity
can be pivoted away (flipping the start flag), and a trailing letter adjacent
to the arc's own endpoint can be pivoted away, because the region cut off at
the endpoint contains no marked points.  The fixed point of these moves is
the canonical form; two codes name the same isotopy class iff they have the
same canonical form (loops are additionally stored in a canonical traversal
direction).

One genuine collapse beyond the letter rules: an empty-word arc ending at
b_1 or b_{-1} can be slid across the Cantor-free interval next to infinity,
so its start flag is meaningless and is canonicalized to ``S``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import CodeSyntaxError
from .model import TruncatedModel, endpoint_block_of_p

SOUTH = "S"
NORTH = "N"


def _flip(flag: str) -> str:
    return NORTH if flag == SOUTH else SOUTH


@dataclass(frozen=True)
class Code:
    """An arc code: start hemisphere, segment word, endpoint block (None = inf)."""

    start: str
    word: tuple
    end: int | None

    @property
    def is_loop(self) -> bool:
        return self.end is None

    def hemisphere(self, i: int) -> str:
        """Hemisphere of excursion i (the piece after the i-th crossing)."""
        return self.start if i % 2 == 0 else _flip(self.start)

    @property
    def end_hemisphere(self) -> str:
        return self.hemisphere(len(self.word))

    def __str__(self) -> str:
        return format_code(self)


def ray(start: str, word, end: int) -> Code:
    return Code(start, tuple(word), end)


def loop(start: str, word) -> Code:
    return Code(start, tuple(word), None)


def reverse_word(word):
    """The segment word read backwards."""
    return tuple(reversed(tuple(word)))


# ---------------------------------------------------------------------------
# Reduction


def _adjacent_to_inf(n: int) -> bool:
    return n in (0, -1)


def _validate(code: Code, model: TruncatedModel) -> None:
    for n in code.word:
        model.check_segment(n)
    if code.end is not None:
        model.check_block(code.end)


def normalize(code: Code, model: TruncatedModel) -> Code:
    """Canonical form of a raw code: cancel adjacent repeats, pivot at both
    ends, canonicalize the flag of slidable empty codes.  Idempotent."""
    from .kernels import cancel_adjacent

    _validate(code, model)
    start = code.start
    word = list(code.word)
    end = code.end
    end_adj = (
        model.segments_at_inf() if end is None else model.segments_at_block(end)
    )
    changed = True
    while changed:
        changed = False
        reduced = cancel_adjacent(word)
        if len(reduced) != len(word):
            word = reduced
            changed = True
        while word and _adjacent_to_inf(word[0]):
            word.pop(0)
            start = _flip(start)
            changed = True
        while word and word[-1] in end_adj:
            word.pop()
            changed = True
    if not word and (end is None or end in (1, -1)):
        start = SOUTH  # slidable across the Cantor-free interval at infinity
    return Code(start, tuple(word), end)


def canonical_loop(code: Code, model: TruncatedModel) -> Code:
    """Normalize a loop and orient it canonically.

    The two traversals are compared by word (segments ordered by index),
    then by flag with N preferred; the smaller is stored.
    """
    if code.end is not None:
        raise CodeSyntaxError("canonical_loop expects a loop (endpoint inf)")
    fwd = normalize(code, model)
    bwd = normalize(
        Code(fwd.end_hemisphere, reverse_word(fwd.word), None), model
    )

    def key(c: Code):
        return (c.word, 0 if c.start == NORTH else 1)

    return min(fwd, bwd, key=key)


def canonicalize(code: Code, model: TruncatedModel) -> Code:
    """normalize() for rays, canonical_loop() for loops."""
    return canonical_loop(code, model) if code.is_loop else normalize(code, model)


def begins_like(code: Code, prefix) -> bool:
    """True iff the arc starts south and its word extends the given prefix."""
    prefix = tuple(prefix)
    return code.start == SOUTH and code.word[: len(prefix)] == prefix


# ---------------------------------------------------------------------------
# Text format

_CODE_RE = re.compile(
    r"^\s*([NS])\s*:\s*((?:s-?\d+\s*)*)@\s*(inf|b-?\d+|p-?\d+)\s*$"
)


def parse(text: str, model: TruncatedModel) -> Code:
    """Parse one code and return its canonical form.

    Grammar:  ray  ::= ("N"|"S") ":" (" " seg)* " @ " endpoint
              loop ::= ("N"|"S") ":" (" " seg)* " @ inf"
              seg ::= "s" integer ; endpoint ::= "b" nonzero | "p" integer
    """
    m = _CODE_RE.match(text)
    if not m:
        raise CodeSyntaxError(f"cannot parse code: {text!r}")
    start = m.group(1)
    word = tuple(int(tok[1:]) for tok in m.group(2).split())
    endtok = m.group(3)
    if endtok == "inf":
        end = None
    elif endtok.startswith("b"):
        end = int(endtok[1:])
        if end == 0:
            raise CodeSyntaxError("b0 is not a block")
    else:
        end = endpoint_block_of_p(int(endtok[1:]))
    raw = Code(start, word, end)
    _validate(raw, model)
    return canonicalize(raw, model)


def format_code(code: Code) -> str:
    segs = "".join(f" s{n}" for n in code.word)
    endtok = "inf" if code.end is None else f"b{code.end}"
    return f"{code.start}:{segs} @ {endtok}"
