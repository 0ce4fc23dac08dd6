"""Mapping classes acting on codes.

Generators: the block exchange across a segment (the two adjacent marked
points swap inside a lens around the segment, one passing north and one
south), the exchange of the two blocks flanking infinity through a corridor
over (or under) infinity, the half-turn ``phi`` about infinity, and the
equator mirror ``sigma``.

Each exchange acts on a code as a local rewrite: the image word is the list
of crossings of the old arc with the preimage of the equator, which near the
lens consists of a few arcs whose positions are known once and for all.  Per
excursion this reduces to a table lookup keyed by the classes of its two
attachment points, built in ``_emission_table`` from the chord data below
and executed by ``kernels.exchange_pass``.

The named elements: ``t1`` is the carousel shifting every block one step
rightward (the block left of infinity passing over it through the north),
realized as a sweep of exchanges from the right window edge down through the
over-infinity exchange to the left edge.  ``t2`` is its ``phi`` conjugate,
``h = h1 = t1 t2 t1``, ``h2 = phi h1^-1 phi^-1``, ``g = h2 h1``.  The two
direction bits of the sweep are frozen by the translation action on the
standard ray family (see tests); flipping either breaks it.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from . import kernels
from .codes import NORTH, SOUTH, Code, canonicalize
from .errors import MarginError, OutOfWindowError, RaylabError
from .model import TruncatedModel

# Frozen carousel direction bits: the unique combination (with this sweep
# order) under which the sweep reproduces the block-shift action on the
# standard ray family, h alpha_k = alpha_{k+1}.
T1_SEG_DIR_RIGHT = 1
T1_SEG_DIR_LEFT = 1
T1_INF_DIR = 1
T1_DESCENDING = True

_N, _S = 0, 1


@dataclass(frozen=True)
class MappingClassWord:
    """A word in the primitive generators, stored in application order
    (first-applied first)."""

    gens: tuple

    @property
    def orientation_preserving(self) -> bool:
        return sum(1 for g in self.gens if g[0] == "sigma") % 2 == 0

    def __mul__(self, other: "MappingClassWord") -> "MappingClassWord":
        return compose(self, other)


def compose(a: MappingClassWord, b: MappingClassWord) -> MappingClassWord:
    """The element acting as a after b: apply(compose(a,b), x) = a(b(x))."""
    return MappingClassWord(b.gens + a.gens)


def _invert_gen(g):
    kind = g[0]
    if kind in ("phi", "sigma"):
        return g
    if kind == "t1":
        return ("t1", -g[1])
    if kind == "tw":
        return ("tw", g[1], -g[2])
    if kind == "twinf":
        return ("twinf", -g[1])
    raise RaylabError(f"unknown generator {g!r}")


def invert(a: MappingClassWord) -> MappingClassWord:
    return MappingClassWord(tuple(_invert_gen(g) for g in reversed(a.gens)))


_NAMED = {}


def named(name: str, model: TruncatedModel | None = None) -> MappingClassWord:
    """One of t1, t2, h, h1, h2, phi, sigma, g (window independent words)."""
    try:
        return _NAMED[name]
    except KeyError:
        raise RaylabError(f"unknown element {name!r}") from None


def _init_named():
    t1 = MappingClassWord((("t1", 1),))
    phi = MappingClassWord((("phi",),))
    sigma = MappingClassWord((("sigma",),))
    t2 = compose(phi, compose(t1, phi))
    h1 = compose(t1, compose(t2, t1))
    h2 = compose(phi, compose(invert(h1), phi))
    g = compose(h2, h1)
    _NAMED.update(
        t1=t1, t2=t2, h=h1, h1=h1, h2=h2, phi=phi, sigma=sigma, g=g
    )


_init_named()


# ---------------------------------------------------------------------------
# Exchange tables.
#
# Chord data: (letter, depth, span of attachment classes, flexible class).
# An excursion crosses the chord iff exactly one of its two attachment
# classes lies in the span and neither is the flexible class (the chord's
# own marked endpoint, whose pencil slides off freely).  depth orders nested
# chords: larger is inner.


def _emission_table(nclasses, chords_by_hemi):
    emit = []
    for h in (_N, _S):
        table = [[() for _ in range(nclasses)] for _ in range(nclasses)]
        for u in range(nclasses):
            for v in range(nclasses):
                crossed = []
                for (letter, depth, span, flex) in chords_by_hemi[h]:
                    if flex is not None and (u == flex or v == flex):
                        continue
                    uin = u in span
                    if uin != (v in span):
                        crossed.append((letter, depth, uin))
                useq = sorted((c for c in crossed if c[2]), key=lambda c: -c[1])
                vseq = sorted((c for c in crossed if not c[2]), key=lambda c: c[1])
                table[u][v] = tuple(c[0] for c in useq + vseq)
        emit.append(table)
    return emit


@lru_cache(maxsize=None)
def _seg_exchange_tables(k: int, d: int):
    """Exchange of blocks k and k+1 across segment k; d=+1 sends the left
    block through the north.  Classes: 0 other, 1 slot on the segment,
    2 left block, 3 right block."""
    if d == 1:
        chords = (
            [(k - 1, 0, frozenset({1, 2}), 3)],  # north
            [(k + 1, 0, frozenset({1, 3}), 2)],  # south
        )
    else:
        chords = (
            [(k + 1, 0, frozenset({1, 3}), 2)],
            [(k - 1, 0, frozenset({1, 2}), 3)],
        )
    return _emission_table(4, chords)


@lru_cache(maxsize=None)
def _inf_exchange_tables(d: int):
    """Exchange of the two blocks flanking infinity through the north
    corridor; d picks the rotation sense.  Classes: 0 other, 1 slot on the
    left segment, 2 slot on the right segment, 3 left block, 4 right block,
    5 infinity."""
    if d == 1:
        chords = (
            [
                (-2, 0, frozenset({3, 1, 5, 2, 4}), None),
                (-1, 1, frozenset({3, 1, 5, 2}), 4),
                (1, 2, frozenset({1, 5, 2}), 3),
                (0, 3, frozenset({1, 5, 2}), None),
            ],
            [
                (-1, 0, frozenset({3}), None),
                (1, 1, frozenset({4}), None),
            ],
        )
    else:
        chords = (
            [
                (1, 0, frozenset({4, 2, 5, 1, 3}), None),
                (0, 1, frozenset({4, 2, 5, 1}), 3),
                (-2, 2, frozenset({2, 5, 1}), 4),
                (-1, 3, frozenset({2, 5, 1}), None),
            ],
            [
                (0, 0, frozenset({4}), None),
                (-2, 1, frozenset({3}), None),
            ],
        )
    return _emission_table(6, chords)


def _apply_seg_exchange(code: Code, model: TruncatedModel, k: int, d: int) -> Code:
    P, Q = k, k + 1
    emit = _seg_exchange_tables(k, d)
    wcls = [1 if n == k else 0 for n in code.word]
    end = code.end
    end_cls = 2 if end == P else 3 if end == Q else 0
    start_hemi = _N if code.start == NORTH else _S
    word = kernels.exchange_pass(list(code.word), wcls, 0, end_cls, start_hemi, emit)
    new_end = Q if end == P else P if end == Q else end
    return _rebuild(code.start, word, new_end, model)


def _apply_inf_exchange(code: Code, model: TruncatedModel, d: int) -> Code:
    emit = _inf_exchange_tables(d)

    def cls_letter(n):
        return 1 if n == -1 else 2 if n == 0 else 0

    wcls = [cls_letter(n) for n in code.word]
    end = code.end
    end_cls = 5 if end is None else 3 if end == -1 else 4 if end == 1 else 0
    start_hemi = _N if code.start == NORTH else _S
    word = kernels.exchange_pass(list(code.word), wcls, 5, end_cls, start_hemi, emit)
    new_end = 1 if end == -1 else -1 if end == 1 else end
    return _rebuild(code.start, word, new_end, model)


def _rebuild(start, word, end, model) -> Code:
    for n in word:
        if not model.is_segment(n):
            raise MarginError(
                f"rewrite emitted s{n}, outside window M={model.window}"
            )
    if end is not None and not model.is_block(end):
        raise MarginError(f"rewrite moved endpoint to b{end}, outside window")
    return canonicalize(Code(start, tuple(word), end), model)


def apply_phi(code: Code, model: TruncatedModel) -> Code:
    """Half turn about infinity: s_n -> s_{-n-1}, block k -> -k, flags swap."""
    word = tuple(-n - 1 for n in code.word)
    end = None if code.end is None else -code.end
    start = NORTH if code.start == SOUTH else SOUTH
    return canonicalize(Code(start, word, end), model)


def apply_sigma(code: Code, model: TruncatedModel) -> Code:
    """Equator mirror: fixes letters and endpoints, swaps hemispheres."""
    start = NORTH if code.start == SOUTH else SOUTH
    return canonicalize(Code(start, code.word, code.end), model)


# ---------------------------------------------------------------------------
# The carousel and the word action.


def _t1_margin_check(code: Code, model: TruncatedModel):
    M = model.window
    for n in code.word:
        if not (-(M - 1) <= n <= M - 2):
            raise MarginError(
                f"support touches the window boundary (letter s{n}, M={M})"
            )
    if code.end is not None and not (-(M - 1) <= code.end <= M - 1):
        raise MarginError(
            f"support touches the window boundary (endpoint b{code.end}, M={M})"
        )


def _t1_sequence(model: TruncatedModel, sign: int):
    M = model.window
    seq = (
        [("tw", j, T1_SEG_DIR_RIGHT) for j in range(M - 1, 0, -1)]
        + [("twinf", T1_INF_DIR)]
        + [("tw", j, T1_SEG_DIR_LEFT) for j in range(-2, -M - 1, -1)]
    )
    if not T1_DESCENDING:
        seq.reverse()
    if sign < 0:
        seq = [_invert_gen(g) for g in reversed(seq)]
    return seq


def _inf_exchange_inert(code: Code) -> bool:
    """The over-infinity exchange moves nothing of a code with no letters or
    endpoint next to infinity and no north germ at infinity."""
    if {-1, 0} & set(code.word) or code.end in (-1, 1):
        return False
    if code.start == NORTH:
        return False
    if code.is_loop and code.end_hemisphere == NORTH:
        return False
    return True


def _apply_t1(code: Code, model: TruncatedModel, sign: int) -> Code:
    _t1_margin_check(code, model)
    for g in _t1_sequence(model, sign):
        if g[0] == "tw":
            _, k, d = g
            if k not in set(code.word) and code.end not in (k, k + 1):
                continue
            code = _apply_seg_exchange(code, model, k, d)
        else:
            if _inf_exchange_inert(code):
                continue
            code = _apply_inf_exchange(code, model, g[1])
    return code


def apply(mc: MappingClassWord, code: Code, model: TruncatedModel) -> Code:
    """Image of a code under the mapping class word, normalized."""
    code = canonicalize(code, model)
    for g in mc.gens:
        kind = g[0]
        if kind == "phi":
            code = apply_phi(code, model)
        elif kind == "sigma":
            code = apply_sigma(code, model)
        elif kind == "t1":
            code = _apply_t1(code, model, g[1])
        elif kind == "tw":
            _, k, d = g
            if not model.is_segment(k) or k in (0, -1):
                raise OutOfWindowError(f"no block exchange across s{k}")
            code = _apply_seg_exchange(code, model, k, d)
        elif kind == "twinf":
            code = _apply_inf_exchange(code, model, g[1])
        else:
            raise RaylabError(f"unknown generator {g!r}")
    return code


def half_twist(k: int, hemisphere: str, model: TruncatedModel) -> MappingClassWord:
    """The exchange of the blocks adjacent across segment k, the left one
    passing through the named hemisphere."""
    if not model.is_segment(k) or k in (0, -1):
        raise OutOfWindowError(f"no block exchange across s{k}")
    d = 1 if hemisphere == NORTH else -1
    return MappingClassWord((("tw", k, d),))


def inf_exchange(hemisphere: str, d: int = 1) -> MappingClassWord:
    """The over/under-infinity exchange of the two flanking blocks."""
    if hemisphere == NORTH:
        return MappingClassWord((("twinf", d),))
    # the south corridor is the mirror of the north one
    return MappingClassWord((("sigma",), ("twinf", -d), ("sigma",)))
