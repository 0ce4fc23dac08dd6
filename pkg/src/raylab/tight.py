"""Canonical minimal-position diagrams and intersection pairings.

A family of reduced codes is realized simultaneously: every crossing becomes
a slot on its segment, the slots of one segment are linearly ordered by the
itinerary comparison rule (see ``kernels.sort_slots``), and each excursion
becomes a chord of its hemisphere disk attached at slot or marked-point
coordinates on the equator circle.  Two chords of one hemisphere cross iff
their attachment points interleave in the circle order; chords meeting at a
shared marked point never cross.  Crossing counts, signs, disjointness and
simplicity all read off this diagram.

``brute_min_crossings`` is the independent oracle: it enumerates all slot
orders per segment outright (keeping every arc at its own minimal
self-crossing count) and takes the true minimum of the interleaving count,
with no shared machinery beyond the circle positions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from . import kernels
from .codes import NORTH, Code, normalize
from .errors import NonSimpleError, OracleSizeError, RaylabError
from .model import INF, TruncatedModel

# Calibration of the crossing sign: the convention below (exit point of the
# second arc inside the positive boundary arc of the first) is fixed so that
# the standard ray pair (alpha_0, alpha_2) has exactly one positive crossing
# in this order.  Flip here, nowhere else, if the frame convention changes.
SIGN_FLIP = -1

_N = 0
_S = 1


def _hemis(code: Code):
    h0 = _N if code.start == NORTH else _S
    return h0


@dataclass(frozen=True)
class _Chord:
    arc: int
    exc: int
    hemi: int
    cin: int
    cout: int

    @property
    def lo(self):
        return self.cin if self.cin < self.cout else self.cout

    @property
    def hi(self):
        return self.cout if self.cin < self.cout else self.cin


def _rank_levels(text: np.ndarray):
    """Prefix-doubling rank levels; level k ranks substrings of length 2**k."""
    n = len(text)
    order = np.argsort(text, kind="stable")
    r = np.empty(n, dtype=np.int64)
    st = text[order]
    r[order] = np.cumsum(np.concatenate(([0], (st[1:] != st[:-1]).astype(np.int64))))
    levels = [r]
    shift = 1
    while int(levels[-1].max()) < n - 1 and shift < n:
        prev = levels[-1]
        key2 = np.full(n, -1, dtype=np.int64)
        key2[: n - shift] = prev[shift:]
        idx = np.lexsort((key2, prev))
        pk = prev[idx]
        sk = key2[idx]
        diff = np.concatenate(
            ([0], ((pk[1:] != pk[:-1]) | (sk[1:] != sk[:-1])).astype(np.int64))
        )
        newr = np.empty(n, dtype=np.int64)
        newr[idx] = np.cumsum(diff)
        levels.append(newr)
        shift <<= 1
    return levels


class TightDiagram:
    """Simultaneous taut realization of a family of codes."""

    def __init__(self, model: TruncatedModel, codes):
        self.model = model
        self.codes = list(codes)
        for c in self.codes:
            # reduced in the given traversal; loops may run either way
            if normalize(c, model) != c:
                raise RaylabError(f"realize expects reduced codes, got {c}")
        self._build()

    # -- construction ----------------------------------------------------

    def _build(self):
        model = self.model
        M = model.window
        L = model.circle_len

        # alphabet: segments, terminal letters per marked point, separators
        def seg_letter(n):
            return n + M  # 0 .. 2M-1

        TERM_INF = 2 * M
        def term_block(e):
            return 2 * M + 1 + (e + M)  # uses 2M+1 .. 4M+1

        base_sep = 4 * M + 2
        itempos = [-1] * (base_sep + 2 * len(self.codes) + 1)
        for n in range(-M, M):
            itempos[seg_letter(n)] = model.pos_segment(n)
        itempos[TERM_INF] = model.pos_inf()
        for e in range(-M, M + 1):
            if e != 0:
                itempos[term_block(e)] = model.pos_block(e)

        text = []
        fwd_off = []
        bwd_off = []
        sep = base_sep
        for code in self.codes:
            letters = [seg_letter(n) for n in code.word]
            term_end = TERM_INF if code.end is None else term_block(code.end)
            fwd_off.append(len(text))
            text.extend(letters)
            text.append(term_end)
            text.append(sep)
            sep += 1
            bwd_off.append(len(text))
            text.extend(reversed(letters))
            text.append(TERM_INF)
            text.append(sep)
            sep += 1

        text_np = np.asarray(text, dtype=np.int64)
        levels = _rank_levels(text_np)
        ctx = kernels.prepare_rank_context(text_np, levels, itempos)

        # crossings enumerated with integer ids, grouped by segment
        by_segment = {}
        offn, offs, tiearc, tieidx, owner = [], [], [], [], []
        for a, code in enumerate(self.codes):
            h0 = _hemis(code)
            n = len(code.word)
            for i, seg in enumerate(code.word):
                cid = len(offn)
                h_after = h0 ^ ((i + 1) & 1)
                fwd = fwd_off[a] + i + 1
                bwd = bwd_off[a] + (n - i)
                if h_after == _N:
                    offn.append(fwd)
                    offs.append(bwd)
                else:
                    offn.append(bwd)
                    offs.append(fwd)
                tiearc.append(a)
                tieidx.append(i)
                owner.append((a, i))
                by_segment.setdefault(seg, []).append(cid)

        self.slots = {}
        self.slotrank = {}
        for seg, items in by_segment.items():
            ordered = kernels.sort_slots(
                ctx, items, offn, offs, tiearc, tieidx, model.pos_segment(seg), L
            )
            self.slots[seg] = [owner[c] for c in ordered]
            for r, c in enumerate(ordered):
                self.slotrank[owner[c]] = r

        # linear coordinates on the circle cut inside the far interval
        total = sum(len(c.word) for c in self.codes)
        stride = total + 2
        pos_far = model.pos_far()

        def lin(pos):
            return ((pos - pos_far - 1) % L) * stride

        self._lin = lin
        self._stride = stride
        pos_inf = lin(model.pos_inf())

        self.chords = []
        for a, code in enumerate(self.codes):
            h0 = _hemis(code)
            n = len(code.word)
            coords = [pos_inf]
            for i, seg in enumerate(code.word):
                coords.append(lin(model.pos_segment(seg)) + self.slotrank[(a, i)] + 1)
            coords.append(
                pos_inf if code.end is None else lin(model.pos_block(code.end))
            )
            arc_chords = []
            for j in range(n + 1):
                cin, cout = coords[j], coords[j + 1]
                if cin == cout:
                    continue  # the trivial loop chord, attached twice at inf
                arc_chords.append(_Chord(a, j, h0 ^ (j & 1), cin, cout))
            self.chords.append(arc_chords)

    # -- queries -----------------------------------------------------------

    def slot_order(self, seg):
        return list(self.slots.get(seg, ()))

    def _intervals(self, arc, hemi):
        return [(c.lo, c.hi) for c in self.chords[arc] if c.hemi == hemi]

    def count_crossings(self, i, j) -> int:
        """Geometric crossings between arcs i and j."""
        total = 0
        for h in (_N, _S):
            total += kernels.count_cross_pairs(
                self._intervals(i, h), self._intervals(j, h)
            )
        return total

    def self_crossings(self, i) -> int:
        total = 0
        for h in (_N, _S):
            total += kernels.count_self_pairs(self._intervals(i, h))
        return total

    def signed_counts(self, i, j):
        """(positive, negative) crossings of the ordered pair (i, j)."""
        pos = neg = 0
        for h in (_N, _S):
            xs = [c for c in self.chords[i] if c.hemi == h]
            ys = [c for c in self.chords[j] if c.hemi == h]
            if not xs or not ys:
                continue
            y_in = np.array([c.cin for c in ys], dtype=np.int64)
            y_out = np.array([c.cout for c in ys], dtype=np.int64)
            for x in xs:
                inside_in = _in_open(y_in, x.lo, x.hi)
                inside_out = _in_open(y_out, x.lo, x.hi)
                shared = (
                    (y_in == x.cin)
                    | (y_in == x.cout)
                    | (y_out == x.cin)
                    | (y_out == x.cout)
                )
                crossing = (inside_in != inside_out) & ~shared
                if not crossing.any():
                    continue
                exit_pos = _in_positive_arc(y_out, x.cin, x.cout, h)
                plus = crossing & exit_pos
                p = int(np.count_nonzero(plus))
                n = int(np.count_nonzero(crossing)) - p
                if SIGN_FLIP < 0:
                    p, n = n, p
                pos += p
                neg += n
        return pos, neg

    def crossing_points(self, i, j):
        """Explicit crossings between arcs i and j, as records
        (pos_i, pos_j, sign) with pos = (excursion index, rank along it).

        Ranks along an excursion are reliable when the other arc is simple
        (its chords are pairwise disjoint).  Quadratic in the chord counts.
        """
        ys_by_h = {h: [c for c in self.chords[j] if c.hemi == h] for h in (_N, _S)}
        raw = []
        for x in self.chords[i]:
            crossers = []
            for y in ys_by_h[x.hemi]:
                if y.cin in (x.cin, x.cout) or y.cout in (x.cin, x.cout):
                    continue
                if _in_open_scalar(y.cin, x.lo, x.hi) != _in_open_scalar(
                    y.cout, x.lo, x.hi
                ):
                    crossers.append(y)
            crossers.sort(key=_along_key(x))
            for r, y in enumerate(crossers):
                sgn = 1 if _in_positive_arc_scalar(y.cout, x.cin, x.cout, x.hemi) else -1
                raw.append((x, r, y, sgn * SIGN_FLIP))
        # rank each crossing along the j-arc's excursions as well
        by_y = {}
        for rec in raw:
            by_y.setdefault(id(rec[2]), []).append(rec)
        out = []
        for recs in by_y.values():
            y = recs[0][2]
            key = _along_key(y)
            order = sorted(range(len(recs)), key=lambda t: key(recs[t][0]))
            for rank_j, t in enumerate(order):
                x, rank_i, _, sgn = recs[t]
                out.append(((x.exc, rank_i), (y.exc, rank_j), sgn))
        out.sort()
        return out


def _in_open(vals, lo, hi):
    return (vals > lo) & (vals < hi)


def _in_open_scalar(v, lo, hi):
    return lo < v < hi


def _in_positive_arc(vals, cin, cout, hemi):
    """Membership in the open boundary arc from cin to cout walked in the
    hemisphere's positive direction (increasing coordinate in the north)."""
    if hemi == _S:
        cin, cout = cout, cin
    if cin < cout:
        return (vals > cin) & (vals < cout)
    return (vals > cin) | (vals < cout)


def _in_positive_arc_scalar(v, cin, cout, hemi):
    if hemi == _S:
        cin, cout = cout, cin
    if cin < cout:
        return cin < v < cout
    return v > cin or v < cout


def _along_key(x):
    """Sort key ordering disjoint crossing chords along chord x from x.cin."""
    import functools

    def before(d1, d2):
        u_in = _in_open_scalar(x.cin, d1.lo, d1.hi)
        d2_in = _in_open_scalar(d2.lo, d1.lo, d1.hi)
        return d2_in != u_in

    def cmp(d1, d2):
        if d1 is d2:
            return 0
        return -1 if before(d1, d2) else 1

    return functools.cmp_to_key(cmp)


# ---------------------------------------------------------------------------
# Public operations.


def realize(model: TruncatedModel, codes) -> TightDiagram:
    return TightDiagram(model, codes)


def geometric_intersection(model: TruncatedModel, x: Code, y: Code) -> int:
    return realize(model, [x, y]).count_crossings(0, 1)


def positive_intersection(model: TruncatedModel, x: Code, y: Code) -> int:
    pos, _ = realize(model, [x, y]).signed_counts(0, 1)
    return pos


def signed_intersections(model: TruncatedModel, x: Code, y: Code):
    return realize(model, [x, y]).signed_counts(0, 1)


def are_disjoint(model: TruncatedModel, x: Code, y: Code) -> bool:
    return geometric_intersection(model, x, y) == 0


def is_simple(model: TruncatedModel, code: Code) -> bool:
    return realize(model, [code]).self_crossings(0) == 0


def loop_sides(model: TruncatedModel, code: Code):
    """Partition of the window blocks by the two sides of a simple loop.

    The first set collects the blocks seen on the side entered just right of
    infinity; essential means both sets are nonempty.
    """
    if not code.is_loop:
        raise RaylabError("loop_sides expects a loop")
    if not is_simple(model, code):
        raise NonSimpleError(f"loop is not simple: {code}")
    counts = {}
    for n in code.word:
        counts[n] = counts.get(n, 0) + 1
    side = 0
    sides = {}
    M = model.window
    for k in range(1, M + 1):
        side ^= counts.get(k - 1, 0) & 1
        sides[k] = side
    for k in range(-M, 0):
        if k > -M:
            side ^= counts.get(k - 1, 0) & 1
        sides[k] = side
    side0 = frozenset(k for k, s in sides.items() if s == 0)
    side1 = frozenset(k for k, s in sides.items() if s == 1)
    return side0, side1


def is_essential(model: TruncatedModel, code: Code) -> bool:
    a, b = loop_sides(model, code)
    return bool(a) and bool(b)


# ---------------------------------------------------------------------------
# Independent oracle.

ORACLE_LETTER_BOUND = 14
_ORACLE_NODE_BUDGET = 2_000_000


def _oracle_chords(model, codes):
    """Chords with symbolic slot endpoints: ('pt', lin) or ('slot', seg, a, i)."""
    pos_far = model.pos_far()
    L = model.circle_len
    stride = sum(len(c.word) for c in codes) + 2

    def lin(pos):
        return ((pos - pos_far - 1) % L) * stride

    chords = []
    by_segment = {}
    for a, code in enumerate(codes):
        h0 = _hemis(code)
        n = len(code.word)
        atts = [("pt", lin(model.pos_inf()))]
        for i, seg in enumerate(code.word):
            atts.append(("slot", seg, a, i))
            by_segment.setdefault(seg, []).append((a, i))
        atts.append(
            ("pt", lin(model.pos_inf()))
            if code.end is None
            else ("pt", lin(model.pos_block(code.end)))
        )
        for j in range(n + 1):
            u, v = atts[j], atts[j + 1]
            if u == v and u[0] == "pt":
                continue
            chords.append((a, h0 ^ (j & 1), u, v))
    return chords, by_segment, lin


def _brute_search(model, codes, target, self_caps):
    """Minimum of a crossing count over all per-segment slot orders.

    ``target`` is "cross" (crossings between arcs 0 and 1) or ("self", a).
    ``self_caps`` maps arc ids to a maximum allowed self-crossing count;
    assignments exceeding a cap are discarded.  Returns None when no
    assignment satisfies the caps.
    """
    tracked = set(self_caps)
    if target != "cross":
        tracked.add(target[1])
    chords, by_segment, lin = _oracle_chords(model, codes)
    segs = sorted(by_segment, key=lambda s: len(by_segment[s]))
    seg_depth = {s: d for d, s in enumerate(segs)}

    def depth_of(att):
        return -1 if att[0] == "pt" else seg_depth[att[1]]

    # bucket chord pairs by the first depth at which both are positioned
    by_depth = {}
    for i in range(len(chords)):
        ai, hi_, ui, vi = chords[i]
        for j in range(i + 1, len(chords)):
            aj, hj, uj, vj = chords[j]
            if hi_ != hj:
                continue
            if ai == aj:
                if ai not in tracked:
                    continue
                key = ("self", ai)
            else:
                key = "cross"
            d = max(depth_of(ui), depth_of(vi), depth_of(uj), depth_of(vj))
            by_depth.setdefault(d, []).append((key, (ui, vi), (uj, vj)))

    ranks = {}

    def coord(att):
        if att[0] == "pt":
            return att[1]
        _, seg, a, i = att
        return lin(model.pos_segment(seg)) + ranks[(a, i)] + 1

    def pair_crosses(c1, c2):
        u1, v1 = coord(c1[0]), coord(c1[1])
        u2, v2 = coord(c2[0]), coord(c2[1])
        if u1 == u2 or u1 == v2 or v1 == u2 or v1 == v2:
            return False  # shared marked point
        lo, hi = (u1, v1) if u1 < v1 else (v1, u1)
        return (lo < u2 < hi) != (lo < v2 < hi)

    def tally(depth, counts):
        out = dict(counts)
        for (key, c1, c2) in by_depth.get(depth, ()):
            if pair_crosses(c1, c2):
                out[key] = out.get(key, 0) + 1
        return out

    state = {"best": None, "nodes": 0}

    def admissible(counts):
        for a, cap in self_caps.items():
            if counts.get(("self", a), 0) > cap:
                return False
        # counts only accumulate, so an assignment already at the incumbent
        # minimum cannot improve on it
        best = state["best"]
        return best is None or counts.get(target, 0) < best

    def dfs(depth, counts):
        state["nodes"] += 1
        if state["nodes"] > _ORACLE_NODE_BUDGET:
            raise OracleSizeError("oracle node budget exceeded")
        if depth == len(segs):
            value = counts.get(target, 0)
            if state["best"] is None or value < state["best"]:
                state["best"] = value
            return
        items = by_segment[segs[depth]]
        for perm in itertools.permutations(range(len(items))):
            for r, cid in zip(perm, items):
                ranks[cid] = r
            merged = tally(depth, counts)
            if admissible(merged):
                dfs(depth + 1, merged)
        for cid in items:
            ranks.pop(cid, None)

    init = tally(-1, {})
    for a, cap in self_caps.items():
        if init.get(("self", a), 0) > cap:
            return None
    dfs(0, init)
    return state["best"]


def _brute_min_self(model, code) -> int:
    got = _brute_search(model, [code], ("self", 0), {})
    assert got is not None
    return got


def brute_min_crossings(model: TruncatedModel, x: Code, y: Code) -> int:
    """Exhaustive minimal crossing count between two codes.

    Enumerates every per-segment slot order that keeps each arc at its own
    minimal self-crossing count and returns the least interleaving count.
    """
    if len(x.word) + len(y.word) > ORACLE_LETTER_BOUND:
        raise OracleSizeError(
            f"combined word length {len(x.word) + len(y.word)} exceeds "
            f"{ORACLE_LETTER_BOUND}"
        )
    mx = _brute_min_self(model, x)
    my = _brute_min_self(model, y)
    best = _brute_search(model, [x, y], "cross", {0: mx, 1: my})
    if best is None:
        raise AssertionError("no order satisfies the self-minimality constraints")
    return best


def brute_is_simple(model: TruncatedModel, code: Code) -> bool:
    return _brute_min_self(model, code) == 0
