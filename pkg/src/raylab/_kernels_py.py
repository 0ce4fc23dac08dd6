"""Pure Python kernels.

Same contract as the compiled module ``raylab._kernels``; used as the
fallback when the extension is unavailable (or when RAYLAB_PURE=1).

The four hot loops:

* ``cancel_adjacent``   stack pass deleting adjacent equal letters,
* ``sort_slots``        taut order of the crossings inside one segment,
* ``count_cross_pairs`` / ``count_self_pairs``   chord interleaving counts,
* ``exchange_pass``     one half-twist rewrite over a crossing word.
"""

from __future__ import annotations

import functools

BACKEND = "pure"


def cancel_adjacent(word):
    """Delete adjacent equal pairs until none remain (stack scan)."""
    out = []
    for x in word:
        if out and out[-1] == x:
            out.pop()
        else:
            out.append(x)
    return out


# ---------------------------------------------------------------------------
# Slot ordering.
#
# Two strands crossing the same segment are ordered by following both
# continuations into the north side; while they cross the same next segments
# nothing separates them, and at the first divergence the two targets are
# ranked by walking the hemisphere boundary from the shared segment.  A full
# tie on the north side falls through to the south side, then to the
# (arc id, index) tiebreak, which only fires for parallel copies.
#
# Itineraries are stored as suffixes of one concatenated text (per arc: the
# word plus a terminal letter, and the reversed word plus a terminal letter,
# each followed by a unique separator), so the shared-run length is a longest
# common prefix answered from prefix-doubling rank levels.


def prepare_rank_context(text, levels, itempos):
    """Convert arrays once so the comparator runs on plain Python ints."""
    text_l = list(text)
    levels_l = [list(lv) for lv in levels]
    itempos_l = list(itempos)
    return (text_l, levels_l, itempos_l, len(text_l))


def _lcp(levels, n, i, j):
    length = 0
    for lev in range(len(levels) - 1, -1, -1):
        step = 1 << lev
        if i + step <= n and j + step <= n:
            ranks = levels[lev]
            if ranks[i] == ranks[j]:
                i += step
                j += step
                length += step
    return length


def sort_slots(ctx, items, offn, offs, tiearc, tieidx, pos_cur, circle_len):
    """Return ``items`` (crossing ids) sorted by increasing position inside
    the segment, in the equator direction.

    The two continuations of each strand are read zipped (north element,
    south element, north, ...) and the pair is resolved at the first zipped
    divergence, i.e. at the nearer of the two divergences with the north side
    breaking ties.  The first-met target in the hemisphere walk takes the
    slot nearest the walk's start; each step of a shared run then flips the
    order once and the hemisphere alternation flips it back, so the side of
    the winning divergence alone fixes the direction.  Fully parallel strands
    (same code twice) alternate by arc with the crossing index parity.
    """
    text, levels, itempos, n = ctx

    def side_eval(o1, o2, north_side):
        """(lcp, result); result 0 on a full tie, else +1 iff o1's strand
        takes the higher slot according to this side."""
        length = _lcp(levels, n, o1, o2)
        t1 = text[o1 + length]
        t2 = text[o2 + length]
        p1 = itempos[t1]
        p2 = itempos[t2]
        if p1 < 0 and p2 < 0:
            return length, 0  # both hit their separators: identical reads
        if (p1 < 0) != (p2 < 0):
            raise AssertionError("itinerary ended inside a shared run")
        cur = pos_cur if length == 0 else itempos[text[o1 + length - 1]]
        h_north = north_side if length % 2 == 0 else not north_side
        if h_north:
            k1 = (p1 - cur) % circle_len
            k2 = (p2 - cur) % circle_len
        else:
            k1 = (cur - p1) % circle_len
            k2 = (cur - p2) % circle_len
        first1 = k1 < k2
        higher1 = first1 if north_side else not first1
        return length, (1 if higher1 else -1)

    def cmp(a, b):
        ln, rn = side_eval(offn[a], offn[b], True)
        ls, rs = side_eval(offs[a], offs[b], False)
        if rn == 0 and rs == 0:
            # fully parallel copies: anti-alignment alternates with the index
            flip = tieidx[a] & 1
            return 1 if (tiearc[a] > tiearc[b]) != bool(flip) else -1
        if rn == 0:
            return rs
        if rs == 0:
            return rn
        return rn if ln <= ls else rs

    return sorted(items, key=functools.cmp_to_key(cmp))


# ---------------------------------------------------------------------------
# Interleaving counts.


class _Fenwick:
    __slots__ = ("n", "t")

    def __init__(self, n):
        self.n = n
        self.t = [0] * (n + 1)

    def add(self, i, v):
        i += 1
        while i <= self.n:
            self.t[i] += v
            i += i & -i

    def prefix(self, i):
        s = 0
        while i > 0:
            s += self.t[i]
            i -= i & -i
        return s

    def range(self, lo, hi):
        if hi <= lo:
            return 0
        return self.prefix(hi) - self.prefix(lo)


def count_cross_pairs(x_intervals, y_intervals):
    """Crossings between two chord families on the cut-open circle.

    A pair counts iff exactly one endpoint of one chord lies strictly inside
    the other.  Chords meeting at a shared coordinate (a shared marked point)
    never count: closings at one coordinate are removed as a batch before
    counting.
    """
    coords = sorted(
        {c for (lo, hi) in x_intervals for c in (lo, hi)}
        | {c for (lo, hi) in y_intervals for c in (lo, hi)}
    )
    rank = {c: i for i, c in enumerate(coords)}
    ncoord = len(coords)
    opens = {}
    closes = {}
    for gi, grp in ((0, x_intervals), (1, y_intervals)):
        for (lo, hi) in grp:
            opens.setdefault(rank[lo], []).append((gi, rank[lo]))
            closes.setdefault(rank[hi], []).append((gi, rank[lo], rank[hi]))
    fen = (_Fenwick(ncoord), _Fenwick(ncoord))
    total = 0
    for c in range(ncoord):
        batch = closes.get(c, ())
        for (gi, lo, hi) in batch:
            fen[gi].add(lo, -1)
        for (gi, lo, hi) in batch:
            total += fen[1 - gi].range(lo + 1, hi)
        for (gi, lo) in opens.get(c, ()):
            fen[gi].add(lo, 1)
    return total


def count_self_pairs(intervals):
    """Self-crossings of one chord family (same conventions as above)."""
    coords = sorted({c for (lo, hi) in intervals for c in (lo, hi)})
    rank = {c: i for i, c in enumerate(coords)}
    ncoord = len(coords)
    opens = {}
    closes = {}
    for (lo, hi) in intervals:
        opens.setdefault(rank[lo], []).append(rank[lo])
        closes.setdefault(rank[hi], []).append((rank[lo], rank[hi]))
    fen = _Fenwick(ncoord)
    total = 0
    for c in range(ncoord):
        batch = closes.get(c, ())
        for (lo, hi) in batch:
            fen.add(lo, -1)
        for (lo, hi) in batch:
            total += fen.range(lo + 1, hi)
        for lo in opens.get(c, ()):
            fen.add(lo, 1)
    return total


# ---------------------------------------------------------------------------
# Half-twist rewrite.


def exchange_pass(word, wcls, start_cls, end_cls, start_hemi, emit):
    """Rewrite one crossing word through a single block exchange.

    ``wcls`` classifies each letter for the exchange's lens, ``start_cls`` /
    ``end_cls`` classify the two endpoint attachments, ``start_hemi`` is 0
    for a north start and 1 for south, and ``emit[h][u][v]`` lists the new
    letters picked up by an excursion in hemisphere ``h`` from an attachment
    of class ``u`` to one of class ``v``.
    """
    n = len(word)
    out = []
    ucls = start_cls
    for j in range(n + 1):
        vcls = wcls[j] if j < n else end_cls
        h = start_hemi ^ (j & 1)
        e = emit[h][ucls][vcls]
        if e:
            out.extend(e)
        if j < n:
            out.append(word[j])
        ucls = vcls
    return out
