"""Finite truncation of the equator picture.

The sphere carries a distinguished circle (the equator) through the marked
point ``inf`` and every Cantor block.  A window of size M keeps the blocks
b_k for k in [-M, M] minus 0, one marked point per block, and the open
segments s_n for n in [-M, M-1] between them.  The far side of the circle is
a single interval ``I`` that no code ever crosses.

Cyclic order along the equator:

    inf, s_0, b_1, s_1, b_2, ..., s_{M-1}, b_M, I,
    b_{-M}, s_{-M}, b_{-M+1}, ..., s_{-2}, b_{-1}, s_{-1}, inf

The northern hemisphere is the disk on the left of this walk, the southern
the disk on its right.  Everything downstream (codes, taut diagrams, twists)
works with integer circle positions assigned here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import OutOfWindowError, WindowError

INF = "inf"  # marked point at infinity
FAR = "I"  # the far interval, never crossed


@dataclass(frozen=True)
class TruncatedModel:
    """Immutable window of size M >= 2; all queries are pure."""

    window: int

    @property
    def circle_len(self) -> int:
        return 4 * self.window + 2

    # -- membership ------------------------------------------------------

    def is_segment(self, n: int) -> bool:
        return -self.window <= n <= self.window - 1

    def is_block(self, k: int) -> bool:
        return k != 0 and -self.window <= k <= self.window

    def check_segment(self, n: int) -> None:
        if not self.is_segment(n):
            raise OutOfWindowError(f"segment s{n} outside window M={self.window}")

    def check_block(self, k: int) -> None:
        if not self.is_block(k):
            raise OutOfWindowError(f"block b{k} outside window M={self.window}")

    # -- circle positions --------------------------------------------------

    def pos_inf(self) -> int:
        return 0

    def pos_far(self) -> int:
        return 2 * self.window + 1

    def pos_segment(self, n: int) -> int:
        self.check_segment(n)
        return 2 * n + 1 if n >= 0 else 4 * self.window + 3 + 2 * n

    def pos_block(self, k: int) -> int:
        self.check_block(k)
        return 2 * k if k >= 1 else 4 * self.window + 2 + 2 * k

    def cyclic_items(self):
        """All marked items in equator order starting at inf."""
        M = self.window
        items = [(INF, None)]
        for k in range(1, M + 1):
            items.append(("s", k - 1))
            items.append(("b", k))
        items.append((FAR, None))
        for k in range(-M, 0):
            items.append(("b", k))
            items.append(("s", k))
        return items

    # -- adjacency ---------------------------------------------------------

    def segment_ends(self, n: int):
        """Marked points adjacent to s_n, as (left, right) in cyclic order."""
        self.check_segment(n)
        if n == 0:
            return (INF, 1)
        if n == -1:
            return (-1, INF)
        return (n, n + 1)

    def segments_at_block(self, k: int):
        """Segment indices adjacent to block k (one at the window edges)."""
        self.check_block(k)
        out = []
        if self.is_segment(k - 1):
            out.append(k - 1)
        if self.is_segment(k):
            out.append(k)
        return tuple(out)

    SEGMENTS_AT_INF = (0, -1)

    def segments_at_inf(self):
        return self.SEGMENTS_AT_INF


def build_model(window: int) -> TruncatedModel:
    if window < 2:
        raise WindowError(f"window must be >= 2, got {window}")
    return TruncatedModel(window)


def endpoint_block_of_p(n: int) -> int:
    """Block housing the marked Cantor point p_n: b_{n+1} for n >= 0, b_n below."""
    return n + 1 if n >= 0 else n
