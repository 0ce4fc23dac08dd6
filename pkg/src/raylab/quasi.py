"""Copy counting on explicit paths, the same-orientation predicate, and the
non-reversibility checks.

``count_copies`` packs certified translates of a window into a path, index
intervals with pairwise disjoint interiors.  The default matcher certifies
exactly the forward translates along the standard axis (images under
nonnegative powers of the translation) and refuses everything else, the safe
direction: it never overcounts.

``w2_check`` is the heart of non-reversibility: no mapping class can drop
the prefix potential by exactly 2 between axis vertices two steps apart,
because the positive-intersection count of the image pair would have to be
simultaneously 0 (invariance) and >= 1 (the potential-gap bound).
"""

from __future__ import annotations

from dataclasses import dataclass

from .axes import a_value, alpha, verify_path
from .codes import Code
from .errors import PreconditionError, RaylabError
from .mcg import MappingClassWord, apply, invert, named
from .model import TruncatedModel
from .tight import are_disjoint, signed_intersections


def axis_vertex(model: TruncatedModel, k: int) -> Code:
    """Vertex k of the full translation axis, negative indices included."""
    if k >= 0:
        return alpha(model, k)
    h_inv = invert(named("h"))
    code = alpha(model, 0)
    for _ in range(-k):
        code = apply(h_inv, code, model)
    return code


def _axis_index(model, code: Code):
    """Index k with code == alpha_k, or None."""
    i = a_value(code)
    if model.window >= i + 2 and alpha(model, i) == code:
        return i
    return None


@dataclass(frozen=True)
class CopyReport:
    count: int
    certified: tuple
    skipped: tuple
    undecided: tuple


def default_matcher(model, candidate, w):
    """'copy' | 'skip' | 'undecided' for a candidate subpath against w.

    Certifies candidates that are forward axis translates of an axis window
    (both strictly ascending alpha runs, candidate based at or beyond w);
    refutes by intersection-profile mismatch; anything else is skipped
    unrecognized (sound undercounting).
    """
    cand_idx = [_axis_index(model, c) for c in candidate]
    w_idx = [_axis_index(model, c) for c in w]

    def ascending(run):
        return all(v is not None for v in run) and all(
            b == a + 1 for a, b in zip(run, run[1:])
        )

    if ascending(cand_idx) and ascending(w_idx):
        return "copy" if cand_idx[0] >= w_idx[0] else "skip"
    # refute on an invariant mismatch where affordable
    limit = 6
    if len(w) <= limit:
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if signed_intersections(model, candidate[i], candidate[j]) != (
                    signed_intersections(model, w[i], w[j])
                ):
                    return "skip"
        return "undecided"
    return "skip"


def count_copies(model, path, w, matcher=None, return_report=False):
    """Maximal number of interior-disjoint certified copies of w on path."""
    path = list(path)
    w = list(w)
    if len(w) < 2:
        raise RaylabError("the window w needs at least 2 vertices")
    matcher = matcher or default_matcher
    span = len(w) - 1
    certified, skipped, undecided = [], [], []
    for i in range(0, len(path) - span):
        verdict = matcher(model, path[i : i + span + 1], w)
        if verdict == "copy":
            certified.append((i, i + span))
        elif verdict == "undecided":
            undecided.append((i, i + span))
        else:
            skipped.append((i, i + span))
    count = 0
    last_end = None
    for (lo, hi) in certified:
        if last_end is None or lo >= last_end:
            count += 1
            last_end = hi
    if return_report:
        return CopyReport(count, tuple(certified), tuple(skipped), tuple(undecided))
    return count


# ---------------------------------------------------------------------------
# Same-orientation predicate.


def _certified_ub(model, x: Code, y: Code, ambient_index):
    """A certified upper bound for the graph distance, or None."""
    if x == y:
        return 0
    ix, iy = ambient_index.get(x), ambient_index.get(y)
    if ix is not None and iy is not None:
        return abs(ix - iy)
    if are_disjoint(model, x, y):
        return 1
    return None


def same_orientation(model, g1, g2, ambient, C: int) -> bool:
    """True iff g2 runs along the ambient geodesic the same way as g1.

    g1 must be a contiguous subsegment of ambient; both segments need equal
    length >= 3C, starts within C, and g2 inside the C-neighborhood of
    ambient, all certified.  Then the test: every ambient vertex certified
    within C of g2's end lies strictly on the far side of g1's start.
    """
    g1, g2, ambient = list(g1), list(g2), list(ambient)
    if C < 1:
        raise PreconditionError("C must be >= 1")
    if len(g1) != len(g2):
        raise PreconditionError("segments must have equal length")
    if len(g1) - 1 < 3 * C:
        raise PreconditionError(f"segments must have length >= 3C = {3 * C}")
    ambient_index = {c: i for i, c in enumerate(ambient)}
    try:
        start = ambient.index(g1[0])
    except ValueError:
        raise PreconditionError("g1 must lie on the ambient geodesic") from None
    if ambient[start : start + len(g1)] != g1:
        raise PreconditionError("g1 must be a contiguous ambient subsegment")
    d_starts = _certified_ub(model, g1[0], g2[0], ambient_index)
    if d_starts is None or d_starts > C:
        raise PreconditionError("cannot certify d(start, start) <= C")
    for v in g2:
        if not any(
            (u := _certified_ub(model, v, w, ambient_index)) is not None and u <= C
            for w in ambient
        ):
            raise PreconditionError("cannot certify g2 inside the C-neighborhood")
    p1 = ambient_index[g1[0]]
    q1 = ambient_index[g1[-1]]
    side = 1 if q1 > p1 else -1
    near_end = [
        i
        for i, w in enumerate(ambient)
        if (u := _certified_ub(model, w, g2[-1], ambient_index)) is not None and u <= C
    ]
    if not near_end:
        raise PreconditionError("cannot certify any ambient vertex near g2's end")
    return all((i - p1) * side > 0 for i in near_end)


def w2_check(model, g: MappingClassWord, i: int) -> bool:
    """True iff A(g alpha_{i+2}) != A(g alpha_i) - 2; predicted always true."""
    hi = a_value(apply(g, alpha(model, i + 2), model))
    lo = a_value(apply(g, alpha(model, i), model))
    return hi != lo - 2


__all__ = [
    "CopyReport",
    "axis_vertex",
    "count_copies",
    "default_matcher",
    "same_orientation",
    "w2_check",
    "verify_path",
]
