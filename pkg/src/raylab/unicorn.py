"""The loop graph: unicorn arcs and paths, slimness experiments, and the
comparison map from the ray graph.

A unicorn arc of an ordered pair of oriented loops is the concatenation of an
initial piece of the first with the reversed initial piece of the second, cut
at one of their crossings, kept when the concatenation is embedded.  Ordered
along the second loop these interpolate between the two inputs, and
consecutive entries are disjoint, giving a path in the loop graph.

``f_map`` sends a ray to the loop tracing the ray out, encircling its
endpoint block through the two adjacent segments, and tracing back; the
result is disjoint from the ray.  ``qi_consistency`` checks the falsifiable
transfer bound between ray-graph distance and unicorn path length in the
loop graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .axes import certify_distance
from .codes import Code, canonical_loop, normalize
from .errors import NonSimpleError, PreconditionError, RaylabError
from .model import TruncatedModel
from .tight import are_disjoint, is_essential, is_simple, realize


def _check_loop_vertex(model, code, name):
    if not code.is_loop:
        raise RaylabError(f"{name} must be a loop, got {code}")
    if not is_simple(model, code):
        raise NonSimpleError(f"{name} is not simple: {code}")
    if not is_essential(model, code):
        raise RaylabError(f"{name} is not essential: {code}")


def _crossings_ordered_along_b(model, a: Code, b: Code):
    """Crossing records ((exc_a, rank_a), (exc_b, rank_b)) sorted along b."""
    diagram = realize(model, [a, b])
    pts = diagram.crossing_points(0, 1)
    return sorted(pts, key=lambda rec: rec[1])


@dataclass(frozen=True)
class UnicornPath:
    """Vertices of the path (canonical loops) plus oriented representatives
    of every entry in the traversal directions inherited from the inputs."""

    vertices: tuple
    oriented: tuple

    def __len__(self):
        return len(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def unicorn_arcs(model: TruncatedModel, a: Code, b: Code):
    """Unicorn arcs of the oriented pair (a, b), normalized, in path order;
    also returns the oriented (un-reoriented) forms.

    Orientation is the stored traversal of each input code.
    """
    _check_loop_vertex(model, a, "a")
    _check_loop_vertex(model, b, "b")
    if canonical_loop(a, model) == canonical_loop(b, model):
        raise RaylabError("unicorn arcs need two distinct loops")
    pts = _crossings_ordered_along_b(model, a, b)
    kept = []
    for (pa, pb, _sign) in pts:
        dominated = any(qa < pa and qb < pb for (qa, qb, _s) in pts)
        if dominated:
            continue
        exc_a, _ = pa
        exc_b, _ = pb
        if a.hemisphere(exc_a) != b.hemisphere(exc_b):
            raise AssertionError("crossing strands must share a hemisphere")
        word = a.word[:exc_a] + tuple(reversed(b.word[:exc_b]))
        kept.append(Code(a.start, word, None))
    oriented = [normalize(c, model) for c in kept]
    vertices = [canonical_loop(c, model) for c in kept]
    return vertices, oriented


def unicorn_path(model: TruncatedModel, a: Code, b: Code) -> UnicornPath:
    """The unicorn path from a to b; consecutive entries are disjoint."""
    ca, cb = canonical_loop(a, model), canonical_loop(b, model)
    if ca == cb:
        raise RaylabError("unicorn path needs two distinct loops")
    vertices, oriented = unicorn_arcs(model, a, b)
    return UnicornPath(
        vertices=(ca, *vertices, cb),
        oriented=(normalize(a, model), *oriented, normalize(b, model)),
    )


def unicorn_path_length(model: TruncatedModel, a: Code, b: Code) -> int:
    """Length of the unicorn path without materializing the arc codes."""
    if canonical_loop(a, model) == canonical_loop(b, model):
        return 0
    _check_loop_vertex(model, a, "a")
    _check_loop_vertex(model, b, "b")
    pts = _crossings_ordered_along_b(model, a, b)
    if not pts:
        return 1
    kept = 0
    best_b = None
    for (_pa, pb, _s) in sorted(pts):
        if best_b is None or pb < best_b:
            kept += 1  # nothing strictly earlier on both arcs
            best_b = pb
    return kept + 1


def _code_key(c: Code):
    return (c.start, c.word, c.end is None, c.end or 0)


def _gap01(model, x, y, cache):
    key = (x, y) if _code_key(x) <= _code_key(y) else (y, x)
    if key not in cache:
        if x == y:
            cache[key] = 0
        elif are_disjoint(model, x, y):
            cache[key] = 1
        else:
            cache[key] = 2
    return cache[key]


def slim_gap(model: TruncatedModel, a: Code, b: Code, d: Code) -> int:
    """Max over the a-b unicorn path of the min 0/1/2-distance to the union
    of the a-d and d-b unicorn paths; 1-slimness predicts <= 1."""
    main = unicorn_path(model, a, b)
    side = unicorn_path(model, a, d).vertices + unicorn_path(model, d, b).vertices
    side = list(dict.fromkeys(side))
    cache = {}
    gap = 0
    for v in main.vertices:
        best = min(_gap01(model, v, w, cache) for w in side)
        gap = max(gap, best)
        if gap >= 2:
            break
    return gap


def subpath_dichotomy_check(model: TruncatedModel, a: Code, b: Code, i: int, j: int) -> bool:
    """True iff the unicorn path of (path[i], path[j]) with the inherited
    orientations is a contiguous subpath, or j = i + 2 with disjoint ends."""
    path = unicorn_path(model, a, b)
    n = path.length
    if not (0 <= i <= j <= n):
        raise IndexError(f"need 0 <= i <= j <= {n}")
    if i == j:
        return True
    gi, gj = path.oriented[i], path.oriented[j]
    if canonical_loop(gi, model) == canonical_loop(gj, model):
        return True
    sub = unicorn_path(model, gi, gj)
    if sub.vertices == path.vertices[i : j + 1]:
        return True
    return j == i + 2 and are_disjoint(model, path.vertices[i], path.vertices[j])


def f_map(model: TruncatedModel, x: Code) -> Code:
    """Canonical loop disjoint from a ray: follow it, encircle its endpoint
    block through the two adjacent segments (higher index first), return."""
    if x.is_loop:
        raise RaylabError("f_map expects a ray")
    if not is_simple(model, x):
        raise NonSimpleError(f"f_map expects a simple ray: {x}")
    segs = model.segments_at_block(x.end)
    if len(segs) < 2:
        raise PreconditionError(
            f"endpoint b{x.end} sits at the window edge; need both adjacent segments"
        )
    hi, lo = max(segs), min(segs)
    word = x.word + (hi, lo) + tuple(reversed(x.word))
    return canonical_loop(Code(x.start, word, None), model)


@dataclass(frozen=True)
class QiReport:
    x: Code
    y: Code
    d_ray: int
    fx: Code
    fy: Code
    ub_loop: int
    lower_required: int
    holds: bool


def qi_consistency(model: TruncatedModel, x: Code, y: Code, path) -> QiReport:
    """Check the transfer bound: the loop-graph unicorn path between the
    pushed-off loops is at least the certified ray distance minus 2."""
    cert = certify_distance(model, x, y, path)
    if not cert.exact:
        raise PreconditionError("qi_consistency needs an exact distance certificate")
    fx, fy = f_map(model, x), f_map(model, y)
    ub = unicorn_path_length(model, fx, fy)
    needed = cert.lower - 2
    return QiReport(x, y, cert.lower, fx, fy, ub, needed, ub >= needed)
