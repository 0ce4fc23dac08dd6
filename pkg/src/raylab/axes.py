"""The explicit ray families, the prefix potential A, and distance
certificates in the ray graph.

The family alpha_k starts with the plain segment arc and grows by tubing:
each ray follows the previous one, wraps its endpoint, retraces, wraps
infinity, and runs out to the next block.  Word lengths obey
len(k+1) = 3 len(k) + 4, so codes reach ~10^6 letters by k = 12 and all the
word handling here stays linear.

A(ray) is the largest i such that the ray begins like the i-th axis prefix;
it is 1-Lipschitz on the ray graph, which turns prefix evidence into distance
lower bounds.  An explicit pairwise-disjoint path gives the matching upper
bound, and together they form a DistanceCertificate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .codes import NORTH, SOUTH, Code, begins_like, normalize
from .codes import reverse_word as _rev
from .errors import EdgeViolation, OutOfWindowError
from .model import TruncatedModel
from .tight import are_disjoint


@lru_cache(maxsize=None)
def alpha_word(k: int):
    """Segment word of alpha_k (model-free; indices up to s_k)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ()
    if k == 1:
        return (1, -1)
    prev = alpha_word(k - 1)
    return prev + (k, k - 1) + _rev(prev) + (0, -1) + prev


@lru_cache(maxsize=None)
def gamma_word(k: int):
    """Segment word of gamma_k, the axis translated by h2*h1.

    Same tubing idea as alpha but with the endpoint wrapped alternately the
    other way; the reduced words obey
    gamma_{k+1} = gamma_k (s_k s_{k+1}) rev(gamma_k) W gamma_k (s_k)
    with W alternating between (s_-1 s_0) and (s_0 s_-1), and the start
    hemisphere alternates.  Pinned against the action oracle
    (h2 h1)(gamma_{2n}) = gamma_{2n+2}.
    """
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return ()
    if k == 1:
        return (1, -1)
    j = k - 1
    prev = gamma_word(j)
    mid = (-1, 0) if j % 2 == 1 else (0, -1)
    return prev + (j, k) + _rev(prev) + mid + prev + (j,)


def gamma_start(k: int) -> str:
    """Start hemisphere of gamma_k (alternates from gamma_2 on)."""
    if k <= 1 or k % 2 == 1:
        return SOUTH
    return NORTH


def _check_window(model: TruncatedModel, k: int) -> None:
    if k < 0:
        raise ValueError("k must be >= 0")
    if model.window < k + 2:
        raise OutOfWindowError(
            f"window {model.window} too small for index {k} (need >= {k + 2})"
        )


def alpha(model: TruncatedModel, k: int) -> Code:
    _check_window(model, k)
    return Code(SOUTH, alpha_word(k), k + 1)


def gamma(model: TruncatedModel, k: int) -> Code:
    _check_window(model, k)
    return Code(gamma_start(k), gamma_word(k), k + 1)


def a_value(ray: Code) -> int:
    """Largest i such that the ray begins like the i-th axis prefix.

    The axis prefixes are nested, so a single longest-common-prefix against
    the largest candidate decides every level at once.
    """
    if ray.start != SOUTH or not ray.word:
        return 0
    n = len(ray.word)
    k = 1
    while len(alpha_word(k)) <= n:
        k += 1
    k -= 1  # largest prefix that could fit
    if k == 0:
        return 0
    ref = alpha_word(k)
    common = 0
    for a, b in zip(ray.word, ref):
        if a != b:
            break
        common += 1
    i = k
    while i > 0 and len(alpha_word(i)) > common:
        i -= 1
    return i


def distance_lower_bound(model: TruncatedModel, x: Code, y: Code) -> int:
    """Certified lower bound for the ray-graph distance."""
    if x == y:
        return 0
    da = abs(a_value(x) - a_value(y))
    if da >= 2:
        return da
    return max(da, 1 if are_disjoint(model, x, y) else 2)


def verify_path(model: TruncatedModel, path) -> int:
    """Check a claimed path: distinct normalized vertices, consecutive
    disjointness.  Returns its length (edge count) as an upper bound."""
    path = list(path)
    if not path:
        raise ValueError("empty path")
    for c in path:
        if normalize(c, model) != c:
            raise EdgeViolation(0, c, c, -1)
    if len(set(path)) != len(path):
        raise ValueError("path vertices are not pairwise distinct")
    for i in range(len(path) - 1):
        from .tight import geometric_intersection

        crossings = geometric_intersection(model, path[i], path[i + 1])
        if crossings != 0:
            raise EdgeViolation(i, path[i], path[i + 1], crossings)
    return len(path) - 1


@dataclass(frozen=True)
class DistanceCertificate:
    x: Code
    y: Code
    lower: int
    lower_method: str
    upper: int
    path: tuple
    exact: bool


def certify_distance(model: TruncatedModel, x: Code, y: Code, path) -> DistanceCertificate:
    path = tuple(path)
    if not path or path[0] != x or path[-1] != y:
        raise ValueError("path must run from x to y")
    upper = verify_path(model, path)
    if x == y:
        lower, method = 0, "identity"
    else:
        da = abs(a_value(x) - a_value(y))
        if da >= 2:
            lower, method = da, "a-difference"
        elif are_disjoint(model, x, y):
            lower, method = max(da, 1), "a-difference" if da >= 1 else "adjacency"
        else:
            lower, method = max(da, 2), "non-disjointness"
    assert lower <= upper
    return DistanceCertificate(x, y, lower, method, upper, path, lower == upper)


def axis_path(model: TruncatedModel, n: int):
    """The half-axis path alpha_0 .. alpha_n."""
    return [alpha(model, k) for k in range(n + 1)]
