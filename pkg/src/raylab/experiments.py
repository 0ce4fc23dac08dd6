"""Named verification experiments behind the CLI.

Each experiment produces a Report: a header, data rows in canonical order,
and one pass flag per row.  Expected values come from a table shipped with
the package (override with RAYLAB_EXPECTED to point at another file, e.g. to
exercise the failure exit path), so corrections edit data rather than logic.
"""

from __future__ import annotations

import itertools
import json
import os
import random
import time
from dataclasses import dataclass, field
from importlib import resources

from . import axes, mcg, sampling, tight, unicorn
from .codes import Code, canonicalize, format_code
from .errors import OracleSizeError
from .model import TruncatedModel, build_model


def load_expected() -> dict:
    path = os.environ.get("RAYLAB_EXPECTED")
    if path:
        with open(path) as f:
            return json.load(f)
    with resources.files("raylab.data").joinpath("expected.json").open() as f:
        return json.load(f)


@dataclass
class Report:
    name: str
    header: tuple
    rows: list = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, *row):
        assert len(row) == len(self.header)
        self.rows.append(tuple(row))

    @property
    def passed(self) -> bool:
        idx = self.header.index("pass")
        return all(bool(r[idx]) for r in self.rows)

    def finalize(self):
        self.rows.sort(key=lambda r: tuple(str(v) for v in r))
        return self

    def table(self) -> str:
        out = [f"# exp {self.name}  rows={len(self.rows)}  "
               f"pass={'yes' if self.passed else 'NO'}  ({self.elapsed:.2f}s)"]
        widths = [len(h) for h in self.header]
        srows = [tuple(str(v) for v in r) for r in self.rows]
        for r in srows:
            widths = [max(w, len(v)) for w, v in zip(widths, r)]
        fmt = "  ".join(f"{{:<{w}}}" for w in widths)
        out.append(fmt.format(*self.header))
        for r in srows:
            out.append(fmt.format(*r))
        return "\n".join(out)

    def write_csv(self, path):
        import csv

        with open(path, "w", newline="") as f:
            w = csv.writer(f)
            w.writerow(self.header)
            for r in self.rows:
                w.writerow(r)


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        report = fn(*args, **kwargs)
        report.elapsed = time.perf_counter() - t0
        return report.finalize()

    return wrapper


# ---------------------------------------------------------------------------


@_timed
def exp_axis(model: TruncatedModel, kmax: int = 10, **_):
    """Exact distance certificates along the standard half-axis."""
    rep = Report("axis", ("check", "n", "lower", "upper", "exact", "pass"))
    path = axes.axis_path(model, kmax)
    for n in range(kmax + 1):
        cert = axes.certify_distance(model, path[0], path[n], path[: n + 1])
        rep.add("certify(alpha0,alpha_n)", n, cert.lower, cert.upper,
                cert.exact, cert.exact and cert.lower == n)
    return rep


def _code_digest(code: Code) -> str:
    text = format_code(code)
    if len(text) <= 40:
        return text
    return f"{text[:28]}...[{len(code.word)} letters]@b{code.end}"


@_timed
def exp_haction(model: TruncatedModel, kmax: int = 8, **_):
    rep = Report("haction", ("check", "k", "expected", "got", "pass"))
    h = mcg.named("h")
    for k in range(kmax + 1):
        want = axes.alpha(model, k + 1)
        got = mcg.apply(h, axes.alpha(model, k), model)
        rep.add("h(alpha_k)=alpha_{k+1}", k, _code_digest(want), _code_digest(got),
                got == want)
    return rep


@_timed
def exp_gaction(model: TruncatedModel, nmax: int = 3, **_):
    rep = Report("gaction", ("check", "n", "expected_len", "got_len", "pass"))
    g = mcg.named("g")
    for n in range(nmax + 1):
        want = axes.gamma(model, 2 * n + 2)
        got = mcg.apply(g, axes.gamma(model, 2 * n), model)
        rep.add("g(gamma_2n)=gamma_{2n+2}", n, len(want.word), len(got.word),
                got == want)
    return rep


@_timed
def exp_formulas(model: TruncatedModel, kmax: int = 10, **_):
    """Signed counts against the shipped closed forms plus the recursion."""
    rep = Report("formulas", ("check", "k", "expected", "got", "pass"))
    expected = load_expected()["positive_intersections"]
    a0 = axes.alpha(model, 0)
    got = {}
    for k in range(2, kmax + 1):
        p, n = tight.signed_intersections(model, a0, axes.alpha(model, k))
        got[k] = (p, n)
        want = tuple(expected[str(k)])
        rep.add("I(alpha0,alpha_k),I(alpha_k,alpha0)", k, want, (p, n),
                (p, n) == want)
    got[1] = tight.signed_intersections(model, a0, axes.alpha(model, 1))
    for k in range(1, kmax):
        p, n = got[k]
        want = (2 * p + n + 1, p + 2 * n)
        rep.add("recursion (2p+n+1, p+2n)", k, want, got[k + 1],
                got[k + 1] == want)
    return rep


@_timed
def exp_slim(model: TruncatedModel, n: int = 200, seed: int = 0, maxlen: int = 8, **_):
    rep = Report("slim", ("seed", "a", "b", "d", "gap", "pass"))
    rng = random.Random(seed)
    done = 0
    while done < n:
        a = sampling.random_loop_vertex(rng, model, maxlen)
        b = sampling.random_loop_vertex(rng, model, maxlen)
        d = sampling.random_loop_vertex(rng, model, maxlen)
        if len({a, b, d}) < 3:
            continue
        gap = unicorn.slim_gap(model, a, b, d)
        rep.add(seed, format_code(a), format_code(b), format_code(d), gap, gap <= 1)
        done += 1
    return rep


@_timed
def exp_dichotomy(model: TruncatedModel, n: int = 100, seed: int = 0, maxlen: int = 8, **_):
    rep = Report("dichotomy", ("seed", "a", "b", "i", "j", "pass"))
    rng = random.Random(seed)
    done = 0
    while done < n:
        a = sampling.random_loop_vertex(rng, model, maxlen)
        b = sampling.random_loop_vertex(rng, model, maxlen)
        if a == b:
            continue
        path = unicorn.unicorn_path(model, a, b)
        ln = path.length
        i = rng.randint(0, ln)
        j = rng.randint(i, ln)
        ok = unicorn.subpath_dichotomy_check(model, a, b, i, j)
        rep.add(seed, format_code(a), format_code(b), i, j, ok)
        done += 1
    return rep


@_timed
def exp_nonrev(model: TruncatedModel, n: int = 500, imax: int = 8, seed: int = 0, **_):
    rep = Report("nonrev", ("seed", "word", "i", "a_low", "a_high", "pass"))
    rng = random.Random(seed)
    for _ in range(n):
        word, name = sampling.random_mc_word(rng, model, maxlen=4)
        i = rng.randint(0, imax)
        lo = axes.a_value(mcg.apply(word, axes.alpha(model, i), model))
        hi = axes.a_value(mcg.apply(word, axes.alpha(model, i + 2), model))
        rep.add(seed, name, i, lo, hi, hi != lo - 2)
    return rep


def small_universe(model: TruncatedModel, max_len: int):
    """All canonical codes over the window with short words, deduplicated."""
    segs = range(-model.window, model.window)
    ends = [None] + [k for k in range(-model.window, model.window + 1) if k]
    seen = {}
    for length in range(max_len + 1):
        for word in itertools.product(segs, repeat=length):
            if any(a == b for a, b in zip(word, word[1:])):
                continue
            for start in "SN":
                for end in ends:
                    code = canonicalize(Code(start, word, end), model)
                    seen[code] = True
    return list(seen)


@_timed
def exp_oracle(model: TruncatedModel, n: int = 200, seed: int = 0, max_sum: int = 4, **_):
    """Fast-path counts against the exhaustive-minimum oracle: every pair of
    short canonical codes at window 3 with combined length <= max_sum, plus
    seeded pairs inside the oracle's size bound."""
    rep = Report("oracle", ("kind", "x", "y", "fast", "brute", "pass"))
    m3 = build_model(3)
    by_len = {}
    for c in small_universe(m3, max_sum):
        by_len.setdefault(len(c.word), []).append(c)
    for bucket in by_len.values():
        bucket.sort(key=format_code)
    for lx in range(max_sum + 1):
        for ly in range(lx, max_sum - lx + 1):
            xs = by_len.get(lx, ())
            ys = by_len.get(ly, ())
            for i, x in enumerate(xs):
                start = i if lx == ly else 0
                for y in ys[start:]:
                    fast = tight.geometric_intersection(m3, x, y)
                    brute = tight.brute_min_crossings(m3, x, y)
                    rep.add("exhaustive", format_code(x), format_code(y), fast,
                            brute, fast == brute)
    rng = random.Random(seed)
    done = 0
    while done < n:
        x = sampling.random_code(rng, model, 7, loop_prob=0.3)
        y = sampling.random_code(rng, model, 7, loop_prob=0.3)
        if len(x.word) + len(y.word) > tight.ORACLE_LETTER_BOUND:
            continue
        counts = {}
        for c in list(x.word) + list(y.word):
            counts[c] = counts.get(c, 0) + 1
        if counts and max(counts.values()) > 5:
            continue
        try:
            brute = tight.brute_min_crossings(model, x, y)
        except OracleSizeError:
            continue
        fast = tight.geometric_intersection(model, x, y)
        rep.add("seeded", format_code(x), format_code(y), fast, brute,
                fast == brute)
        done += 1
    return rep


EXPERIMENTS = {
    "axis": exp_axis,
    "haction": exp_haction,
    "gaction": exp_gaction,
    "formulas": exp_formulas,
    "slim": exp_slim,
    "dichotomy": exp_dichotomy,
    "nonrev": exp_nonrev,
    "oracle": exp_oracle,
}
