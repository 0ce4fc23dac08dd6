import pytest

from raylab import axes, mcg, tight
from raylab.codes import Code, parse
from raylab.errors import MarginError, RaylabError
from raylab.sampling import random_code, random_mc_word


def test_carousel_on_boundary_parallel_arcs(m12):
    t1 = mcg.named("t1")
    assert mcg.apply(t1, parse("S: @ b1", m12), m12) == parse("S: @ b2", m12)
    assert mcg.apply(t1, parse("S: @ b2", m12), m12) == parse("S: @ b3", m12)
    # the block left of infinity rides over it through the north
    assert mcg.apply(t1, parse("S: @ b-1", m12), m12) == parse("N: @ b1", m12)


def test_h_translates_axis(m12):
    h = mcg.named("h")
    for k in range(5):
        assert mcg.apply(h, axes.alpha(m12, k), m12) == axes.alpha(m12, k + 1)


def test_h_inverse(m12):
    hinv = mcg.invert(mcg.named("h"))
    assert mcg.apply(hinv, axes.alpha(m12, 2), m12) == axes.alpha(m12, 1)


def test_g_translates_gamma(m12):
    g = mcg.named("g")
    for n in range(2):
        got = mcg.apply(g, axes.gamma(m12, 2 * n), m12)
        assert got == axes.gamma(m12, 2 * n + 2)


def test_t2_is_phi_conjugate(m12, rng):
    t1, t2, phi = mcg.named("t1"), mcg.named("t2"), mcg.named("phi")
    for _ in range(20):
        x = random_code(rng, m12, maxlen=4, loop_prob=0.3, span=8)
        lhs = mcg.apply(t2, x, m12)
        rhs = mcg.apply(phi, mcg.apply(t1, mcg.apply(phi, x, m12), m12), m12)
        assert lhs == rhs


def test_g_is_h2_h1(m12, rng):
    g = mcg.named("g")
    prod = mcg.compose(mcg.named("h2"), mcg.named("h1"))
    assert g.gens == prod.gens
    for _ in range(10):
        x = random_code(rng, m12, maxlen=3, loop_prob=0.3, span=5)
        assert mcg.apply(g, x, m12) == mcg.apply(
            mcg.named("h2"), mcg.apply(mcg.named("h1"), x, m12), m12
        )


def test_involutions(m12, rng):
    phi, sigma = mcg.named("phi"), mcg.named("sigma")
    tw = mcg.half_twist(2, "N", m12)
    for _ in range(25):
        x = random_code(rng, m12, maxlen=5, loop_prob=0.3, span=8)
        assert mcg.apply(phi, mcg.apply(phi, x, m12), m12) == x
        assert mcg.apply(sigma, mcg.apply(sigma, x, m12), m12) == x
        assert mcg.apply(mcg.invert(tw), mcg.apply(tw, x, m12), m12) == x


def test_compose_invert_laws(m12, rng):
    for _ in range(10):
        word, _ = random_mc_word(rng, m12, maxlen=3)
        x = random_code(rng, m12, maxlen=3, loop_prob=0.2, span=5)
        assert mcg.apply(mcg.compose(word, mcg.invert(word)), x, m12) == x
        assert mcg.apply(mcg.invert(mcg.invert(word)), x, m12) == mcg.apply(
            word, x, m12
        )


def test_intersection_invariance(m16, rng):
    # signed on rays; unsigned also covers loops (unoriented vertices)
    for _ in range(30):
        word, _ = random_mc_word(rng, m16, maxlen=3)
        x = random_code(rng, m16, maxlen=4, span=9)
        y = random_code(rng, m16, maxlen=4, span=9)
        want = tight.signed_intersections(m16, x, y)
        got = tight.signed_intersections(
            m16, mcg.apply(word, x, m16), mcg.apply(word, y, m16)
        )
        assert got == want
    for _ in range(15):
        word, _ = random_mc_word(rng, m16, maxlen=3)
        x = random_code(rng, m16, maxlen=4, loop_prob=1.0, span=9)
        y = random_code(rng, m16, maxlen=4, loop_prob=0.5, span=9)
        assert tight.geometric_intersection(
            m16, mcg.apply(word, x, m16), mcg.apply(word, y, m16)
        ) == tight.geometric_intersection(m16, x, y)


def test_mirror_law(m16, rng):
    sigma = mcg.named("sigma")
    assert not sigma.orientation_preserving
    for _ in range(20):
        x = random_code(rng, m16, maxlen=4, span=9)
        y = random_code(rng, m16, maxlen=4, span=9)
        sx, sy = mcg.apply(sigma, x, m16), mcg.apply(sigma, y, m16)
        assert tight.positive_intersection(m16, sx, sy) == tight.positive_intersection(
            m16, y, x
        )


def test_axis_images_begin_like(m12):
    h1 = mcg.named("h1")
    x = axes.alpha(m12, 0)
    for n in range(1, 5):
        x = mcg.apply(h1, x, m12)
        assert x == axes.alpha(m12, n)
        assert axes.begins_like(x, axes.alpha_word(n))


def test_phi_alpha_negative_identity(m12):
    phi, sigma = mcg.named("phi"), mcg.named("sigma")
    hinv = mcg.invert(mcg.named("h"))
    aneg = axes.alpha(m12, 0)
    for k in range(3):
        aneg = mcg.apply(hinv, aneg, m12)  # alpha_{-(k+1)}
        lhs = mcg.apply(phi, aneg, m12)
        rhs = mcg.apply(sigma, axes.alpha(m12, k), m12)
        assert lhs == rhs


def test_margin_error(m3):
    h = mcg.named("h")
    with pytest.raises(MarginError):
        mcg.apply(h, Code("S", (2,), 3), m3)


def test_unknown_element():
    with pytest.raises(RaylabError):
        mcg.named("t3")
