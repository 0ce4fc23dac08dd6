import random

import pytest

from raylab import kernels
from raylab.model import build_model
from raylab.sampling import random_code


def test_cancel_adjacent():
    assert kernels.cancel_adjacent([1, 2, 2, 1]) == []
    assert kernels.cancel_adjacent([1, 2, 3]) == [1, 2, 3]
    assert kernels.cancel_adjacent([]) == []
    assert kernels.cancel_adjacent([5, 5, 5]) == [5]


def _backends():
    out = [kernels.load_backend("pure")]
    try:
        out.append(kernels.load_backend("cython"))
    except ValueError:  # pragma: no cover
        pass
    except ImportError:  # pragma: no cover
        pass
    return out


@pytest.mark.skipif(len(_backends()) < 2, reason="compiled backend unavailable")
def test_backend_parity(monkeypatch):
    import raylab.kernels as K
    from raylab import tight

    m = build_model(4)
    rng = random.Random(99)
    pure, cyx = _backends()
    for _ in range(120):
        x = random_code(rng, m, maxlen=6, loop_prob=0.3)
        y = random_code(rng, m, maxlen=6, loop_prob=0.3)
        results = []
        for impl in (pure, cyx):
            for name in (
                "cancel_adjacent",
                "prepare_rank_context",
                "sort_slots",
                "count_cross_pairs",
                "count_self_pairs",
                "exchange_pass",
            ):
                monkeypatch.setattr(K, name, getattr(impl, name))
            results.append(
                (
                    tight.geometric_intersection(m, x, y),
                    tight.signed_intersections(m, x, y),
                    tight.realize(m, [x]).self_crossings(0),
                )
            )
        assert results[0] == results[1]


@pytest.mark.skipif(len(_backends()) < 2, reason="compiled backend unavailable")
def test_backend_parity_mcg(monkeypatch):
    import raylab.kernels as K
    from raylab import axes, mcg

    m = build_model(10)
    pure, cyx = _backends()
    images = []
    for impl in (pure, cyx):
        for name in ("cancel_adjacent", "exchange_pass"):
            monkeypatch.setattr(K, name, getattr(impl, name))
        images.append(mcg.apply(mcg.named("h"), axes.alpha(m, 4), m))
    assert images[0] == images[1] == axes.alpha(m, 5)


def test_exchange_pass_contract():
    # class 1 letters in hemisphere 0 pick up a marker before and after
    emit = [
        [[(), ()], [(), ()]],
        [[(), ()], [(), ()]],
    ]
    emit[0][0][1] = (9,)
    emit[1][1][0] = (8,)
    word = [5, 5]
    wcls = [1, 0]
    out = kernels.exchange_pass(word, wcls, 0, 0, 0, emit)
    assert out == [9, 5, 8, 5]
