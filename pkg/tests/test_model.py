import pytest

from raylab.errors import OutOfWindowError, WindowError
from raylab.model import FAR, INF, build_model, endpoint_block_of_p


def test_window_validation():
    with pytest.raises(WindowError):
        build_model(1)
    with pytest.raises(WindowError):
        build_model(0)


def test_smallest_window_contents():
    m = build_model(2)
    items = m.cyclic_items()
    assert items == [
        (INF, None),
        ("s", 0), ("b", 1), ("s", 1), ("b", 2),
        (FAR, None),
        ("b", -2), ("s", -2), ("b", -1), ("s", -1),
    ]
    blocks = {k for (kind, k) in items if kind == "b"}
    assert blocks == {-2, -1, 1, 2}


def test_positions_follow_cyclic_order():
    m = build_model(5)
    items = m.cyclic_items()
    pos = []
    for kind, k in items:
        if kind == INF:
            pos.append(m.pos_inf())
        elif kind == FAR:
            pos.append(m.pos_far())
        elif kind == "s":
            pos.append(m.pos_segment(k))
        else:
            pos.append(m.pos_block(k))
    assert pos == list(range(m.circle_len))


def test_segment_ends_examples():
    m = build_model(2)
    assert m.segment_ends(0) == (INF, 1)
    assert m.segment_ends(-1) == (-1, INF)
    with pytest.raises(OutOfWindowError):
        m.segment_ends(2)


def test_segment_ends_match_cyclic_order():
    m = build_model(4)
    items = m.cyclic_items()
    for n in range(-m.window, m.window):
        left, right = m.segment_ends(n)
        i = items.index(("s", n))
        prev = items[i - 1]
        nxt = items[(i + 1) % len(items)]
        want_left = INF if prev == (INF, None) else prev[1]
        want_right = INF if nxt == (INF, None) else nxt[1]
        assert (want_left, want_right) == (left, right)


def test_endpoint_block_of_p():
    assert endpoint_block_of_p(0) == 1
    assert endpoint_block_of_p(1) == 2
    assert endpoint_block_of_p(-1) == -1


def test_p_points_adjacent_across_segment():
    m = build_model(6)
    for n in range(0, m.window - 1):
        b1 = endpoint_block_of_p(n)
        b2 = endpoint_block_of_p(n + 1)
        ends = m.segment_ends(n + 1)
        assert set(ends) == {b1, b2}


def test_segments_at_block_edges():
    m = build_model(3)
    assert m.segments_at_block(1) == (0, 1)
    assert m.segments_at_block(-1) == (-2, -1)
    assert m.segments_at_block(3) == (2,)
    assert m.segments_at_block(-3) == (-3,)
