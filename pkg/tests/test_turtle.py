from itertools import product

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibsnow import turtle, words


def vertex_list(path):
    return [tuple(v) for v in path.vertices.tolist()]


def classify_oracle(verts):
    """Brute-force pairwise comparison of the vertex list."""
    closed = verts[0] == verts[-1]
    body = verts[:-1] if closed else verts
    distinct = all(
        body[i] != body[j]
        for i in range(len(body))
        for j in range(i + 1, len(body))
    )
    return closed, distinct


def test_trace_square():
    path = turtle.trace("LLL")
    assert vertex_list(path) == [(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
    assert path.segment_count == 4
    assert turtle.classify(path) == turtle.PathClass(True, True)


def test_trace_four_left_turns_is_open_and_self_touching():
    path = turtle.trace("LLLL")
    assert path.segment_count == 5
    assert vertex_list(path)[-1] == (1, 0)
    assert turtle.classify(path) == turtle.PathClass(False, False)


def test_trace_empty_word_is_one_segment():
    path = turtle.trace("")
    assert vertex_list(path) == [(0, 0), (1, 0)]
    assert path.segment_count == 1


@pytest.mark.parametrize(
    "word, closed, simple",
    [
        ("LLLL", False, False),
        ("LLL", True, True),
        ("LRLR", False, True),
        ("LLLRLLL", True, False),
        ("LRLLRLLRLLR", True, True),
    ],
)
def test_classification_examples(word, closed, simple):
    got = turtle.classify(turtle.trace(word))
    assert got == turtle.PathClass(closed=closed, non_intersecting=simple)


def test_trace_rejects_foreign_letters():
    with pytest.raises(ValueError):
        turtle.trace("LRX")


@given(st.text(alphabet="LR", max_size=300))
def test_segment_count_is_word_length_plus_one(w):
    path = turtle.trace(w)
    assert path.segment_count == len(w) + 1
    steps = np.abs(np.diff(path.vertices, axis=0))
    assert bool((steps.sum(axis=1) == 1).all())
    assert bool((steps.max(axis=1) == 1).all())


@given(st.text(alphabet="LR", max_size=300))
def test_swapped_word_traces_the_x_axis_mirror(w):
    original = turtle.trace(w).vertices
    mirrored = turtle.trace(words.complement(w)).vertices
    assert bool((mirrored == original * np.array([1, -1])).all())


def test_classify_matches_brute_force_on_all_short_words():
    for length in range(14):
        for letters in product("LR", repeat=length):
            path = turtle.trace("".join(letters))
            got = turtle.classify(path)
            closed, simple = classify_oracle(vertex_list(path))
            assert (got.closed, got.non_intersecting) == (closed, simple)


def test_snowflake_order_0_is_a_unit_square():
    path = turtle.snowflake_path(0)
    assert path.segment_count == 4
    assert vertex_list(path) == [(0, 0), (1, 0), (1, -1), (0, -1), (0, 0)]


def test_snowflake_order_1_exact_vertices():
    expected = [
        (0, 0), (1, 0), (1, -1), (2, -1), (2, 0), (3, 0), (3, 1),
        (2, 1), (2, 2), (1, 2), (1, 1), (0, 1), (0, 0),
    ]
    assert vertex_list(turtle.snowflake_path(1)) == expected


def test_snowflake_order_2_segment_count():
    assert turtle.snowflake_path(2).segment_count == 52


def test_snowflakes_are_closed_and_non_intersecting():
    for n in range(9):
        assert turtle.classify(turtle.snowflake_path(n)) == turtle.PathClass(True, True)


def test_snowflake_bounding_boxes_follow_the_pell_law():
    for n in range(9):
        (x0, y0), (x1, y1) = turtle.bounding_box(turtle.snowflake_path(n))
        side = 2 * words.pell(n + 1) - 1
        assert x1 - x0 == side
        assert y1 - y0 == side


@pytest.mark.parametrize(
    "word, expected",
    [("LLL", ((0, 0), (1, 1))), ("", ((0, 0), (1, 0)))],
)
def test_bounding_box_examples(word, expected):
    assert turtle.bounding_box(turtle.trace(word)) == expected


def test_snowflake_order_cap_is_enforced():
    with pytest.raises(ValueError):
        turtle.snowflake_path(13)


def test_lattice_path_rejects_non_unit_steps():
    with pytest.raises(ValueError):
        turtle.LatticePath(np.array([[0, 0], [2, 0]], dtype=np.int64))
    with pytest.raises(ValueError):
        turtle.LatticePath(np.array([[0, 0], [1, 1]], dtype=np.int64))
    with pytest.raises(ValueError):
        turtle.LatticePath(np.array([[0, 0]], dtype=np.int64))
