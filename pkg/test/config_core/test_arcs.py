import pytest

from pybicorn.surface.arcs import (ArcSpan, arc_crossings, arc_edges, arc_length, complement, contains,
                                   interior, span, sub_arc)

# On grid-k, α visits crossings 0, 1, ..., k-1 in this order.

def test_span_and_complement(grid):
    config = grid(6)
    a = span(config, 0, 1, 4)
    assert arc_edges(config, a) == [1, 2, 3]
    assert arc_crossings(config, a) == [1, 2, 3, 4]
    assert interior(config, a) == [2, 3]
    c = complement(config, a)
    assert arc_edges(config, c) == [4, 5, 0]
    assert arc_length(config, a) + arc_length(config, c) == 6

def test_backward_span_is_normalized(grid):
    config = grid(6)
    assert span(config, 0, 4, 1, -1) == span(config, 0, 1, 4)

def test_full_and_empty(grid):
    config = grid(5)
    full, empty = ArcSpan.full(0), ArcSpan.empty(0)
    assert interior(config, full) == [0, 1, 2, 3, 4]
    assert arc_edges(config, empty) == []
    assert complement(config, full) == empty
    assert contains(config, full, span(config, 0, 3, 1))
    assert contains(config, span(config, 0, 1, 3), empty)
    assert not contains(config, span(config, 0, 1, 3), full)

def test_nesting_and_sub_arc(grid):
    config = grid(8)
    outer = span(config, 0, 6, 3)
    inner = sub_arc(config, outer, 7, 1)
    assert inner == ArcSpan(0, 7, 1, 1)
    assert contains(config, outer, inner)
    assert not contains(config, inner, outer)
    with pytest.raises(ValueError):
        sub_arc(config, outer, 4, 5)

def test_span_errors(grid):
    config = grid(4)
    with pytest.raises(ValueError):
        span(config, 0, 2, 2)
    with pytest.raises(ValueError):
        span(config, 0, 1, 9)

def test_arc_list_form():
    assert ArcSpan.from_list([3, 5, 2, -1]) == ArcSpan(3, 2, 5, 1)
    assert ArcSpan.from_list([3, None, None, 0]).is_empty
    with pytest.raises(ValueError):
        ArcSpan.from_list([3, 1, None, 1])
