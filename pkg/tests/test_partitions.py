from math import comb

import pytest
from hypothesis import given, strategies as st

from ospchar.partitions import (
    HookBound,
    Partition,
    RectBound,
    SkewShape,
    attach_horizontal_strips,
    conjugate,
    contains,
    doubled_core,
    enumerate_Br,
    enumerate_in_hook_by_weight,
    enumerate_in_rect,
    horizontal_strip_length,
    in_Br,
    is_doubled,
    is_horizontal_strip,
    partitions_of,
    strip_excess,
    subpartitions,
)

from oracles import brute_Br, brute_partitions, is_doubled_counting, is_horizontal_strip_cells


@st.composite
def partitions(draw, max_weight=12):
    parts = draw(st.lists(st.integers(1, max_weight), max_size=max_weight))
    parts = sorted(parts, reverse=True)
    while sum(parts) > max_weight:
        parts.pop()
    return Partition(parts)


def test_partition_canonical_form():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([]).weight == 0 and Partition([]).length == 0
    lam = Partition([5, 4, 4, 2])
    assert lam.weight == 15 and lam.length == 4
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


@pytest.mark.parametrize("lam, expected", [
    ((5, 4, 4, 2), (4, 4, 3, 3, 1)),
    ((), ()),
    ((3,), (1, 1, 1)),
])
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == expected


@given(partitions())
def test_conjugate_involutive(lam):
    c = conjugate(lam)
    assert conjugate(c) == lam
    assert c.weight == lam.weight
    assert c.length == lam.part(1)


@pytest.mark.parametrize("lam, mu, expected", [
    ((5, 4, 4, 2), (4, 4, 3), True),
    ((2, 2), (2, 2), True),
    ((2, 1, 1), (2, 2), False),
    ((1,), (1, 1), False),
])
def test_contains(lam, mu, expected):
    assert contains(lam, mu) is expected


@pytest.mark.parametrize("outer, inner, strip, length", [
    ((5, 4, 4, 2), (4, 4, 3), True, 4),
    ((1, 1), (), False, None),
    ((2,), (1,), True, 1),
])
def test_horizontal_strip(outer, inner, strip, length):
    shape = SkewShape(outer, inner)
    assert is_horizontal_strip(shape) is strip
    assert horizontal_strip_length(shape) == length


def test_skew_shape_rejects_non_containment():
    with pytest.raises(ValueError):
        SkewShape((2, 1), (2, 2))


@given(partitions(8), partitions(8))
def test_horizontal_strip_matches_cell_oracle(lam, mu):
    if contains(lam, mu):
        assert is_horizontal_strip(SkewShape(lam, mu)) == is_horizontal_strip_cells(lam, mu)


@pytest.mark.parametrize("rows, cols, expected", [
    (2, 1, [(), (1,), (1, 1)]),
    (1, 3, [(), (1,), (2,), (3,)]),
])
def test_enumerate_in_rect_examples(rows, cols, expected):
    assert enumerate_in_rect(RectBound(rows, cols)) == expected


@pytest.mark.parametrize("rows, cols", [(r, c) for r in range(5) for c in range(5)])
def test_enumerate_in_rect_vs_brute_force(rows, cols):
    got = enumerate_in_rect(RectBound(rows, cols))
    assert len(got) == len(set(got)) == comb(rows + cols, rows)
    assert set(got) == brute_partitions(rows * cols, max_part=cols, max_len=rows)
    for lam in got:
        assert conjugate(lam) in RectBound(cols, rows)


def test_enumerate_in_rect_2x2_has_six():
    assert len(enumerate_in_rect(RectBound(2, 2))) == 6


def test_enumeration_order_is_weight_then_lex():
    got = enumerate_in_rect(RectBound(3, 3))
    assert got == sorted(got, key=lambda lam: (lam.weight, tuple(lam)))


@pytest.mark.parametrize("m, n, max_part, w, expected", [
    (1, 1, 1, 2, [(1, 1)]),
    (1, 0, None, 3, [(3,)]),
    (2, 3, 4, 0, [()]),
])
def test_enumerate_in_hook_examples(m, n, max_part, w, expected):
    assert enumerate_in_hook_by_weight(HookBound(m, n), max_part, w) == expected


@pytest.mark.parametrize("m, n", [(0, 0), (1, 1), (2, 1), (1, 2), (0, 2)])
def test_enumerate_in_hook_vs_brute_force(m, n):
    for w in range(8):
        expected = {lam for lam in brute_partitions(w) if sum(lam) == w
                    and (lam[m] if len(lam) > m else 0) <= n}
        assert set(enumerate_in_hook_by_weight(HookBound(m, n), None, w)) == expected


def test_partitions_of_counts():
    assert [len(partitions_of(w)) for w in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_subpartitions_of_21():
    assert subpartitions((2, 1)) == [(), (1,), (1, 1), (2,), (2, 1)]


@pytest.mark.parametrize("lam, expected", [
    ((2, 2, 1, 1), True),
    ((), True),
    ((2, 1), False),
    ((2, 2, 2, 2), True),
    ((2, 2, 2), False),
])
def test_is_doubled(lam, expected):
    assert is_doubled(lam) is expected


@given(partitions())
def test_is_doubled_matches_counting(lam):
    assert is_doubled(lam) == is_doubled_counting(lam)


@pytest.mark.parametrize("rows, cols, r, expected", [
    (2, 1, 0, [(), (1, 1)]),
    (2, 1, 1, [(1,)]),
    (2, 2, 1, [(1,), (2, 1)]),
])
def test_enumerate_Br_examples(rows, cols, r, expected):
    assert enumerate_Br(RectBound(rows, cols), r) == expected


@pytest.mark.parametrize("rows, cols", [(r, c) for r in range(1, 5) for c in range(1, 4)])
def test_enumerate_Br_vs_brute_force(rows, cols):
    rect = brute_partitions(rows * cols, max_part=cols, max_len=rows)
    for r in range(cols + 2):
        assert set(enumerate_Br(RectBound(rows, cols), r)) == brute_Br(rect, r)


def test_enumerate_Br_on_hook_vs_brute_force():
    for m, n in [(1, 1), (2, 1), (1, 2)]:
        pool = {lam for lam in brute_partitions(7, max_part=3) if (lam[m] if len(lam) > m else 0) <= n}
        for r in range(4):
            got = enumerate_Br(HookBound(m, n), r, max_part=3, max_weight=7)
            assert set(got) == brute_Br(pool, r)


def test_enumerate_Br_hook_needs_weight():
    with pytest.raises(ValueError):
        enumerate_Br(HookBound(1, 1), 0)


@given(partitions(10))
def test_Br_zero_is_doubled_set(lam):
    assert (lam in enumerate_Br(RectBound(lam.length, lam.part(1)), 0)) == is_doubled(lam)


@given(partitions(10))
def test_doubled_core_is_the_unique_witness(lam):
    core = doubled_core(lam)
    assert is_doubled(core) and is_horizontal_strip(SkewShape(lam, core))
    assert lam.weight - core.weight == strip_excess(lam)
    witnesses = [nu for nu in brute_partitions(lam.weight, max_len=lam.length)
                 if is_doubled_counting(nu) and is_horizontal_strip_cells(lam, nu)]
    assert witnesses == [tuple(core)]
    assert in_Br(lam, strip_excess(lam))


def test_attach_horizontal_strips():
    assert sorted(attach_horizontal_strips((1, 1), 1, 2)) == [(1, 1, 1), (2, 1)]
    assert attach_horizontal_strips((), 2, 1) == []
    assert attach_horizontal_strips((), 2, None) == [(2,)]


@pytest.mark.parametrize("k, p", [(k, p) for k in range(5) for p in range(5)])
def test_union_of_Br_tiles_rectangle(k, p):
    pieces = [enumerate_Br(RectBound(k, p), r) for r in range(p + 1)]
    flat = [lam for piece in pieces for lam in piece]
    assert len(flat) == len(set(flat))
    assert set(flat) == set(enumerate_in_rect(RectBound(k, p)))
