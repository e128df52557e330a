import itertools

import pytest

from ospchar.symfunc import MonomialExpansion
from ospchar.weyl import (
    HalfWeight,
    Kind,
    SignedPermutation,
    WeylDivisionError,
    alternant,
    character_dim,
    divide_exact,
    is_dominant,
    rho_doubled,
    weyl_character,
    weyl_dim,
    weyl_group,
)

from oracles import laurent_product_denominator, rect_schur_sum


def grid(kind, k):
    """Dominant doubled weights with entries up to 3 (coordinates up to 3/2)."""
    out = []
    for parity in (0, 1):
        vals = [v for v in range(-3, 4) if v % 2 == parity]
        for w in itertools.product(vals, repeat=k):
            hw = HalfWeight(w)
            if is_dominant(kind, hw):
                out.append(hw)
    return out


@pytest.mark.parametrize("kind, k, size", [("B", 1, 2), ("B", 2, 8), ("D", 3, 24), ("D", 2, 4), ("B", 3, 48)])
def test_weyl_group_order(kind, k, size):
    group = weyl_group(kind, k)
    assert len(group) == size
    assert len(set(group)) == size


def test_weyl_group_D_even_sign_changes():
    for w in weyl_group("D", 3):
        assert w.signs.count(-1) % 2 == 0


def test_determinant_of_reflections():
    assert SignedPermutation((1, 0), (1, 1)).det == -1
    assert SignedPermutation((0, 1), (-1, 1)).det == -1
    assert SignedPermutation((0, 1), (-1, -1)).det == 1


def test_rank_validation():
    with pytest.raises(ValueError):
        weyl_group("D", 1)


@pytest.mark.parametrize("kind, k", [("B", 1), ("B", 2), ("B", 3), ("D", 2), ("D", 3), ("D", 4)])
def test_denominator_identity(kind, k):
    assert alternant(kind, rho_doubled(kind, k)).terms == laurent_product_denominator(kind, k)


def test_half_weight_parity():
    assert HalfWeight.from_coords(["1/2", "1/2"]).doubled == (1, 1)
    with pytest.raises(ValueError):
        HalfWeight((1, 2))
    with pytest.raises(ValueError):
        HalfWeight.from_coords(["1/3"])


def test_non_dominant_rejected():
    with pytest.raises(ValueError):
        weyl_character("B", 2, HalfWeight((1, 3)))
    with pytest.raises(ValueError):
        weyl_character("B", 2, HalfWeight((1, -1)))
    with pytest.raises(ValueError):
        weyl_dim("D", 3, HalfWeight((1, 1, 3)))
    assert is_dominant("D", HalfWeight((1, 1, -1)))


def test_character_examples():
    ch = weyl_character("D", 2, HalfWeight((1, 1)))
    assert ch.shift2 == 1
    assert ch.expansion.terms == {(0, 0): 1, (1, 1): 1}
    for k in (1, 2, 3):
        assert weyl_character("B", k, HalfWeight((0,) * k)).expansion.terms == {(0,) * k: 1}
    assert character_dim(weyl_character("B", 2, HalfWeight((1, 1)))) == 4


@pytest.mark.parametrize("kind, k, doubled, expected", [
    ("B", 2, (1, 1), 4), ("D", 2, (2, 0), 4), ("B", 3, (0, 0, 0), 1), ("D", 3, (0, 0, 0), 1),
    ("B", 2, (2, 2), 10), ("D", 2, (2, 2), 3), ("D", 3, (1, 1, 1), 4), ("B", 3, (1, 1, 1), 8),
    ("B", 1, (2,), 3), ("D", 4, (2, 0, 0, 0), 8),
])
def test_weyl_dim_examples(kind, k, doubled, expected):
    assert weyl_dim(kind, k, HalfWeight(doubled)) == expected


@pytest.mark.parametrize("kind, k", [("B", 1), ("B", 2), ("B", 3), ("D", 2), ("D", 3)])
def test_character_dim_and_invariance(kind, k):
    group = weyl_group(kind, k)
    for hw in grid(kind, k):
        ch = weyl_character(kind, k, hw)
        assert character_dim(ch) == weyl_dim(kind, k, hw)
        # unshift to doubled Laurent exponents, then act by every group element
        doubled = {tuple(2 * e - ch.shift2 for e in exp): c for exp, c in ch.expansion.terms.items()}
        for w in group:
            assert {w.act(e): c for e, c in doubled.items()} == doubled
        top = tuple((a + ch.shift2) // 2 for a in hw.doubled)
        assert ch.expansion.terms[top] == 1
        assert max(ch.expansion.terms) == top


def test_dim_grid_k4():
    for kind in ("B", "D"):
        for hw in grid(kind, 4):
            assert character_dim(weyl_character(kind, 4, hw)) == weyl_dim(kind, 4, hw)


@pytest.mark.parametrize("k, p", [(k, p) for k in (1, 2, 3) for p in (0, 1, 2, 3)])
def test_spinor_powers_match_rectangle_sum(k, p):
    ch = weyl_character("B", k, HalfWeight((p,) * k))
    assert ch.shift2 == p
    assert ch.expansion.terms == dict(rect_schur_sum(k, p))


def test_divide_exact_detects_remainder():
    x = MonomialExpansion(1, 0, {(1,): 1})
    one = MonomialExpansion.one(1)
    num = x * x + one
    with pytest.raises(WeylDivisionError):
        divide_exact(num, x + one)
    assert divide_exact(x * x - one, x + one) == x - one


def test_divide_exact_laurent():
    xinv = MonomialExpansion(2, 0, {(-1, 0): 1, (0, 1): 2})
    den = MonomialExpansion(2, 0, {(1, -1): 1, (0, 0): -3, (-2, 1): 1})
    assert divide_exact(xinv * den, den) == xinv


def test_kind_accepts_strings():
    assert weyl_group(Kind.B, 2) is weyl_group("B", 2)
