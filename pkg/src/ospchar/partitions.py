"""Partitions, Young diagrams and the doubled sets B and B_r.

A partition is stored as a tuple of positive integers in weakly decreasing
order; trailing zeros are stripped on construction, so ``Partition(())`` is
the zero partition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()) -> "Partition":
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x < 0 for x in parts):
            raise ValueError(f"negative part in {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({list(self)})"

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """1-based part accessor; parts past the length read as 0."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def sort_key(self) -> tuple:
        return (self.weight, tuple(self))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = Partition(lam)
    if not lam:
        return lam
    return Partition(sum(1 for x in lam if x >= j) for j in range(1, lam[0] + 1))


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``lam`` contains the diagram of ``mu``."""
    lam, mu = Partition(lam), Partition(mu)
    if len(mu) > len(lam):
        return False
    return all(b <= a for a, b in zip(lam, mu))


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{list(self.inner)} is not contained in {list(self.outer)}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def column_heights(self) -> list[int]:
        """Number of skew boxes in each column."""
        oc, ic = conjugate(self.outer), conjugate(self.inner)
        return [oc.part(j) - ic.part(j) for j in range(1, len(oc) + 1)]

    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))


def is_horizontal_strip(shape: SkewShape) -> bool:
    # at most one box per column <=> outer and inner interlace
    outer, inner = shape.outer, shape.inner
    return all(outer.part(i + 1) <= inner.part(i) for i in range(1, len(outer) + 1))


def horizontal_strip_length(shape: SkewShape) -> int | None:
    """Strip length when ``shape`` is a horizontal strip, else None."""
    return shape.size if is_horizontal_strip(shape) else None


@dataclass(frozen=True)
class RectBound:
    rows: int
    cols: int

    def __contains__(self, lam) -> bool:
        lam = Partition(lam)
        return lam.length <= self.rows and lam.part(1) <= self.cols


@dataclass(frozen=True)
class HookBound:
    m: int
    n: int

    def __contains__(self, lam) -> bool:
        return Partition(lam).part(self.m + 1) <= self.n


def _partitions_desc(w: int, max_part: int, max_len: int | None) -> Iterator[tuple]:
    if w == 0:
        yield ()
        return
    if max_len == 0:
        return
    rest_len = None if max_len is None else max_len - 1
    for first in range(min(w, max_part), 0, -1):
        for tail in _partitions_desc(w - first, first, rest_len):
            yield (first,) + tail


def partitions_of(w: int, max_part: int | None = None, max_len: int | None = None) -> list[Partition]:
    """Partitions of ``w`` with bounded parts and length, lexicographically ascending."""
    if w < 0:
        return []
    cap = w if max_part is None else max_part
    return sorted(Partition(t) for t in _partitions_desc(w, cap, max_len))


def sort_partitions(parts: Iterable[Partition]) -> list[Partition]:
    return sorted((Partition(x) for x in parts), key=Partition.sort_key)


def enumerate_in_rect(bound: RectBound) -> list[Partition]:
    out = []
    for w in range(bound.rows * bound.cols + 1):
        out.extend(partitions_of(w, bound.cols, bound.rows))
    return out


def enumerate_in_hook_by_weight(bound: HookBound, max_part: int | None, w: int) -> list[Partition]:
    if w < 0:
        raise ValueError("weight must be non-negative")
    return [lam for lam in partitions_of(w, max_part) if lam in bound]


def subpartitions(lam: Iterable[int]) -> list[Partition]:
    """All mu with mu contained in lam."""
    lam = Partition(lam)
    out = []

    def rec(i: int, cap: int, acc: list[int]):
        if i == len(lam):
            out.append(Partition(acc))
            return
        for v in range(min(cap, lam[i]), -1, -1):
            rec(i + 1, v, acc + [v])
            if v == 0:
                break

    rec(0, lam.part(1), [])
    return sort_partitions(out)


def is_doubled(lam: Iterable[int]) -> bool:
    """Membership in B: every part value occurs an even number of times."""
    lam = Partition(lam)
    return all(len(list(g)) % 2 == 0 for _, g in itertools.groupby(lam))


def doubled_core(lam: Iterable[int]) -> Partition:
    """The unique nu in B with lam/nu a horizontal strip.

    Interlacing lam_1 >= nu_1 >= lam_2 >= nu_2 >= ... together with
    nu_{2i-1} = nu_{2i} pins nu = (lam_2, lam_2, lam_4, lam_4, ...).
    """
    lam = Partition(lam)
    return Partition(lam.part(2 * (i // 2) + 2) for i in range(len(lam)))


def strip_excess(lam: Iterable[int]) -> int:
    """The r with lam in B_r, i.e. lam_1 - lam_2 + lam_3 - ..."""
    lam = Partition(lam)
    return sum(x if i % 2 == 0 else -x for i, x in enumerate(lam))


def in_Br(lam: Iterable[int], r: int) -> bool:
    return strip_excess(lam) == r


def attach_horizontal_strips(nu: Iterable[int], r: int, max_part: int | None = None) -> list[Partition]:
    """Every lam with lam/nu a horizontal strip of length r and lam_1 <= max_part."""
    nu = Partition(nu)
    out = []

    def rec(i: int, left: int, acc: list[int]):
        # row i (0-based) may grow up to the previous row of nu
        if i > len(nu):
            if left == 0:
                out.append(Partition(acc))
            return
        cap = nu[i - 1] if i > 0 else (nu.part(1) + left if max_part is None else max_part)
        base = nu.part(i + 1)
        for v in range(base, min(cap, base + left) + 1):
            rec(i + 1, left - (v - base), acc + [v])

    rec(0, r, [])
    return out


def enumerate_Br(
    bound: RectBound | HookBound,
    r: int,
    *,
    max_part: int | None = None,
    max_weight: int | None = None,
) -> list[Partition]:
    """Partitions inside ``bound`` obtained from B by attaching a horizontal strip of length r.

    Built literally: every doubled nu in the bound gets every strip of length
    r, and results outside the bound are dropped. A hook bound is unbounded,
    so ``max_weight`` is required there; labels are then complete through it.
    """
    if r < 0:
        raise ValueError("strip length must be non-negative")
    if isinstance(bound, RectBound):
        cap = bound.cols if max_part is None else min(bound.cols, max_part)
        cores = enumerate_in_rect(RectBound(bound.rows, cap))
    else:
        if max_weight is None:
            raise ValueError("a hook bound needs max_weight")
        cap = max_part
        cores = [nu for w in range(max_weight - r + 1)
                 for nu in enumerate_in_hook_by_weight(bound, max_part, w)]
    found = set()
    for nu in cores:
        if not is_doubled(nu):
            continue
        for lam in attach_horizontal_strips(nu, r, cap):
            if lam in bound and (max_weight is None or lam.weight <= max_weight):
                found.add(lam)
    return sort_partitions(found)
