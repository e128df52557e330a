"""Character sums for the [0,...,0,p] and [0,...,0,r,p-r] families.

A ``CharacterSum`` records the monomial prefactor (doubled exponents, one per
variable) and the set of Schur labels. Families with infinitely many labels
are truncated by weight: the label set is complete through the cutoff.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping

from .partitions import (
    HookBound,
    Partition,
    RectBound,
    enumerate_Br,
    enumerate_in_hook_by_weight,
    enumerate_in_rect,
    is_doubled,
    partitions_of,
    sort_partitions,
)
from .symfunc import MonomialExpansion, dim_gl, dim_gl_covariant, schur_expand, sdim_gl_covariant, super_schur_expand


class Family(str, enum.Enum):
    SO_ODD = "soOdd"
    SO_EVEN = "soEven"
    OSP1 = "osp1"
    OSP_B = "ospB"
    OSP_D = "ospD"
    OSP_D_CONJECTURE = "ospDConjecture"

    @property
    def is_super(self) -> bool:
        return self in (Family.OSP_B, Family.OSP_D, Family.OSP_D_CONJECTURE)


class Mode(str, enum.Enum):
    DIM = "dim"
    SDIM = "sdim"


@dataclass(frozen=True)
class CharacterSum:
    family: Family
    params: Mapping[str, int]
    shift2: tuple
    labels: tuple
    cutoff: int | None = None  # None: the label set is finite and complete

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        object.__setattr__(self, "params", dict(self.params))
        object.__setattr__(self, "labels", tuple(sort_partitions(self.labels)))

    @property
    def num_x(self) -> int:
        p = self.params
        if self.family in (Family.SO_ODD, Family.OSP1):
            return p["n"]
        if self.family is Family.SO_EVEN:
            return p["k"]
        return p["m"]

    @property
    def num_y(self) -> int:
        return self.params["n"] if self.family.is_super else 0

    def schur_sum(self) -> MonomialExpansion:
        """Sum of s_lam (or s_lam(x|y)) over the labels, prefactor dropped."""
        total = MonomialExpansion(self.num_x, self.num_y)
        for lam in self.labels:
            if self.family.is_super:
                total = total + super_schur_expand(lam, self.num_x, self.num_y)
            else:
                total = total + schur_expand(lam, self.num_x)
        return total

    def to_json(self) -> dict:
        return {
            "family": self.family.value,
            "params": dict(self.params),
            "shift2": list(self.shift2),
            "cutoff": self.cutoff,
            "labels": [list(lam) for lam in self.labels],
        }


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series in t known exactly through degree ``cutoff``."""

    coeffs: tuple = field(default=(0,))

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a series carries at least the constant coefficient")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int, cutoff: int) -> "TruncatedSeries":
        return cls((c,) + (0,) * cutoff)

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]

    def _check(self, other: "TruncatedSeries"):
        if self.cutoff != other.cutoff:
            raise ValueError(f"cutoffs differ: {self.cutoff} vs {other.cutoff}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def negate_variable(self) -> "TruncatedSeries":
        """t -> -t"""
        return TruncatedSeries(tuple((-1) ** i * c for i, c in enumerate(self.coeffs)))

    def truncate(self, cutoff: int) -> "TruncatedSeries":
        if cutoff > self.cutoff:
            raise ValueError(f"series only known through degree {self.cutoff}")
        return TruncatedSeries(self.coeffs[: cutoff + 1])

    def to_json(self) -> dict:
        return {"cutoff": self.cutoff, "coeffs": [str(c) for c in self.coeffs]}


def _need(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def char_so_odd(n: int, p: int) -> CharacterSum:
    """[0,...,0,p] of so(2n+1): every partition in the n x p rectangle."""
    _need(n >= 1 and p >= 0, "so_odd needs n >= 1, p >= 0")
    return CharacterSum(Family.SO_ODD, {"n": n, "p": p}, (-p,) * n,
                        tuple(enumerate_in_rect(RectBound(n, p))))


def effective_strip(parity_source: int, p: int, r: int) -> int:
    """B_r for an even parity source, B_{p-r} for an odd one."""
    return r if parity_source % 2 == 0 else p - r


def char_so_even_theorem(k: int, p: int, r: int) -> CharacterSum:
    """[0,...,0,r,p-r] of so(2k)."""
    _need(k >= 2, "so_even needs k >= 2")
    _need(0 <= r <= p, f"r={r} outside 0..{p}")
    labels = enumerate_Br(RectBound(k, p), effective_strip(k, p, r))
    return CharacterSum(Family.SO_EVEN, {"k": k, "p": p, "r": r}, (-p,) * k, tuple(labels))


def char_osp1(n: int, p: int, D: int) -> CharacterSum:
    """[0,...,0,-p] of osp(1|2n), truncated at weight D."""
    _need(n >= 1 and p >= 1 and D >= 0, "osp1 needs n >= 1, p >= 1, D >= 0")
    max_len = min(n, p)
    labels = [lam for w in range(D + 1) for lam in partitions_of(w, max_len=max_len)]
    return CharacterSum(Family.OSP1, {"n": n, "p": p}, (p,) * n, tuple(labels), D)


def _hook_labels(m: int, n: int, p: int, D: int) -> list[Partition]:
    return [lam for w in range(D + 1) for lam in enumerate_in_hook_by_weight(HookBound(m, n), p, w)]


def _osp_shift(m: int, n: int, p: int) -> tuple:
    return (-p,) * m + (p,) * n


def char_B(m: int, n: int, p: int, D: int) -> CharacterSum:
    """[0,...,0,p] of osp(2m+1|2n), truncated at weight D."""
    _need(m >= 0 and n >= 0 and p >= 1 and D >= 0, "ospB needs m, n >= 0, p >= 1, D >= 0")
    return CharacterSum(Family.OSP_B, {"m": m, "n": n, "p": p}, _osp_shift(m, n, p),
                        tuple(_hook_labels(m, n, p, D)), D)


def char_D(m: int, n: int, p: int, D: int) -> CharacterSum:
    """[0,...,0,p] of osp(2m|2n): the doubled labels of char_B."""
    _need(m >= 0 and n >= 0 and p >= 1 and D >= 0, "ospD needs m, n >= 0, p >= 1, D >= 0")
    labels = [lam for lam in _hook_labels(m, n, p, D) if is_doubled(lam)]
    return CharacterSum(Family.OSP_D, {"m": m, "n": n, "p": p}, _osp_shift(m, n, p), tuple(labels), D)


def char_D_conjecture(m: int, n: int, p: int, r: int, D: int) -> CharacterSum:
    """Conjectured [0,...,0,r,p-r] of osp(2m|2n)."""
    _need(m >= 0 and n >= 0 and p >= 1 and D >= 0, "ospDConjecture needs m, n >= 0, p >= 1, D >= 0")
    _need(0 <= r <= p, f"r={r} outside 0..{p}")
    labels = enumerate_Br(HookBound(m, n), effective_strip(abs(m - n), p, r), max_part=p, max_weight=D)
    return CharacterSum(Family.OSP_D_CONJECTURE, {"m": m, "n": n, "p": p, "r": r},
                        _osp_shift(m, n, p), tuple(labels), D)


def t_series(cs: CharacterSum, mode: Mode | str, D: int) -> TruncatedSeries:
    """Specialize x_i -> t and y_j -> t (dim) or -t (sdim), prefactor dropped."""
    mode = Mode(mode)
    _need(D >= 0, "degree must be non-negative")
    if cs.cutoff is not None and D > cs.cutoff:
        raise ValueError(f"labels are only complete through weight {cs.cutoff}")
    if mode is Mode.SDIM and not cs.family.is_super:
        raise ValueError(f"superdimension is undefined for the non-super family {cs.family.value}")
    coeffs = [0] * (D + 1)
    for lam in cs.labels:
        if lam.weight > D:
            continue
        if not cs.family.is_super:
            c = dim_gl(lam, cs.num_x)
        elif mode is Mode.SDIM:
            c = sdim_gl_covariant(lam, cs.num_x, cs.num_y)
        else:
            c = dim_gl_covariant(lam, cs.num_x, cs.num_y)
        coeffs[lam.weight] += c
    return TruncatedSeries(tuple(coeffs))


def build(family: Family | str, *, m=None, n=None, k=None, p=None, r=None, D=None) -> CharacterSum:
    """Dispatch by family name; used by the command line."""
    family = Family(family)

    def req(name, value):
        if value is None:
            raise ValueError(f"family {family.value} needs --{name}")
        return value

    if family is Family.SO_ODD:
        return char_so_odd(req("n", n), req("p", p))
    if family is Family.SO_EVEN:
        return char_so_even_theorem(req("k", k), req("p", p), req("r", r))
    if family is Family.OSP1:
        return char_osp1(req("n", n), req("p", p), req("degree", D))
    if family is Family.OSP_B:
        return char_B(req("m", m), req("n", n), req("p", p), req("degree", D))
    if family is Family.OSP_D:
        return char_D(req("m", m), req("n", n), req("p", p), req("degree", D))
    return char_D_conjecture(req("m", m), req("n", n), req("p", p), req("r", r), req("degree", D))
