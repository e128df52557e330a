"""Weyl character formula for so(2k+1) and so(2k), used as an independent oracle.

Weights are handled in doubled coordinates (2 * epsilon-basis coordinates) so
that spinor weights stay integral. Characters are computed as the exact
quotient of the alternating sums over the Weyl group, with x_i = e^{eps_i}.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import prod
from typing import Iterable, Sequence

from .symfunc import EvaluationPoint, MonomialExpansion, evaluate


class WeylDivisionError(ArithmeticError):
    """Numerator not divisible by the Weyl denominator; always a bug."""


class Kind(str, enum.Enum):
    B = "B"
    D = "D"


@dataclass(frozen=True)
class HalfWeight:
    doubled: tuple

    def __post_init__(self):
        d = tuple(int(v) for v in self.doubled)
        if d and len({v % 2 for v in d}) > 1:
            raise ValueError(f"mixed parity doubled weight {d}")
        object.__setattr__(self, "doubled", d)

    @classmethod
    def from_coords(cls, coords: Iterable) -> "HalfWeight":
        doubled = []
        for c in coords:
            c2 = Fraction(c) * 2
            if c2.denominator != 1:
                raise ValueError(f"{c} is not a half-integer")
            doubled.append(int(c2))
        return cls(tuple(doubled))

    @property
    def k(self) -> int:
        return len(self.doubled)

    @property
    def coords(self) -> tuple:
        return tuple(Fraction(v, 2) for v in self.doubled)


@dataclass(frozen=True)
class SignedPermutation:
    perm: tuple
    signs: tuple

    @property
    def det(self) -> int:
        inversions = sum(
            1 for i, j in itertools.combinations(range(len(self.perm)), 2)
            if self.perm[i] > self.perm[j]
        )
        return (-1) ** inversions * prod(self.signs)

    def act(self, v: Sequence[int]) -> tuple:
        return tuple(s * v[p] for s, p in zip(self.signs, self.perm))


@dataclass(frozen=True)
class ShiftedCharacter:
    """Character multiplied by (x_1...x_k)^{shift2/2}, leaving non-negative exponents."""

    expansion: MonomialExpansion
    shift2: int

    def to_json(self) -> dict:
        return {**self.expansion.to_json(), "shift2": self.shift2}


@lru_cache(maxsize=None)
def weyl_group(kind: Kind | str, k: int) -> tuple:
    kind = Kind(kind)
    if k < 1 or (kind is Kind.D and k < 2):
        raise ValueError(f"rank {k} not supported for type {kind.value}")
    out = []
    for perm in itertools.permutations(range(k)):
        for signs in itertools.product((1, -1), repeat=k):
            if kind is Kind.D and prod(signs) != 1:
                continue
            out.append(SignedPermutation(perm, signs))
    return tuple(out)


def rho_doubled(kind: Kind | str, k: int) -> tuple:
    if Kind(kind) is Kind.B:
        return tuple(2 * (k - i) - 1 for i in range(k))
    return tuple(2 * (k - i - 1) for i in range(k))


def positive_roots(kind: Kind | str, k: int) -> list[tuple]:
    roots = []
    for i, j in itertools.combinations(range(k), 2):
        for s in (-1, 1):
            r = [0] * k
            r[i], r[j] = 1, s
            roots.append(tuple(r))
    if Kind(kind) is Kind.B:
        for i in range(k):
            r = [0] * k
            r[i] = 1
            roots.append(tuple(r))
    return roots


def is_dominant(kind: Kind | str, hw: HalfWeight) -> bool:
    d = hw.doubled
    if any(a < b for a, b in zip(d, d[1:-1] if Kind(kind) is Kind.D else d[1:])):
        return False
    if Kind(kind) is Kind.B:
        return not d or d[-1] >= 0
    return len(d) < 2 or d[-2] >= abs(d[-1])


def _check(kind: Kind, k: int, hw: HalfWeight):
    if hw.k != k:
        raise ValueError(f"weight {hw.coords} has length {hw.k}, expected {k}")
    if not is_dominant(kind, hw):
        raise ValueError(f"weight {[str(c) for c in hw.coords]} is not dominant for {kind.value}{k}")


def alternant(kind: Kind | str, v: Sequence[int]) -> MonomialExpansion:
    """Sum over the Weyl group of det(w) x^{w v}, exponents as given (doubled)."""
    kind = Kind(kind)
    out: dict[tuple, int] = {}
    for w in weyl_group(kind, len(v)):
        e = w.act(v)
        out[e] = out.get(e, 0) + w.det
    return MonomialExpansion(len(v), 0, out)


def divide_exact(num: MonomialExpansion, den: MonomialExpansion) -> MonomialExpansion:
    """Laurent quotient by leading-term elimination in lex order.

    Raises WeylDivisionError when the remainder's lead would fall below the
    lowest possible quotient term or a coefficient does not divide.
    """
    if not den:
        raise ZeroDivisionError("division by the zero polynomial")
    k = num.nvars
    d_lead = max(den.terms)
    d_coef = den.terms[d_lead]
    quotient: dict[tuple, int] = {}
    rem = dict(num.terms)
    floor = tuple(a - b for a, b in zip(min(num.terms), min(den.terms))) if rem else None
    while rem:
        lead = max(rem)
        e = tuple(a - b for a, b in zip(lead, d_lead))
        if e < floor:
            raise WeylDivisionError(f"nonzero remainder with leading exponent {lead}")
        q, r = divmod(rem[lead], d_coef)
        if r:
            raise WeylDivisionError(f"coefficient {rem[lead]} not divisible by {d_coef}")
        quotient[e] = q
        for de, dc in den.terms.items():
            key = tuple(a + b for a, b in zip(e, de))
            c = rem.get(key, 0) - q * dc
            if c:
                rem[key] = c
            else:
                rem.pop(key, None)
    out = MonomialExpansion(k, 0, quotient)
    if out * den != num:
        raise WeylDivisionError("quotient times denominator does not reproduce the numerator")
    return out


def weyl_character(kind: Kind | str, k: int, hw: HalfWeight) -> ShiftedCharacter:
    kind = Kind(kind)
    _check(kind, k, hw)
    rho = rho_doubled(kind, k)
    num = alternant(kind, tuple(a + b for a, b in zip(hw.doubled, rho)))
    den = alternant(kind, rho)
    quotient = divide_exact(num, den)
    # every weight lies in the box [-hw_1, hw_1]^k
    shift2 = hw.doubled[0] if k else 0
    terms = {}
    for e, c in quotient.terms.items():
        shifted = [x + shift2 for x in e]
        if any(x < 0 or x % 2 for x in shifted):
            raise WeylDivisionError(f"weight {e} (doubled) escapes the shift {shift2}")
        terms[tuple(x // 2 for x in shifted)] = c
    return ShiftedCharacter(MonomialExpansion(k, 0, terms), shift2)


def weyl_dim(kind: Kind | str, k: int, hw: HalfWeight) -> int:
    kind = Kind(kind)
    _check(kind, k, hw)
    rho = rho_doubled(kind, k)
    shifted = [a + b for a, b in zip(hw.doubled, rho)]
    num = den = 1
    for alpha in positive_roots(kind, k):
        num *= sum(a * b for a, b in zip(alpha, shifted))
        den *= sum(a * b for a, b in zip(alpha, rho))
    q = Fraction(num, den)
    if q.denominator != 1:
        raise WeylDivisionError(f"non-integral dimension {q}")
    return int(q)


def character_dim(ch: ShiftedCharacter) -> int:
    return int(evaluate(ch.expansion, EvaluationPoint((1,) * ch.expansion.m)))
