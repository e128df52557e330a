"""Exact monomial expansions of Schur, skew Schur and supersymmetric Schur polynomials.

Expansions are built by enumerating semistandard skew tableaux as chains of
horizontal strips: the boxes holding entry ``i`` form a horizontal strip, so
peeling the strip of the largest entry off the outer shape and recursing
gives every tableau exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping, Sequence

from .partitions import Partition, SkewShape, conjugate, subpartitions


@dataclass(frozen=True)
class MonomialExpansion:
    """Sparse Laurent polynomial in ``m`` x-variables followed by ``n`` y-variables.

    ``terms`` maps exponent tuples of length m+n to nonzero integers.
    """

    m: int
    n: int = 0
    terms: Mapping[tuple, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, c in self.terms.items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars:
                raise ValueError(f"exponent {exp} does not have {self.nvars} entries")
            if c:
                clean[exp] = int(c)
        object.__setattr__(self, "terms", dict(sorted(clean.items())))

    @property
    def nvars(self) -> int:
        return self.m + self.n

    @classmethod
    def one(cls, m: int, n: int = 0) -> "MonomialExpansion":
        return cls(m, n, {(0,) * (m + n): 1})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MonomialExpansion):
            return NotImplemented
        return (self.m, self.n) == (other.m, other.n) and self.terms == other.terms

    def __hash__(self):
        return hash((self.m, self.n, tuple(self.terms.items())))

    def _check(self, other: "MonomialExpansion"):
        if (self.m, self.n) != (other.m, other.n):
            raise ValueError("variable counts differ")

    def __add__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MonomialExpansion(self.m, self.n, out)

    def __neg__(self) -> "MonomialExpansion":
        return MonomialExpansion(self.m, self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MonomialExpansion") -> "MonomialExpansion":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return MonomialExpansion(self.m, self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[tuple, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MonomialExpansion(self.m, self.n, out)

    __rmul__ = __mul__

    def shift(self, exps: Sequence[int]) -> "MonomialExpansion":
        """Multiply by the monomial with exponent vector ``exps``."""
        return MonomialExpansion(
            self.m, self.n,
            {tuple(a + b for a, b in zip(e, exps)): c for e, c in self.terms.items()},
        )

    def permute(self, perm: Sequence[int]) -> "MonomialExpansion":
        """Relabel variables: new exponent position i reads old position perm[i]."""
        return MonomialExpansion(
            self.m, self.n, {tuple(e[j] for j in perm): c for e, c in self.terms.items()}
        )

    def degrees(self) -> set[int]:
        return {sum(e) for e in self.terms}

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "MonomialExpansion":
        return cls(data["m"], data["n"], {tuple(t["exp"]): int(t["coef"]) for t in data["terms"]})


@dataclass(frozen=True)
class EvaluationPoint:
    x_values: tuple = ()
    y_values: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "x_values", tuple(Fraction(v) for v in self.x_values))
        object.__setattr__(self, "y_values", tuple(Fraction(v) for v in self.y_values))

    @classmethod
    def superdim(cls, m: int, n: int) -> "EvaluationPoint":
        return cls((1,) * m, (-1,) * n)


def evaluate(expansion: MonomialExpansion, point: EvaluationPoint) -> Fraction:
    if (len(point.x_values), len(point.y_values)) != (expansion.m, expansion.n):
        raise ValueError(
            f"point has {len(point.x_values)}|{len(point.y_values)} values, "
            f"expansion has {expansion.m}|{expansion.n} variables"
        )
    values = point.x_values + point.y_values
    total = Fraction(0)
    for exp, c in expansion.terms.items():
        term = Fraction(c)
        for v, e in zip(values, exp):
            term *= v ** e
        total += term
    return total


@lru_cache(maxsize=None)
def _skew_terms(outer: Partition, inner: Partition, n: int) -> tuple:
    if n == 0:
        return (((), 1),) if outer == inner else ()
    if any(h > n for h in SkewShape(outer, inner).column_heights()):
        return ()
    # nu runs over shapes with outer/nu a horizontal strip and inner inside nu
    ranges = [
        range(max(outer.part(i + 1), inner.part(i)), outer.part(i) + 1)
        for i in range(1, len(outer) + 1)
    ]
    out: dict[tuple, int] = {}
    size = outer.weight
    for nu in product(*ranges):
        nu = Partition(nu)
        strip = size - nu.weight
        for exp, c in _skew_terms(nu, inner, n - 1):
            key = exp + (strip,)
            out[key] = out.get(key, 0) + c
    return tuple(out.items())


def skew_schur_expand(shape: SkewShape, n: int) -> MonomialExpansion:
    if n < 0:
        raise ValueError("number of variables must be non-negative")
    if not isinstance(shape, SkewShape):
        raise TypeError("expected a SkewShape")
    return MonomialExpansion(n, 0, dict(_skew_terms(shape.outer, shape.inner, n)))


def schur_expand(lam: Iterable[int], n: int) -> MonomialExpansion:
    return skew_schur_expand(SkewShape(Partition(lam)), n)


@lru_cache(maxsize=None)
def _super_terms(lam: Partition, m: int, n: int) -> tuple:
    lam_c = conjugate(lam)
    out: dict[tuple, int] = {}
    for mu in subpartitions(lam):
        if mu.length > m:
            continue
        xs = _skew_terms(mu, Partition(), m)
        if not xs:
            continue
        ys = _skew_terms(lam_c, conjugate(mu), n)
        for ex, cx in xs:
            for ey, cy in ys:
                key = ex + ey
                out[key] = out.get(key, 0) + cx * cy
    return tuple(out.items())


def super_schur_expand(lam: Iterable[int], m: int, n: int) -> MonomialExpansion:
    """s_lam(x|y) = sum over mu inside lam of s_mu(x) * s_{lam'/mu'}(y)."""
    if m < 0 or n < 0:
        raise ValueError("variable counts must be non-negative")
    return MonomialExpansion(m, n, dict(_super_terms(Partition(lam), m, n)))


def cancellation_substitute(expansion: MonomialExpansion) -> MonomialExpansion:
    """Substitute x_1 = t, y_1 = -t.

    Returns a polynomial in (t, x_2..x_m | y_2..y_n); t sits in the first
    x-slot. Requires m, n >= 1.
    """
    m, n = expansion.m, expansion.n
    if m < 1 or n < 1:
        raise ValueError("need at least one x- and one y-variable")
    out: dict[tuple, int] = {}
    for exp, c in expansion.terms.items():
        ex, ey = exp[:m], exp[m:]
        key = (ex[0] + ey[0],) + ex[1:] + ey[1:]
        out[key] = out.get(key, 0) + c * (-1) ** ey[0]
    return MonomialExpansion(m, n - 1, out)


def dim_gl(lam: Iterable[int], n: int) -> int:
    """Weyl dimension of the gl(n) irreducible with highest weight lam."""
    lam = Partition(lam)
    if lam.length > n:
        return 0
    num = den = 1
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            num *= lam.part(i) - lam.part(j) + j - i
            den *= j - i
    return num // den


def count_skew_tableaux(shape: SkewShape, n: int) -> int:
    return sum(c for _, c in _skew_terms(shape.outer, shape.inner, n))


def dim_gl_covariant(lam: Iterable[int], m: int, n: int) -> int:
    """Dimension of the covariant gl(m|n) module: s_lam(1,...,1|1,...,1)."""
    lam = Partition(lam)
    lam_c = conjugate(lam)
    return sum(
        dim_gl(mu, m) * count_skew_tableaux(SkewShape(lam_c, conjugate(mu)), n)
        for mu in subpartitions(lam) if mu.length <= m
    )


def sdim_gl_covariant(lam: Iterable[int], m: int, n: int) -> int:
    lam = Partition(lam)
    if m > n:
        return dim_gl(lam, m - n)
    if n > m:
        return (-1) ** lam.weight * dim_gl(conjugate(lam), n - m)
    return 1 if not lam else 0
