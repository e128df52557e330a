"""Exact checks of the character, branching and superdimension identities.

Every check returns a ``VerificationReport``. A failing report always carries
a witness: the first differing monomial, series coefficient, or label.
"""

from __future__ import annotations

import enum
import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Any

from .characters import (
    TruncatedSeries,
    char_B,
    char_D,
    char_D_conjecture,
    char_osp1,
    char_so_even_theorem,
    char_so_odd,
    effective_strip,
    t_series,
)
from .partitions import (
    HookBound,
    RectBound,
    enumerate_Br,
    enumerate_in_hook_by_weight,
    enumerate_in_rect,
    is_doubled,
    sort_partitions,
)
from .symfunc import (
    EvaluationPoint,
    MonomialExpansion,
    dim_gl,
    evaluate,
    sdim_gl_covariant,
    super_schur_expand,
)
from .weyl import HalfWeight, Kind, ShiftedCharacter, character_dim, weyl_character, weyl_dim


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EVIDENCE_PASS = "evidence-pass"

    @property
    def ok(self) -> bool:
        return self is not Status.FAIL


@dataclass
class VerificationReport:
    identity: str
    params: dict
    status: Status
    witness: Any = None
    details: dict = field(default_factory=dict)
    elapsed_ms: float = 0.0

    def __post_init__(self):
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError("a failing report needs a witness")

    @property
    def ok(self) -> bool:
        return self.status.ok

    def to_json(self, timing: bool = True) -> dict:
        out = {
            "identity": self.identity,
            "params": self.params,
            "status": self.status.value,
            "witness": self.witness,
            "details": self.details,
        }
        if timing:
            out["ms"] = round(self.elapsed_ms, 3)
        return out


class _Checker:
    """Collects the first failure of a sequence of comparisons."""

    def __init__(self, identity: str, params: dict):
        self.identity = identity
        self.params = params
        self.witness = None
        self.details: dict = {}
        self._t0 = time.perf_counter()

    def fail(self, witness):
        if self.witness is None:
            self.witness = witness

    def expansions(self, label: str, left: MonomialExpansion, right: MonomialExpansion):
        if left == right:
            return
        for exp in sorted(set(left.terms) | set(right.terms)):
            a, b = left.terms.get(exp, 0), right.terms.get(exp, 0)
            if a != b:
                self.fail({"check": label, "monomial": list(exp), "left": str(a), "right": str(b)})
                return
        self.fail({"check": label, "reason": "variable counts differ"})

    def series(self, label: str, left: TruncatedSeries, right: TruncatedSeries):
        for i, (a, b) in enumerate(zip(left.coeffs, right.coeffs)):
            if a != b:
                self.fail({"check": label, "degree": i, "left": str(a), "right": str(b)})
                return
        if left.cutoff != right.cutoff:
            self.fail({"check": label, "reason": "cutoffs differ"})

    def equal(self, label: str, left, right):
        if left != right:
            self.fail({"check": label, "left": _jsonable(left), "right": _jsonable(right)})

    def report(self, success: Status = Status.PASS) -> VerificationReport:
        status = success if self.witness is None else Status.FAIL
        return VerificationReport(
            self.identity, self.params, status, self.witness, self.details,
            (time.perf_counter() - self._t0) * 1000,
        )


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, int) and not isinstance(v, bool):
        return v if abs(v) < 2**53 else str(v)
    return v


def so_even_weight(k: int, p: int, r: int) -> HalfWeight:
    """Highest weight of [0,...,0,r,p-r] for so(2k): (p/2,...,p/2, p/2-r)."""
    return HalfWeight((p,) * (k - 1) + (p - 2 * r,))


def so_odd_weight(k: int, p: int) -> HalfWeight:
    """Highest weight of [0,...,0,p] for so(2k+1): (p/2,...,p/2)."""
    return HalfWeight((p,) * k)


def _oracle(chk: _Checker, kind: Kind, k: int, hw: HalfWeight, tag: str) -> ShiftedCharacter:
    """Weyl character plus the dimension cross-check; division is re-verified inside."""
    ch = weyl_character(kind, k, hw)
    dim = weyl_dim(kind, k, hw)
    chk.equal(f"{tag}: weyl_dim vs character at ones", dim, character_dim(ch))
    return ch


def _validate(cond: bool, msg: str):
    if not cond:
        raise ValueError(msg)


def verify_theorem(k: int, p: int, r: int) -> VerificationReport:
    _validate(k >= 2 and p >= 0 and 0 <= r <= p, "theorem needs k >= 2, 0 <= r <= p")
    chk = _Checker("theorem", {"k": k, "p": p, "r": r})
    cs = char_so_even_theorem(k, p, r)
    ch = _oracle(chk, Kind.D, k, so_even_weight(k, p, r), "D")
    chk.equal("prefactor", list(cs.shift2), [-ch.shift2] * k)
    chk.expansions("schur sum vs weyl", cs.schur_sum(), ch.expansion)
    chk.details = {
        "labels": [list(lam) for lam in cs.labels],
        "strip": effective_strip(k, p, r),
        "dim": character_dim(ch),
    }
    return chk.report()


def verify_e28(k: int, p: int) -> VerificationReport:
    _validate(k >= 2 and p >= 0, "e28 needs k >= 2, p >= 0")
    chk = _Checker("e28", {"k": k, "p": p})
    odd = _oracle(chk, Kind.B, k, so_odd_weight(k, p), "B")
    total = MonomialExpansion(k)
    parts = []
    for r in range(p + 1):
        ch = _oracle(chk, Kind.D, k, so_even_weight(k, p, r), f"D r={r}")
        chk.equal(f"shift r={r}", ch.shift2, odd.shift2)
        total = total + ch.expansion
        parts.append(character_dim(ch))
    chk.expansions("weyl B vs sum of weyl D", odd.expansion, total)

    rect = char_so_odd(k, p)
    chk.expansions("weyl B vs rectangle schur sum", odd.expansion, rect.schur_sum())
    pieces = Counter()
    for r in range(p + 1):
        pieces.update(char_so_even_theorem(k, p, r).labels)
    extra = sorted(lam for lam, c in pieces.items() if c != 1 or lam not in set(rect.labels))
    missing = [lam for lam in rect.labels if lam not in pieces]
    if extra or missing:
        chk.fail({"check": "label union", "extra": [list(x) for x in extra],
                  "missing": [list(x) for x in missing]})
    chk.details = {"dim": character_dim(odd), "parts": parts}
    return chk.report()


def verify_union_property(k: int, p: int) -> VerificationReport:
    _validate(k >= 0 and p >= 0, "union needs k, p >= 0")
    chk = _Checker("union", {"k": k, "p": p})
    bound = RectBound(k, p)
    seen: dict = {}
    for r in range(p + 1):
        for lam in enumerate_Br(bound, r):
            if lam in seen:
                chk.fail({"check": "disjoint", "label": list(lam), "r": [seen[lam], r]})
            seen[lam] = r
    for lam in enumerate_in_rect(bound):
        if lam not in seen:
            chk.fail({"check": "exhaustive", "label": list(lam)})
    chk.details = {"sizes": [sum(1 for v in seen.values() if v == r) for r in range(p + 1)]}
    return chk.report()


class SuperdimCase(str, enum.Enum):
    B_EQUAL = "case1"
    B_MORE_X = "case2"
    B_MORE_Y = "case3"
    D_CASE = "caseD"


def doubled_rect_series(k: int, p: int, D: int) -> TruncatedSeries:
    """Sum of dim gl(k) t^|lam| over doubled lam in the k x p rectangle."""
    coeffs = [0] * (D + 1)
    for lam in enumerate_in_rect(RectBound(k, p)):
        if is_doubled(lam) and lam.weight <= D:
            coeffs[lam.weight] += dim_gl(lam, k)
    return TruncatedSeries(tuple(coeffs))


def verify_superdim_case(case: SuperdimCase | str, *, p: int, D: int, m: int | None = None,
                         n: int | None = None, k: int | None = None) -> VerificationReport:
    case = SuperdimCase(case)
    _validate(p >= 1 and D >= 0, "need p >= 1 and D >= 0")
    if case is SuperdimCase.B_EQUAL:
        _validate(n is not None and n >= 1, "case1 needs n >= 1")
        chk = _Checker(case.value, {"n": n, "p": p, "degree": D})
        lhs = t_series(char_B(n, n, p, D), "sdim", D)
        chk.series("sdim osp(2n+1|2n) vs 1", lhs, TruncatedSeries.constant(1, D))
    elif case is SuperdimCase.B_MORE_X:
        _validate(n is not None and k is not None and n >= 1 and k >= 1, "case2 needs n, k >= 1")
        chk = _Checker(case.value, {"n": n, "k": k, "p": p, "degree": D})
        lhs = t_series(char_B(n + k, n, p, D), "sdim", D)
        rhs = t_series(char_so_odd(k, p), "dim", D)
        chk.series("sdim osp(2n+2k+1|2n) vs dim so(2k+1)", lhs, rhs)
        if any(c < 0 for c in lhs.coeffs):
            chk.fail({"check": "non-negative coefficients", "coeffs": list(lhs.coeffs)})
    elif case is SuperdimCase.B_MORE_Y:
        _validate(m is not None and k is not None and m >= 1 and k >= 1, "case3 needs m, k >= 1")
        chk = _Checker(case.value, {"m": m, "k": k, "p": p, "degree": D})
        lhs = t_series(char_B(m, m + k, p, D), "sdim", D)
        rhs = t_series(char_osp1(k, p, D), "dim", D).negate_variable()
        chk.series("sdim osp(2m+1|2m+2k) vs dim_{-t} osp(1|2k)", lhs, rhs)
        alternating = lhs.negate_variable()
        if any(c < 0 for c in alternating.coeffs):
            chk.fail({"check": "alternating signs", "coeffs": list(lhs.coeffs)})
    else:
        _validate(n is not None and k is not None and n >= 1 and k >= 1, "caseD needs n, k >= 1")
        chk = _Checker(case.value, {"n": n, "k": k, "p": p, "degree": D})
        lhs = t_series(char_D(n + k, n, p, D), "sdim", D)
        chk.series("sdim osp(2n+2k|2n) vs doubled rectangle sum", lhs, doubled_rect_series(k, p, D))
        if k >= 2:
            # [0,...,0,p] for k even, [0,...,0,p,0] for k odd
            r = 0 if k % 2 == 0 else p
            rhs = t_series(char_so_even_theorem(k, p, r), "dim", D)
            chk.series("sdim osp(2n+2k|2n) vs dim so(2k)", lhs, rhs)
            chk.details["so_even_r"] = r
    chk.details["lhs"] = [str(c) for c in lhs.coeffs]
    return chk.report()


def verify_dim_sdim_law(m: int, n: int, max_weight: int) -> VerificationReport:
    _validate(m >= 0 and n >= 0 and max_weight >= 0, "need m, n, max_weight >= 0")
    chk = _Checker("dimsdim", {"m": m, "n": n, "max_weight": max_weight})
    point = EvaluationPoint.superdim(m, n)
    checked = 0
    for w in range(max_weight + 1):
        for lam in enumerate_in_hook_by_weight(HookBound(m, n), None, w):
            value = evaluate(super_schur_expand(lam, m, n), point)
            closed = sdim_gl_covariant(lam, m, n)
            if value != closed:
                chk.fail({"check": "sdim", "label": list(lam), "left": str(closed), "right": str(value)})
            checked += 1
    chk.details = {"labels_checked": checked}
    return chk.report()


def verify_conjecture_evidence(m: int, n: int, p: int, D: int) -> VerificationReport:
    """Consistency evidence for the conjectured osp(2m|2n) characters; never a plain pass."""
    _validate(m >= 0 and n >= 0 and p >= 1 and D >= 0, "need m, n >= 0, p >= 1, D >= 0")
    chk = _Checker("conjecture", {"m": m, "n": n, "p": p, "degree": D})
    ran = []

    # (a) at n = 0 the conjectured labels are those of the so(2m) characters
    for r in range(p + 1):
        at_zero = char_D_conjecture(m, 0, p, r, D).labels
        if m >= 2:
            expected = [lam for lam in char_so_even_theorem(m, p, r).labels if lam.weight <= D]
            theorem = verify_theorem(m, p, r)
            if not theorem.ok:
                chk.fail({"check": "reduction: theorem", "r": r, "witness": theorem.witness})
        else:
            expected = [lam for lam in enumerate_Br(RectBound(m, p), effective_strip(m, p, r))
                        if lam.weight <= D]
        chk.equal(f"reduction r={r}", [list(x) for x in at_zero], [list(x) for x in expected])
    ran.append("reduction")

    # (b) the pieces r = 0..p tile the labels of the osp(2m+1|2n) character
    pieces = Counter()
    for r in range(p + 1):
        pieces.update(char_D_conjecture(m, n, p, r, D).labels)
    full = char_B(m, n, p, D).labels
    repeated = sort_partitions(lam for lam, c in pieces.items() if c > 1)
    if repeated:
        chk.fail({"check": "union: disjoint", "labels": [list(x) for x in repeated]})
    chk.equal("union: exhaustive", [list(x) for x in sort_partitions(pieces)], [list(x) for x in full])
    ran.append("union")

    # (c) superdimension matches so(2k) when m = n + k
    if m >= n:
        k = m - n
        for r in range(p + 1):
            lhs = t_series(char_D_conjecture(m, n, p, r, D), "sdim", D)
            coeffs = [0] * (D + 1)
            for lam in enumerate_Br(RectBound(k, p), effective_strip(k, p, r)):
                if lam.weight <= D:
                    coeffs[lam.weight] += dim_gl(lam, k)
            chk.series(f"sdim r={r}", lhs, TruncatedSeries(tuple(coeffs)))
        ran.append("sdim")
    chk.details = {"parity": "even" if (m - n) % 2 == 0 else "odd", "subchecks": ran}
    return chk.report(Status.EVIDENCE_PASS)
