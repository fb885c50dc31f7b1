"""Constrained random instances, per-theorem checkers, and bulk campaigns.

Every numbered inequality handled by the package has one TheoremId and one
checker.  A checker evaluates both sides of the inequality exactly as
displayed and reports the Loewner margin (lambda_min of the difference that
the statement claims is positive semidefinite; a scalar slack for the
information inequality; a two-sided margin for the homogeneity identity).

Hypothesis violations are never counted as failures: the checker reports
hypothesis_met=False with an explanation and an empty margin.  Genuine
violations are triaged by re-checking at tol=1e-6 and labeled "numerical"
(float noise) or "substantive" (a real counterexample, which would be a
finding).
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from enum import Enum

import numpy as np

from . import functions
from .bounds import chord_gap_bound, chord_ratio_bound, zeta_closed_forms
from .entropy import (
    OperatorField,
    PairSpectrum,
    field_from_json,
    field_to_json,
)
from .errors import (
    GenerationError,
    NotPositiveDefiniteError,
    PreconditionError,
    UndefinedRatioError,
)
from .functions import LOG, ScalarFunction, check_nonnegative_on, validate_declared_flags
from .maps import PositiveLinearMap, map_from_json, map_to_json
from .matcore import (
    DEFAULT_LOEWNER_TOL,
    PositiveDefiniteMatrix,
    _symmetrize,
    matrix_from_json,
    matrix_to_json,
    sandwich_bounds,
)

__all__ = [
    "TheoremId",
    "THEOREM_NOTES",
    "VerificationResult",
    "Instance",
    "CampaignConfig",
    "TrialRecord",
    "TheoremSummary",
    "CampaignReport",
    "CHECKERS",
    "random_resolution",
    "random_instance",
    "check",
    "trial_seed",
    "run_trial",
    "campaign",
]


class TheoremId(Enum):
    """One enumerant per verified statement; the registry of checkers is total."""

    MEAN_INTEGRAL = "mean_integral"
    COMPRESSION_JENSEN = "compression_jensen"
    ENTROPY_LOWER = "entropy_lower"
    ENTROPY_NONNEG = "entropy_nonneg"
    ENTROPY_UPPER = "entropy_upper"
    KLEIN_UPPER = "klein_upper"
    INFO_INEQ = "info_ineq"
    SUBADDITIVE = "subadditive"
    HOMOGENEOUS = "homogeneous"
    JOINT_CONCAVE = "joint_concave"
    MAP_MONOTONE = "map_monotone"
    REV_JENSEN_GAMMA = "rev_jensen_gamma"
    REV_ENTROPY_GAMMA = "rev_entropy_gamma"
    REV_JENSEN_ZETA = "rev_jensen_zeta"
    REV_ENTROPY_ZETA = "rev_entropy_zeta"
    EXAMPLE_LOG_PAIR = "example_log_pair"


THEOREM_NOTES: dict[TheoremId, str] = {
    TheoremId.MEAN_INTEGRAL: "sum_s w_s (A_s #_p B_s) <= (sum w A) #_p (sum w B), p in [0,1]",
    TheoremId.COMPRESSION_JENSEN: "f(sum w C*XC + t0(I - sum w C*C)) >= sum w C*f(X)C + f(t0)(I - sum w C*C)",
    TheoremId.ENTROPY_LOWER: "f(W) - f(t0)(I - V) >= S_p with V = sum w A#_pB, W = sum w A#_{p+1}B + t0(I - V)",
    TheoremId.ENTROPY_NONNEG: "S_q >= 0 when f >= 0 on the encountered spectra",
    TheoremId.ENTROPY_UPPER: "S_q <= sum w (A#_{q+1}B - A#_qB) when f(t) <= t - 1",
    TheoremId.KLEIN_UPPER: "S(A|B) <= B - A (relative operator entropy, Klein bound)",
    TheoremId.INFO_INEQ: "sum_j a_j log(a_j/b_j) >= 0 for probability vectors, equality iff a = b",
    TheoremId.SUBADDITIVE: "S_0(FA+FB | FC+FD) >= S_0(FA|FC) + S_0(FB|FD) node-wise",
    TheoremId.HOMOGENEOUS: "S_q(alpha A | alpha B) = alpha S_q(A|B) for alpha > 0 (equality, two-sided)",
    TheoremId.JOINT_CONCAVE: "S_0(alpha P1 + beta P2) >= alpha S_0(P1) + beta S_0(P2), alpha + beta = 1",
    TheoremId.MAP_MONOTONE: "Phi(S_0(FA|FB)) <= S_0(Phi FA | Phi FB) for normalized positive Phi",
    TheoremId.REV_JENSEN_GAMMA: "f(lifted argument) <= gamma * [sum w C*f(X)C + f(t0)(I - sum w C*C)]",
    TheoremId.REV_ENTROPY_GAMMA: "f(W) - gamma f(t0)(I - V) <= gamma S_p",
    TheoremId.REV_JENSEN_ZETA: "f(lifted argument) <= sum w C*f(X)C + f(t0)(I - sum w C*C) + zeta I",
    TheoremId.REV_ENTROPY_ZETA: "f(W) - f(t0)(I - V) <= S_p + zeta I",
    TheoremId.EXAMPLE_LOG_PAIR: "closed-form gap bounds for log t and -t log t in the reverse entropy bound",
}

# Theorems whose hypotheses include sum w A = sum w B = I and m < 1 < M.
_NORMALIZED_THEOREMS = frozenset(
    {
        TheoremId.ENTROPY_LOWER,
        TheoremId.ENTROPY_NONNEG,
        TheoremId.ENTROPY_UPPER,
        TheoremId.REV_ENTROPY_GAMMA,
        TheoremId.REV_ENTROPY_ZETA,
        TheoremId.EXAMPLE_LOG_PAIR,
    }
)

_COMPRESSION_THEOREMS = frozenset(
    {TheoremId.COMPRESSION_JENSEN, TheoremId.REV_JENSEN_GAMMA, TheoremId.REV_JENSEN_ZETA}
)

# p must sit in [0,1] for these; elsewhere the exponent is any real.
_UNIT_EXPONENT_THEOREMS = frozenset(
    {
        TheoremId.MEAN_INTEGRAL,
        TheoremId.ENTROPY_LOWER,
        TheoremId.REV_ENTROPY_GAMMA,
        TheoremId.REV_ENTROPY_ZETA,
        TheoremId.EXAMPLE_LOG_PAIR,
    }
)

_STRADDLE_LO = 1.0 - 1e-6
_STRADDLE_HI = 1.0 + 1e-6
_RESAMPLE_CAP = 100


@dataclass(frozen=True)
class VerificationResult:
    """Outcome of one inequality check.

    margin is lambda_min of the claimed-PSD difference (scalar slack for
    INFO_INEQ, two-sided for equalities) and None on hypothesis skips.
    hypothesis_met=False means "not applicable", never "fail".
    """

    theorem: TheoremId | str
    holds: bool
    margin: float | None
    lhs_norm: float
    rhs_norm: float
    hypothesis_met: bool
    detail: str
    triage: str | None = None

    def to_json(self) -> dict:
        name = self.theorem.value if isinstance(self.theorem, TheoremId) else str(self.theorem)
        return {
            "theorem": name,
            "holds": self.holds,
            "margin": self.margin,
            "lhs_norm": self.lhs_norm,
            "rhs_norm": self.rhs_norm,
            "hypothesis_met": self.hypothesis_met,
            "detail": self.detail,
            "triage": self.triage,
        }


@dataclass
class Instance:
    """A generated hypothesis-satisfying input for one theorem checker.

    (m, M) are the measured sandwich constants over the paired nodes (the
    spectral range of X for the compression checks); t0 lies in [m, M] where
    used.  Optional slots cover the extra fields some statements need.
    """

    theorem: TheoremId
    seed: int
    dim: int
    k: int
    f: ScalarFunction | None = None
    q: float | None = None
    t0: float | None = None
    m: float | None = None
    M: float | None = None
    fa: OperatorField | None = None
    fb: OperatorField | None = None
    fc: OperatorField | None = None
    fd: OperatorField | None = None
    fa2: OperatorField | None = None
    fb2: OperatorField | None = None
    pmap: PositiveLinearMap | None = None
    cs: tuple | None = None
    cs_weights: np.ndarray | None = None
    x: PositiveDefiniteMatrix | None = None
    alpha: float | None = None
    beta: float | None = None

    def validate(self) -> None:
        if self.theorem in _NORMALIZED_THEOREMS:
            if not (self.fa.is_normalized() and self.fb.is_normalized()):
                raise PreconditionError("fields must sum to the identity within 1e-10")
            if not (self.m <= _STRADDLE_LO and self.M >= _STRADDLE_HI):
                raise PreconditionError(
                    f"need m <= 1 - 1e-6 and M >= 1 + 1e-6, got m={self.m}, M={self.M}"
                )
        if self.t0 is not None:
            slack = 1e-9 * max(1.0, abs(self.M))
            if not (self.m - slack <= self.t0 <= self.M + slack):
                raise PreconditionError(f"t0={self.t0} outside [{self.m}, {self.M}]")
        if self.theorem is TheoremId.INFO_INEQ:
            a = np.diag(self.fa.matrices[0].array).real
            b = np.diag(self.fb.matrices[0].array).real
            if abs(a.sum() - 1.0) > 1e-10 or abs(b.sum() - 1.0) > 1e-10:
                raise PreconditionError("probability vectors must sum to one")

    def to_json(self) -> dict:
        out: dict = {
            "theorem": self.theorem.value,
            "seed": int(self.seed),
            "dim": int(self.dim),
            "k": int(self.k),
        }
        if self.f is not None:
            if not self.f.spec:
                raise PreconditionError("custom scalar functions are not serializable")
            out["f"] = self.f.spec
        for key in ("q", "t0", "m", "M", "alpha", "beta"):
            value = getattr(self, key)
            if value is not None:
                out[key] = float(value)
        for key in ("fa", "fb", "fc", "fd", "fa2", "fb2"):
            fld = getattr(self, key)
            if fld is not None:
                out[key] = field_to_json(fld)
        if self.pmap is not None:
            out["map"] = map_to_json(self.pmap)
        if self.cs is not None:
            out["cs"] = [_cmat_to_json(c) for c in self.cs]
            out["cs_weights"] = [float(w) for w in self.cs_weights]
        if self.x is not None:
            out["x"] = matrix_to_json(self.x)
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Instance":
        inst = cls(
            theorem=TheoremId(data["theorem"]),
            seed=int(data["seed"]),
            dim=int(data["dim"]),
            k=int(data["k"]),
            f=functions.parse(data["f"]) if "f" in data else None,
            q=data.get("q"),
            t0=data.get("t0"),
            m=data.get("m"),
            M=data.get("M"),
            alpha=data.get("alpha"),
            beta=data.get("beta"),
        )
        for key in ("fa", "fb", "fc", "fd", "fa2", "fb2"):
            if key in data:
                setattr(inst, key, field_from_json(data[key]))
        if "map" in data:
            inst.pmap = map_from_json(data["map"])
        if "cs" in data:
            inst.cs = tuple(_cmat_from_json(d) for d in data["cs"])
            inst.cs_weights = np.asarray(data["cs_weights"], dtype=float)
        if "x" in data:
            inst.x = PositiveDefiniteMatrix(matrix_from_json(data["x"]))
        inst.validate()
        return inst


def _cmat_to_json(c: np.ndarray) -> dict:
    return {"dim": int(c.shape[0]), "re": c.real.tolist(), "im": c.imag.tolist()}


def _cmat_from_json(d: dict) -> np.ndarray:
    return np.asarray(d["re"], dtype=float) + 1j * np.asarray(d["im"], dtype=float)


# ---------------------------------------------------------------------------
# checker helpers
# ---------------------------------------------------------------------------


def _lmin(arr: np.ndarray) -> float:
    return float(np.linalg.eigvalsh(_symmetrize(arr))[0])


def _snorm(arr: np.ndarray) -> float:
    w = np.linalg.eigvalsh(_symmetrize(arr))
    return float(max(abs(w[0]), abs(w[-1])))


def _result(theorem, margin, lhs, rhs, tol, detail) -> VerificationResult:
    ln, rn = _snorm(lhs), _snorm(rhs)
    holds = margin >= -tol * max(1.0, ln, rn)
    return VerificationResult(theorem, holds, margin, ln, rn, True, detail)


def _skip(theorem, why: str) -> VerificationResult:
    return VerificationResult(theorem, True, None, 0.0, 0.0, False, why)


def _pair_cores(fa: OperatorField, fb: OperatorField):
    return [(float(w), PairSpectrum(a, b)) for (w, a), (_, b) in zip(fa, fb)]


def _aggregate(cores, dim: int, values_of) -> np.ndarray:
    out = np.zeros((dim, dim), dtype=complex)
    for w, core in cores:
        out += w * core.conjugate(values_of(core.eigenvalues))
    return _symmetrize(out)


def _spectral_image(arr: np.ndarray, scalar_map) -> np.ndarray:
    w, v = np.linalg.eigh(_symmetrize(arr))
    return _symmetrize((v * scalar_map(w)) @ v.conj().T)


def _require_unit_exponent(q) -> float:
    p = float(q)
    if not 0.0 <= p <= 1.0:
        raise PreconditionError(f"this statement requires an exponent in [0, 1], got {p}")
    return p


def _gate(theorem, f: ScalarFunction, m: float, M: float, *, concave: bool, nonneg: bool):
    """Common hypothesis gates; returns a skip result or None."""
    validate_declared_flags(f, m, M)
    if concave and not f.operator_concave:
        return _skip(theorem, f"{f.name} is not flagged operator concave")
    if nonneg and not check_nonnegative_on(f, m, M):
        return _skip(theorem, f"{f.name} is negative somewhere on [{m:.6g}, {M:.6g}]")
    return None


def _entropy_terms(inst: Instance, p: float, f: ScalarFunction | None = None):
    """V, W, S and the identity for the normalized-field statements."""
    cores = _pair_cores(inst.fa, inst.fb)
    dim = inst.fa.dim
    eye = np.eye(dim)
    v = _aggregate(cores, dim, lambda lam: lam ** p)
    w_arg = _aggregate(cores, dim, lambda lam: lam ** (p + 1.0)) + inst.t0 * (eye - v)
    s = None
    if f is not None:
        s = _aggregate(cores, dim, lambda lam: lam ** p * f.evaluate_array(lam))
    return cores, eye, v, w_arg, s


def _compression_terms(inst: Instance, f: ScalarFunction):
    """f(lifted argument) and the compressed right-hand side it is checked against."""
    x = inst.x
    dim = x.dim
    eye = np.eye(dim)
    gram = np.zeros((dim, dim), dtype=complex)
    lifted = np.zeros((dim, dim), dtype=complex)
    fx = x.scalar_image(f.evaluate_array(x.eigenvalues))
    compressed = np.zeros((dim, dim), dtype=complex)
    for w, c in zip(inst.cs_weights, inst.cs):
        ch = c.conj().T
        gram += w * (ch @ c)
        lifted += w * (ch @ x.array @ c)
        compressed += w * (ch @ fx @ c)
    gram = _symmetrize(gram)
    defect = eye - gram
    if _lmin(defect) < -1e-10 * max(1.0, _snorm(gram)):
        raise PreconditionError("compression sum exceeds the identity")
    arg = _symmetrize(lifted) + inst.t0 * defect
    f_arg = _spectral_image(arg, f.evaluate_array)
    rhs = _symmetrize(compressed) + f.evaluate(inst.t0) * defect
    return f_arg, rhs


# ---------------------------------------------------------------------------
# checkers (one per TheoremId)
# ---------------------------------------------------------------------------


def _check_mean_integral(inst: Instance, tol: float) -> VerificationResult:
    p = _require_unit_exponent(inst.q)
    cores = _pair_cores(inst.fa, inst.fb)
    dim = inst.fa.dim
    lhs = _aggregate(cores, dim, lambda lam: lam ** p)
    total_a = PositiveDefiniteMatrix(inst.fa.weighted_sum())
    total_b = PositiveDefiniteMatrix(inst.fb.weighted_sum())
    rhs = PairSpectrum(total_a, total_b).power_mean(p)
    margin = _lmin(rhs - lhs)
    return _result(
        TheoremId.MEAN_INTEGRAL, margin, lhs, rhs, tol,
        f"node-wise power means vs power mean of the integrals at p={p:g}",
    )


def _check_compression_jensen(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    skip = _gate(TheoremId.COMPRESSION_JENSEN, f, inst.m, inst.M, concave=True, nonneg=True)
    if skip:
        return skip
    f_arg, rhs = _compression_terms(inst, f)
    margin = _lmin(f_arg - rhs)
    return _result(
        TheoremId.COMPRESSION_JENSEN, margin, f_arg, rhs, tol,
        "lifted Jensen inequality for a sub-unital compression family",
    )


def _check_entropy_lower(inst: Instance, tol: float) -> VerificationResult:
    p = _require_unit_exponent(inst.q)
    f = inst.f
    skip = _gate(TheoremId.ENTROPY_LOWER, f, inst.m, inst.M, concave=True, nonneg=True)
    if skip:
        return skip
    _, eye, v, w_arg, s = _entropy_terms(inst, p, f)
    lhs = _spectral_image(w_arg, f.evaluate_array) - f.evaluate(inst.t0) * (eye - v)
    margin = _lmin(lhs - s)
    return _result(
        TheoremId.ENTROPY_LOWER, margin, lhs, s, tol,
        f"entropy lower bound at p={p:g}, t0={inst.t0:.6g}",
    )


def _check_entropy_nonneg(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    validate_declared_flags(f, inst.m, inst.M)
    if not check_nonnegative_on(f, inst.m, inst.M):
        return _skip(
            TheoremId.ENTROPY_NONNEG,
            f"{f.name} is negative somewhere on the encountered spectra [{inst.m:.6g}, {inst.M:.6g}]",
        )
    q = float(inst.q)
    cores = _pair_cores(inst.fa, inst.fb)
    dim = inst.fa.dim
    s = _aggregate(cores, dim, lambda lam: lam ** q * f.evaluate_array(lam))
    margin = _lmin(s)
    return _result(
        TheoremId.ENTROPY_NONNEG, margin, np.zeros((dim, dim)), s, tol,
        f"nonnegativity of the aggregated entropy at q={q:g}",
    )


def _check_entropy_upper(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    validate_declared_flags(f, inst.m, inst.M)
    ts = np.linspace(inst.m, inst.M, functions.GRID_POINTS)
    excess = float((f.evaluate_array(ts) - (ts - 1.0)).max())
    if excess > 1e-12:
        return _skip(
            TheoremId.ENTROPY_UPPER,
            f"{f.name}(t) exceeds t - 1 by {excess:.3e} on [{inst.m:.6g}, {inst.M:.6g}]",
        )
    q = float(inst.q)
    cores = _pair_cores(inst.fa, inst.fb)
    dim = inst.fa.dim
    s = _aggregate(cores, dim, lambda lam: lam ** q * f.evaluate_array(lam))
    rhs = _aggregate(cores, dim, lambda lam: lam ** (q + 1.0) - lam ** q)
    margin = _lmin(rhs - s)
    detail = f"entropy upper bound at q={q:g}"
    if q == 0.0:
        direct = sum(w * (b.array - a.array) for (w, a), (_, b) in zip(inst.fa, inst.fb))
        margin = min(margin, _lmin(_symmetrize(direct) - s))
        detail += "; closed form sum w (B - A) cross-checked"
    elif q == 1.0:
        direct = sum(
            w * (b.array @ a.inv().array @ b.array - b.array)
            for (w, a), (_, b) in zip(inst.fa, inst.fb)
        )
        margin = min(margin, _lmin(_symmetrize(direct) - s))
        detail += "; closed form sum w (B A^{-1} B - B) cross-checked"
    return _result(TheoremId.ENTROPY_UPPER, margin, s, rhs, tol, detail)


def _check_klein_upper(inst: Instance, tol: float) -> VerificationResult:
    a = inst.fa.matrices[0]
    b = inst.fb.matrices[0]
    s = PairSpectrum(a, b).entropy_term(0.0, LOG)
    diff = b.array - a.array
    margin = _lmin(diff - s)
    return _result(
        TheoremId.KLEIN_UPPER, margin, s, diff, tol,
        "relative operator entropy against B - A",
    )


def _check_info_ineq(inst: Instance, tol: float) -> VerificationResult:
    a = np.diag(inst.fa.matrices[0].array).real
    b = np.diag(inst.fb.matrices[0].array).real
    value = float(np.sum(a * np.log(a / b)))
    holds = value >= -tol
    detail = "divergence of two probability vectors; equality exactly when a = b"
    return VerificationResult(
        TheoremId.INFO_INEQ, holds, value, abs(value), 0.0, True, detail
    )


def _check_subadditive(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    left = inst.fa.nodewise_sum(inst.fb)
    right = inst.fc.nodewise_sum(inst.fd)
    sum_lo, sum_hi = _measure_pair(left, right)
    lo, hi = min(inst.m, sum_lo), max(inst.M, sum_hi)
    skip = _gate(TheoremId.SUBADDITIVE, f, lo, hi, concave=True, nonneg=False)
    if skip:
        return skip
    dim = inst.fa.dim
    lhs = _aggregate(_pair_cores(left, right), dim, f.evaluate_array)
    rhs = _aggregate(_pair_cores(inst.fa, inst.fc), dim, f.evaluate_array) + _aggregate(
        _pair_cores(inst.fb, inst.fd), dim, f.evaluate_array
    )
    margin = _lmin(lhs - rhs)
    return _result(
        TheoremId.SUBADDITIVE, margin, lhs, rhs, tol,
        "subadditivity of the aggregated entropy at q=0",
    )


def _check_homogeneous(inst: Instance, tol: float) -> VerificationResult:
    alpha = float(inst.alpha)
    q = float(inst.q)
    f = inst.f
    dim = inst.fa.dim
    term = lambda lam: lam ** q * f.evaluate_array(lam)
    lhs = _aggregate(_pair_cores(inst.fa.scaled(alpha), inst.fb.scaled(alpha)), dim, term)
    rhs = alpha * _aggregate(_pair_cores(inst.fa, inst.fb), dim, term)
    margin = min(_lmin(lhs - rhs), _lmin(rhs - lhs))
    return _result(
        TheoremId.HOMOGENEOUS, margin, lhs, rhs, tol,
        f"homogeneity at alpha={alpha:g}, q={q:g} (two-sided margin)",
    )


def _check_joint_concave(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    alpha, beta = float(inst.alpha), float(inst.beta)
    if alpha <= 0.0 or beta <= 0.0 or abs(alpha + beta - 1.0) > 1e-12:
        raise PreconditionError(f"need alpha, beta > 0 with alpha + beta = 1, got {alpha}, {beta}")
    mixed_a = inst.fa.blend(inst.fa2, alpha, beta)
    mixed_b = inst.fb.blend(inst.fb2, alpha, beta)
    mix_lo, mix_hi = _measure_pair(mixed_a, mixed_b)
    lo, hi = min(inst.m, mix_lo), max(inst.M, mix_hi)
    skip = _gate(TheoremId.JOINT_CONCAVE, f, lo, hi, concave=True, nonneg=False)
    if skip:
        return skip
    dim = inst.fa.dim
    lhs = _aggregate(_pair_cores(mixed_a, mixed_b), dim, f.evaluate_array)
    rhs = alpha * _aggregate(_pair_cores(inst.fa, inst.fb), dim, f.evaluate_array) + beta * _aggregate(
        _pair_cores(inst.fa2, inst.fb2), dim, f.evaluate_array
    )
    margin = _lmin(lhs - rhs)
    return _result(
        TheoremId.JOINT_CONCAVE, margin, lhs, rhs, tol,
        f"joint concavity at alpha={alpha:g}",
    )


def _check_map_monotone(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    skip = _gate(TheoremId.MAP_MONOTONE, f, inst.m, inst.M, concave=True, nonneg=False)
    if skip:
        return skip
    pm = inst.pmap
    if not pm.is_normalized():
        raise PreconditionError("map is not normalized")
    dim = inst.fa.dim
    inner = _aggregate(_pair_cores(inst.fa, inst.fb), dim, f.evaluate_array)
    lhs = pm.apply_array(inner)
    try:
        image_nodes = [
            (
                w,
                PositiveDefiniteMatrix(pm.apply_array(a.array)),
                PositiveDefiniteMatrix(pm.apply_array(b.array)),
            )
            for (w, a), (_, b) in zip(inst.fa, inst.fb)
        ]
    except NotPositiveDefiniteError as exc:
        return _skip(TheoremId.MAP_MONOTONE, f"map image not positive definite ({exc})")
    rhs = np.zeros((pm.out_dim, pm.out_dim), dtype=complex)
    for w, pa, pb in image_nodes:
        rhs += w * PairSpectrum(pa, pb).entropy_term(0.0, f)
    margin = _lmin(_symmetrize(rhs) - lhs)
    return _result(
        TheoremId.MAP_MONOTONE, margin, lhs, rhs, tol,
        "informational monotonicity under a normalized positive map",
    )


def _check_rev_jensen_gamma(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    skip = _gate(TheoremId.REV_JENSEN_GAMMA, f, inst.m, inst.M, concave=True, nonneg=True)
    if skip:
        return skip
    try:
        gamma = chord_ratio_bound(f, inst.m, inst.M)
    except (UndefinedRatioError, PreconditionError) as exc:
        return _skip(TheoremId.REV_JENSEN_GAMMA, f"ratio bound undefined: {exc}")
    f_arg, rhs = _compression_terms(inst, f)
    margin = _lmin(gamma * rhs - f_arg)
    return _result(
        TheoremId.REV_JENSEN_GAMMA, margin, f_arg, gamma * rhs, tol,
        f"reverse lifted Jensen with gamma={gamma!r}",
    )


def _check_rev_jensen_zeta(inst: Instance, tol: float) -> VerificationResult:
    f = inst.f
    skip = _gate(TheoremId.REV_JENSEN_ZETA, f, inst.m, inst.M, concave=True, nonneg=False)
    if skip:
        return skip
    zeta = chord_gap_bound(f, inst.m, inst.M)
    f_arg, rhs = _compression_terms(inst, f)
    shifted = rhs + zeta * np.eye(inst.x.dim)
    margin = _lmin(shifted - f_arg)
    return _result(
        TheoremId.REV_JENSEN_ZETA, margin, f_arg, shifted, tol,
        f"reverse lifted Jensen with zeta={zeta!r}",
    )


def _check_rev_entropy_gamma(inst: Instance, tol: float) -> VerificationResult:
    p = _require_unit_exponent(inst.q)
    f = inst.f
    skip = _gate(TheoremId.REV_ENTROPY_GAMMA, f, inst.m, inst.M, concave=True, nonneg=True)
    if skip:
        return skip
    try:
        gamma = chord_ratio_bound(f, inst.m, inst.M)
    except (UndefinedRatioError, PreconditionError) as exc:
        return _skip(TheoremId.REV_ENTROPY_GAMMA, f"ratio bound undefined: {exc}")
    _, eye, v, w_arg, s = _entropy_terms(inst, p, f)
    lhs = _spectral_image(w_arg, f.evaluate_array) - gamma * f.evaluate(inst.t0) * (eye - v)
    rhs = gamma * s
    margin = _lmin(rhs - lhs)
    return _result(
        TheoremId.REV_ENTROPY_GAMMA, margin, lhs, rhs, tol,
        f"reverse entropy bound with gamma={gamma!r} at p={p:g}",
    )


def _check_rev_entropy_zeta(inst: Instance, tol: float) -> VerificationResult:
    p = _require_unit_exponent(inst.q)
    f = inst.f
    skip = _gate(TheoremId.REV_ENTROPY_ZETA, f, inst.m, inst.M, concave=True, nonneg=False)
    if skip:
        return skip
    zeta = chord_gap_bound(f, inst.m, inst.M)
    _, eye, v, w_arg, s = _entropy_terms(inst, p, f)
    lhs = _spectral_image(w_arg, f.evaluate_array) - f.evaluate(inst.t0) * (eye - v)
    rhs = s + zeta * eye
    margin = _lmin(rhs - lhs)
    return _result(
        TheoremId.REV_ENTROPY_ZETA, margin, lhs, rhs, tol,
        f"reverse entropy bound with zeta={zeta!r} at p={p:g}",
    )


def _check_example_log_pair(inst: Instance, tol: float) -> VerificationResult:
    p = _require_unit_exponent(inst.q)
    try:
        zeta_log, zeta_neg = zeta_closed_forms(inst.m, inst.M)
    except PreconditionError as exc:
        return _skip(TheoremId.EXAMPLE_LOG_PAIR, f"closed forms need m < 1 < M: {exc}")
    cores, eye, v, w_arg, _ = _entropy_terms(inst, p)
    dim = inst.fa.dim
    s_p = _aggregate(cores, dim, lambda lam: lam ** p * np.log(lam))
    s_p1 = _aggregate(cores, dim, lambda lam: lam ** (p + 1.0) * np.log(lam))
    ww, wv = np.linalg.eigh(_symmetrize(w_arg))
    w_log_w = _symmetrize((wv * (ww * np.log(ww))) @ wv.conj().T)
    log_w = _symmetrize((wv * np.log(ww)) @ wv.conj().T)
    t0 = inst.t0
    # -t log t route: W log W - t0 log(t0) (I - V) >= S_{p+1} - zeta_neg I
    lhs1 = w_log_w - t0 * math.log(t0) * (eye - v)
    rhs1 = s_p1 - zeta_neg * eye
    margin1 = _lmin(lhs1 - rhs1)
    # log route: log W - log(t0) (I - V) <= S_p + zeta_log I
    lhs2 = log_w - math.log(t0) * (eye - v)
    rhs2 = s_p + zeta_log * eye
    margin2 = _lmin(rhs2 - lhs2)
    margin = min(margin1, margin2)
    lhs_n = max(_snorm(lhs1), _snorm(lhs2))
    rhs_n = max(_snorm(rhs1), _snorm(rhs2))
    holds = margin >= -tol * max(1.0, lhs_n, rhs_n)
    return VerificationResult(
        TheoremId.EXAMPLE_LOG_PAIR, holds, margin, lhs_n, rhs_n, True,
        f"closed-form pair at p={p:g}: margins {margin1:.3e} (-t log t) and {margin2:.3e} (log)",
    )


CHECKERS = {
    TheoremId.MEAN_INTEGRAL: _check_mean_integral,
    TheoremId.COMPRESSION_JENSEN: _check_compression_jensen,
    TheoremId.ENTROPY_LOWER: _check_entropy_lower,
    TheoremId.ENTROPY_NONNEG: _check_entropy_nonneg,
    TheoremId.ENTROPY_UPPER: _check_entropy_upper,
    TheoremId.KLEIN_UPPER: _check_klein_upper,
    TheoremId.INFO_INEQ: _check_info_ineq,
    TheoremId.SUBADDITIVE: _check_subadditive,
    TheoremId.HOMOGENEOUS: _check_homogeneous,
    TheoremId.JOINT_CONCAVE: _check_joint_concave,
    TheoremId.MAP_MONOTONE: _check_map_monotone,
    TheoremId.REV_JENSEN_GAMMA: _check_rev_jensen_gamma,
    TheoremId.REV_ENTROPY_GAMMA: _check_rev_entropy_gamma,
    TheoremId.REV_JENSEN_ZETA: _check_rev_jensen_zeta,
    TheoremId.REV_ENTROPY_ZETA: _check_rev_entropy_zeta,
    TheoremId.EXAMPLE_LOG_PAIR: _check_example_log_pair,
}


def check(theorem: TheoremId, inst: Instance, tol: float = DEFAULT_LOEWNER_TOL) -> VerificationResult:
    """Evaluate one theorem on one instance; pure in (theorem, inst, tol)."""
    if tol < 0.0:
        raise PreconditionError("tol must be nonnegative")
    return CHECKERS[theorem](inst, tol)


# ---------------------------------------------------------------------------
# constrained random generation
# ---------------------------------------------------------------------------


def _cgauss(rng, n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    return (rng.standard_normal((n, m)) + 1j * rng.standard_normal((n, m))) / math.sqrt(2.0)


def _random_unitary(rng, n: int) -> np.ndarray:
    q, r = np.linalg.qr(_cgauss(rng, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def _resolution_arrays(rng, dim: int, k: int, diagonal: bool) -> list[np.ndarray]:
    if diagonal:
        cols = rng.uniform(0.2, 1.0, size=(k, dim))
        cols /= cols.sum(axis=0)
        return [np.diag(row).astype(complex) for row in cols]
    gs = []
    total = np.zeros((dim, dim), dtype=complex)
    for _ in range(k):
        g = _cgauss(rng, dim)
        # The 0.5*dim ridge keeps every summand (hence every node) well conditioned.
        arr = _symmetrize(g @ g.conj().T) + 0.5 * dim * np.eye(dim)
        gs.append(arr)
        total += arr
    isq = PositiveDefiniteMatrix(_symmetrize(total)).inv_sqrt_array
    return [_symmetrize(isq @ g @ isq) for g in gs]


def random_resolution(dim: int, k: int, seed: int) -> OperatorField:
    """k unit-weight PD matrices summing to the identity; deterministic in seed."""
    if dim < 1 or k < 1:
        raise PreconditionError(f"need dim >= 1 and k >= 1, got dim={dim}, k={k}")
    rng = np.random.default_rng(seed)
    arrays = _resolution_arrays(rng, dim, k, diagonal=False)
    return OperatorField.from_matrices([1.0] * k, [PositiveDefiniteMatrix(a) for a in arrays])


def _random_weights(rng, k: int) -> np.ndarray:
    if rng.uniform() < 0.5:
        return np.ones(k)
    return rng.uniform(0.5, 2.0, size=k)


def _measure_pair(fa: OperatorField, fb: OperatorField) -> tuple[float, float]:
    lo, hi = math.inf, -math.inf
    for (_, a), (_, b) in zip(fa, fb):
        m, M = sandwich_bounds(a, b)
        lo, hi = min(lo, m), max(hi, M)
    return lo, hi


def _normalized_pair(rng, dim: int, k: int, diagonal: bool):
    if k < 2:
        raise PreconditionError("normalized instances need k >= 2 (k = 1 forces both fields to {I})")
    for _ in range(_RESAMPLE_CAP):
        weights = _random_weights(rng, k)
        ra = _resolution_arrays(rng, dim, k, diagonal)
        rb = _resolution_arrays(rng, dim, k, diagonal)
        fa = OperatorField.from_matrices(weights, [PositiveDefiniteMatrix(a / w) for w, a in zip(weights, ra)])
        fb = OperatorField.from_matrices(weights, [PositiveDefiniteMatrix(b / w) for w, b in zip(weights, rb)])
        m, M = _measure_pair(fa, fb)
        if m <= _STRADDLE_LO and M >= _STRADDLE_HI:
            return fa, fb, m, M
    raise GenerationError(f"no strict m < 1 < M pair after {_RESAMPLE_CAP} draws")


def _free_pd(rng, dim: int, diagonal: bool) -> PositiveDefiniteMatrix:
    if diagonal:
        return PositiveDefiniteMatrix(np.diag(rng.uniform(0.5, 4.0, size=dim)).astype(complex))
    g = _cgauss(rng, dim)
    return PositiveDefiniteMatrix(_symmetrize(g @ g.conj().T) / dim + 0.5 * np.eye(dim))


def _free_field(rng, dim: int, k: int, weights, diagonal: bool) -> OperatorField:
    return OperatorField.from_matrices(weights, [_free_pd(rng, dim, diagonal) for _ in range(k)])


def _centered_pair(rng, dim: int, k: int, diagonal: bool):
    """A free pair rescaled so the measured sandwich window straddles 1."""
    for _ in range(_RESAMPLE_CAP):
        weights = _random_weights(rng, k)
        fa = _free_field(rng, dim, k, weights, diagonal)
        fb = _free_field(rng, dim, k, weights, diagonal)
        m, M = _measure_pair(fa, fb)
        if M / m >= 1.0 + 1e-9:
            fb = fb.scaled(1.0 / math.sqrt(m * M))
            m, M = _measure_pair(fa, fb)
        elif dim > 1 or k > 1:
            continue
        # A scalar 1x1 pair has m = M; the straddle is only possible (and only
        # stated) for genuinely spread spectra.
        if dim == 1 or (m <= _STRADDLE_LO and M >= _STRADDLE_HI):
            return fa, fb, m, M
    raise GenerationError(f"no usable free pair after {_RESAMPLE_CAP} draws")


def _compression_data(rng, dim: int, k: int, diagonal: bool):
    extra = 1 if rng.uniform() < 0.75 else 0
    arrays = _resolution_arrays(rng, dim, k + extra, diagonal)[:k]
    weights = _random_weights(rng, k)
    cs = []
    for w, arr in zip(weights, arrays):
        root = PositiveDefiniteMatrix(arr / w).sqrt_array
        cs.append(root if diagonal else _random_unitary(rng, dim) @ root)
    x0 = _free_pd(rng, dim, diagonal)
    if dim > 1 and x0.lambda_max / x0.lambda_min > 1.0 + 1e-9:
        x = x0.scaled(1.0 / math.sqrt(x0.lambda_min * x0.lambda_max))
    else:
        x = x0
    return tuple(cs), weights, x


def _prob_vector(rng, dim: int) -> np.ndarray:
    v = rng.dirichlet(2.0 * np.ones(dim))
    v = np.clip(v, 1e-9, None)
    return v / v.sum()


def _diag_field(vec: np.ndarray) -> OperatorField:
    return OperatorField.from_matrices([1.0], [PositiveDefiniteMatrix(np.diag(vec).astype(complex))])


def random_instance(
    theorem: TheoremId,
    dim: int,
    k: int,
    seed: int,
    f: ScalarFunction | None = None,
    p_or_q: float = 0.5,
    diagonal: bool = False,
) -> Instance:
    """Draw a hypothesis-satisfying instance for `theorem`; deterministic in seed.

    With diagonal=True every matrix in the instance is diagonal, so both sides
    of the checked inequality reduce to scalar arithmetic (the smoke mode used
    to compare checkers against an independent scalar implementation).
    """
    if dim < 1 or not 1 <= dim <= 64:
        raise PreconditionError(f"dim must lie in 1..64, got {dim}")
    if k < 1:
        raise PreconditionError(f"k must be >= 1, got {k}")
    if theorem in _UNIT_EXPONENT_THEOREMS:
        _require_unit_exponent(p_or_q)
    rng = np.random.default_rng(seed)
    if f is None:
        f = functions.power(0.5)
    inst = Instance(theorem=theorem, seed=int(seed), dim=int(dim), k=int(k), f=f, q=float(p_or_q))

    if theorem in _NORMALIZED_THEOREMS:
        inst.fa, inst.fb, inst.m, inst.M = _normalized_pair(rng, dim, k, diagonal)
        inst.t0 = float(rng.uniform(inst.m, inst.M))
        if theorem is TheoremId.EXAMPLE_LOG_PAIR:
            inst.f = None
    elif theorem in _COMPRESSION_THEOREMS:
        inst.cs, inst.cs_weights, inst.x = _compression_data(rng, dim, k, diagonal)
        inst.m, inst.M = inst.x.lambda_min, inst.x.lambda_max
        inst.t0 = float(rng.uniform(inst.m, inst.M))
    elif theorem is TheoremId.MEAN_INTEGRAL:
        inst.fa, inst.fb, inst.m, inst.M = _centered_pair(rng, dim, k, diagonal)
        inst.f = None
    elif theorem is TheoremId.KLEIN_UPPER:
        inst.k = 1
        inst.fa, inst.fb, inst.m, inst.M = _centered_pair(rng, dim, 1, diagonal)
        inst.f = LOG
    elif theorem is TheoremId.INFO_INEQ:
        inst.k = 1
        a, b = _prob_vector(rng, dim), _prob_vector(rng, dim)
        inst.fa, inst.fb = _diag_field(a), _diag_field(b)
        inst.m, inst.M = _measure_pair(inst.fa, inst.fb)
        inst.f = LOG
    elif theorem is TheoremId.SUBADDITIVE:
        weights = _random_weights(rng, k)
        inst.fa = _free_field(rng, dim, k, weights, diagonal)
        inst.fb = _free_field(rng, dim, k, weights, diagonal)
        inst.fc = _free_field(rng, dim, k, weights, diagonal)
        inst.fd = _free_field(rng, dim, k, weights, diagonal)
        inst.m = min(_measure_pair(inst.fa, inst.fc)[0], _measure_pair(inst.fb, inst.fd)[0])
        inst.M = max(_measure_pair(inst.fa, inst.fc)[1], _measure_pair(inst.fb, inst.fd)[1])
        inst.q = 0.0
    elif theorem is TheoremId.HOMOGENEOUS:
        inst.fa, inst.fb, inst.m, inst.M = _centered_pair(rng, dim, k, diagonal)
        inst.alpha = float(rng.choice([0.5, 2.0]))
    elif theorem is TheoremId.JOINT_CONCAVE:
        weights = _random_weights(rng, k)
        inst.fa = _free_field(rng, dim, k, weights, diagonal)
        inst.fb = _free_field(rng, dim, k, weights, diagonal)
        inst.fa2 = _free_field(rng, dim, k, weights, diagonal)
        inst.fb2 = _free_field(rng, dim, k, weights, diagonal)
        inst.m = min(_measure_pair(inst.fa, inst.fb)[0], _measure_pair(inst.fa2, inst.fb2)[0])
        inst.M = max(_measure_pair(inst.fa, inst.fb)[1], _measure_pair(inst.fa2, inst.fb2)[1])
        inst.alpha = float(rng.uniform(0.25, 0.75))
        inst.beta = 1.0 - inst.alpha
        inst.q = 0.0
    elif theorem is TheoremId.MAP_MONOTONE:
        inst.fa, inst.fb, inst.m, inst.M = _centered_pair(rng, dim, k, diagonal)
        if diagonal:
            probs = rng.dirichlet(np.ones(3))
            kraus = []
            for prob in probs:
                perm = np.eye(dim)[rng.permutation(dim)]
                kraus.append(math.sqrt(prob) * perm.astype(complex))
            inst.pmap = PositiveLinearMap(kraus)
        else:
            inst.pmap = PositiveLinearMap.random_normalized(dim, dim, int(rng.integers(1, 4)), rng)
        inst.q = 0.0
    else:  # pragma: no cover - the enum is closed
        raise PreconditionError(f"no generator for {theorem}")

    inst.validate()
    return inst


# ---------------------------------------------------------------------------
# campaigns
# ---------------------------------------------------------------------------


@dataclass
class CampaignConfig:
    """Plan for a bulk verification run; every random draw flows from `seed`."""

    theorems: tuple[TheoremId, ...] = tuple(TheoremId)
    trials: int = 100
    dims: tuple[int, int] = (2, 8)
    terms: tuple[int, int] = (2, 4)
    functions: tuple[str, ...] = ("power:0.5", "power:0.25", "neg_t_log_t", "log")
    exponents: tuple[float, ...] = (0.0, 0.25, 0.5, 0.75, 1.0)
    tol: float = DEFAULT_LOEWNER_TOL
    seed: int = 0

    def validate(self) -> None:
        if self.trials < 0:
            raise PreconditionError("trials must be >= 0")
        if self.tol <= 0.0:
            raise PreconditionError("tol must be > 0")
        if not (1 <= self.dims[0] <= self.dims[1] <= 64):
            raise PreconditionError(f"dims must satisfy 1 <= lo <= hi <= 64, got {self.dims}")
        if not (1 <= self.terms[0] <= self.terms[1]):
            raise PreconditionError(f"terms must satisfy 1 <= lo <= hi, got {self.terms}")
        if not self.functions or not self.exponents:
            raise PreconditionError("need at least one function and one exponent")
        for spec in self.functions:
            functions.parse(spec)

    def to_json(self) -> dict:
        return {
            "theorems": [t.value for t in self.theorems],
            "trials": self.trials,
            "dims": list(self.dims),
            "terms": list(self.terms),
            "functions": list(self.functions),
            "exponents": list(self.exponents),
            "tol": self.tol,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class TrialRecord:
    theorem: TheoremId
    index: int
    seed: int
    dim: int
    k: int
    function: str
    exponent: float
    hypothesis_met: bool
    holds: bool
    margin: float | None
    triage: str | None
    detail: str

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "index": self.index,
            "seed": self.seed,
            "dim": self.dim,
            "k": self.k,
            "function": self.function,
            "exponent": self.exponent,
            "hypothesis_met": self.hypothesis_met,
            "holds": self.holds,
            "margin": self.margin,
            "triage": self.triage,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class TheoremSummary:
    theorem: TheoremId
    trials: int
    passes: int
    hypothesis_skips: int
    violations_numerical: int
    violations_substantive: int
    min_margin: float | None
    worst_seed: int | None

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem.value,
            "trials": self.trials,
            "passes": self.passes,
            "skips": self.hypothesis_skips,
            "violations_numerical": self.violations_numerical,
            "violations_substantive": self.violations_substantive,
            "min_margin": self.min_margin,
            "worst_seed": self.worst_seed,
        }


@dataclass
class CampaignReport:
    config: CampaignConfig
    summaries: list[TheoremSummary]
    records: list[TrialRecord]
    failures: list[dict]

    @property
    def substantive_total(self) -> int:
        return sum(s.violations_substantive for s in self.summaries)

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "results": [s.to_json() for s in self.summaries],
            "failures": self.failures,
        }

    def to_csv(self) -> str:
        """One row per trial, suitable for external tooling."""
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(
            ["theorem", "index", "seed", "dim", "k", "function", "exponent",
             "hypothesis_met", "holds", "margin", "triage"]
        )
        for r in self.records:
            writer.writerow(
                [r.theorem.value, r.index, r.seed, r.dim, r.k, r.function, repr(r.exponent),
                 r.hypothesis_met, r.holds, "" if r.margin is None else repr(r.margin),
                 r.triage or ""]
            )
        return buf.getvalue()


_THEOREM_ORDER = list(TheoremId)


def trial_seed(master_seed: int, theorem: TheoremId, index: int) -> int:
    """Stream-independent 64-bit seed for one (theorem, trial) cell."""
    ss = np.random.SeedSequence(
        [int(master_seed) & 0xFFFFFFFFFFFFFFFF, _THEOREM_ORDER.index(theorem), int(index)]
    )
    return int(ss.generate_state(1, np.uint64)[0])


def run_trial(
    theorem: TheoremId, config: CampaignConfig, seed: int, index: int = 0
) -> tuple[TrialRecord, Instance | None, VerificationResult]:
    """One campaign cell: draw parameters and an instance from `seed`, check, triage."""
    rng = np.random.default_rng(seed)
    dim = int(rng.integers(config.dims[0], config.dims[1] + 1))
    k = int(rng.integers(config.terms[0], config.terms[1] + 1))
    spec = config.functions[int(rng.integers(len(config.functions)))]
    exponent = float(config.exponents[int(rng.integers(len(config.exponents)))])
    inst_seed = int(rng.integers(0, 2**63))
    f = functions.parse(spec)
    try:
        inst = random_instance(theorem, dim, k, inst_seed, f, exponent)
    except GenerationError as exc:
        result = VerificationResult(theorem, True, None, 0.0, 0.0, False, f"generation failed: {exc}")
        record = TrialRecord(theorem, index, int(seed), dim, k, spec, exponent,
                             False, True, None, None, result.detail)
        return record, None, result
    result = check(theorem, inst, config.tol)
    if result.hypothesis_met and not result.holds:
        # Separate float noise from a substantive violation before reporting.
        retry = check(theorem, inst, 1e-6)
        result = replace(result, triage="numerical" if retry.holds else "substantive")
    record = TrialRecord(
        theorem, index, int(seed), dim, k, spec, exponent,
        result.hypothesis_met, result.holds, result.margin, result.triage, result.detail,
    )
    return record, inst, result


def _worker_count() -> int:
    raw = os.environ.get("OE_THREADS", "")
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def campaign(config: CampaignConfig) -> CampaignReport:
    """Run the per-theorem trial grid; deterministic in config (schedule-free)."""
    config.validate()
    records: list[TrialRecord] = []
    failures: list[dict] = []
    summaries: list[TheoremSummary] = []
    workers = _worker_count()
    for theorem in config.theorems:
        seeds = [trial_seed(config.seed, theorem, i) for i in range(config.trials)]
        if workers > 1 and len(seeds) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                rows = list(
                    pool.map(lambda si: run_trial(theorem, config, si[1], si[0]), enumerate(seeds))
                )
        else:
            rows = [run_trial(theorem, config, s, i) for i, s in enumerate(seeds)]
        passes = skips = numerical = substantive = 0
        min_margin: float | None = None
        worst_seed: int | None = None
        for record, inst, result in rows:
            records.append(record)
            if not record.hypothesis_met:
                skips += 1
                continue
            if record.holds:
                passes += 1
            elif record.triage == "numerical":
                numerical += 1
            else:
                substantive += 1
            if record.margin is not None and (min_margin is None or record.margin < min_margin):
                min_margin, worst_seed = record.margin, record.seed
            if not record.holds:
                failures.append(
                    {
                        "record": record.to_json(),
                        "result": result.to_json(),
                        "instance": inst.to_json() if inst is not None else None,
                    }
                )
        summaries.append(
            TheoremSummary(theorem, config.trials, passes, skips, numerical, substantive,
                           min_margin, worst_seed)
        )
    return CampaignReport(config, summaries, records, failures)
