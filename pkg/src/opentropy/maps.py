"""Normalized positive linear maps in Kraus form, and Jensen-type checks.

A map Phi(X) = sum_i C_i* X C_i is positive by construction and normalized
(unital) when sum_i C_i* C_i = I.  For operator concave f and normalized Phi
the Davis-Choi-Jensen inequality f(Phi(A)) >= Phi(f(A)) holds; the reverse
checks bound f(Phi(A)) from above by gamma * Phi(f(A)) or Phi(f(A)) + zeta*I
using the chord constants from the bounds module.
"""

from __future__ import annotations

import numpy as np

from .bounds import chord_gap_bound, chord_ratio_bound
from .errors import PreconditionError, ShapeError
from .functions import ScalarFunction
from .matcore import (
    DEFAULT_LOEWNER_TOL,
    HermitianMatrix,
    PositiveDefiniteMatrix,
    _symmetrize,
    apply_function,
    loewner_leq,
)

__all__ = [
    "PositiveLinearMap",
    "apply_map",
    "lifted_jensen_lhs",
    "check_jensen",
    "check_jensen_reverse_gamma",
    "check_jensen_reverse_zeta",
    "map_to_json",
    "map_from_json",
]


class PositiveLinearMap:
    """Positive linear map X -> sum_i C_i* X C_i given by Kraus factors C_i."""

    __slots__ = ("_kraus", "_in_dim", "_out_dim")

    def __init__(self, kraus):
        factors = [np.asarray(c, dtype=complex) for c in kraus]
        if not factors:
            raise PreconditionError("a positive linear map needs at least one Kraus factor")
        shape = factors[0].shape
        if len(shape) != 2:
            raise ShapeError("Kraus factors must be matrices")
        if any(c.shape != shape for c in factors):
            raise ShapeError("Kraus factors must share one shape")
        for c in factors:
            c.setflags(write=False)
        self._kraus = tuple(factors)
        self._in_dim, self._out_dim = int(shape[0]), int(shape[1])

    @property
    def kraus(self) -> tuple[np.ndarray, ...]:
        return self._kraus

    @property
    def in_dim(self) -> int:
        return self._in_dim

    @property
    def out_dim(self) -> int:
        return self._out_dim

    def kraus_gram(self) -> np.ndarray:
        """sum_i C_i* C_i; equals I_out exactly when the map is normalized."""
        out = np.zeros((self._out_dim, self._out_dim), dtype=complex)
        for c in self._kraus:
            out += c.conj().T @ c
        return _symmetrize(out)

    def is_normalized(self, tol: float = 1e-10) -> bool:
        residual = self.kraus_gram() - np.eye(self._out_dim)
        return float(np.linalg.norm(residual)) <= tol

    def apply_array(self, x: np.ndarray) -> np.ndarray:
        out = np.zeros((self._out_dim, self._out_dim), dtype=complex)
        for c in self._kraus:
            out += c.conj().T @ x @ c
        return _symmetrize(out)

    def apply(self, x) -> HermitianMatrix:
        arr = x.array if hasattr(x, "array") else np.asarray(x, dtype=complex)
        if arr.shape != (self._in_dim, self._in_dim):
            raise ShapeError(f"map expects a {self._in_dim}x{self._in_dim} input, got {arr.shape}")
        return HermitianMatrix(self.apply_array(arr))

    @classmethod
    def random_normalized(cls, in_dim: int, out_dim: int, n_terms: int, rng) -> "PositiveLinearMap":
        """Sample G_i, set S = sum G_i* G_i and C_i = G_i S^{-1/2}: exactly unital."""
        gs = [
            (rng.standard_normal((in_dim, out_dim)) + 1j * rng.standard_normal((in_dim, out_dim)))
            / np.sqrt(2.0)
            for _ in range(max(1, int(n_terms)))
        ]
        s = np.zeros((out_dim, out_dim), dtype=complex)
        for g in gs:
            s += g.conj().T @ g
        s_isqrt = PositiveDefiniteMatrix(_symmetrize(s)).inv_sqrt_array
        return cls(g @ s_isqrt for g in gs)

    def __repr__(self) -> str:
        return f"PositiveLinearMap(terms={len(self._kraus)}, {self._in_dim}->{self._out_dim})"


def apply_map(p: PositiveLinearMap, x: HermitianMatrix) -> HermitianMatrix:
    return p.apply(x)


def lifted_jensen_lhs(cs, weights, x: PositiveDefiniteMatrix, t0: float) -> PositiveDefiniteMatrix:
    """sum_s w_s C_s* X C_s + t0 (I - sum_s w_s C_s* C_s).

    Requires the weighted compression sum to stay below the identity and
    t0 inside the spectral range of X; the result is then uniformly positive
    (bounded below by min(lambda_min(X), t0)).
    """
    cs = [np.asarray(c, dtype=complex) for c in cs]
    weights = np.asarray(weights, dtype=float)
    if len(cs) != weights.size:
        raise ShapeError("one weight per compression factor is required")
    if np.any(weights <= 0.0):
        raise PreconditionError("compression weights must be positive")
    dim = x.dim
    gram = np.zeros((dim, dim), dtype=complex)
    lifted = np.zeros((dim, dim), dtype=complex)
    for w, c in zip(weights, cs):
        if c.shape != (dim, dim):
            raise ShapeError(f"compression factor shape {c.shape} does not match dim {dim}")
        gram += w * (c.conj().T @ c)
        lifted += w * (c.conj().T @ x.array @ c)
    holds, margin = loewner_leq(HermitianMatrix(gram), np.eye(dim), 1e-10)
    if not holds:
        raise PreconditionError(
            f"compression sum exceeds the identity (margin {margin:.6e})"
        )
    t0 = float(t0)
    slack = 1e-9 * max(1.0, x.lambda_max)
    if not (x.lambda_min - slack <= t0 <= x.lambda_max + slack):
        raise PreconditionError(
            f"t0={t0} outside the spectral range [{x.lambda_min}, {x.lambda_max}] of X"
        )
    out = _symmetrize(lifted) + t0 * (np.eye(dim) - _symmetrize(gram))
    return PositiveDefiniteMatrix(out)


def _result(theorem, holds, margin, lhs, rhs, detail):
    # Imported here: verify imports this module, so a top-level import would cycle.
    from .verify import VerificationResult

    def norm(x):
        w = np.linalg.eigvalsh(_symmetrize(x))
        return float(max(abs(w[0]), abs(w[-1])))

    return VerificationResult(
        theorem=theorem,
        holds=holds,
        margin=margin,
        lhs_norm=norm(lhs),
        rhs_norm=norm(rhs),
        hypothesis_met=True,
        detail=detail,
    )


def _require_jensen_inputs(p: PositiveLinearMap, a: PositiveDefiniteMatrix, f: ScalarFunction):
    if not p.is_normalized():
        raise PreconditionError("map is not normalized: sum C_i* C_i differs from I")
    if a.dim != p.in_dim:
        raise ShapeError(f"map expects dimension {p.in_dim}, matrix has {a.dim}")
    if not f.operator_concave:
        raise PreconditionError(f"{f.name} is not flagged operator concave")


def check_jensen(p: PositiveLinearMap, a: PositiveDefiniteMatrix, f: ScalarFunction,
                 tol: float = DEFAULT_LOEWNER_TOL):
    """Verify f(Phi(A)) >= Phi(f(A)); margin = lambda_min of the difference."""
    _require_jensen_inputs(p, a, f)
    phi_a = PositiveDefiniteMatrix(p.apply_array(a.array))
    lhs = apply_function(phi_a, f).array
    rhs = p.apply_array(apply_function(a, f).array)
    holds, margin = loewner_leq(HermitianMatrix(rhs), HermitianMatrix(lhs), tol)
    return _result("davis_choi_jensen", holds, margin, lhs, rhs,
                   "f(Phi(A)) vs Phi(f(A)) for a normalized positive map")


def _check_spectrum_window(a: PositiveDefiniteMatrix, m: float, M: float):
    slack = 1e-9 * max(1.0, a.lambda_max)
    if a.lambda_min < m - slack or a.lambda_max > M + slack:
        raise PreconditionError(
            f"spectrum [{a.lambda_min}, {a.lambda_max}] not inside [{m}, {M}]"
        )


def check_jensen_reverse_gamma(p: PositiveLinearMap, a: PositiveDefiniteMatrix,
                               f: ScalarFunction, m: float, M: float,
                               tol: float = DEFAULT_LOEWNER_TOL):
    """Verify f(Phi(A)) <= gamma * Phi(f(A)) with the chord ratio bound on [m, M]."""
    _require_jensen_inputs(p, a, f)
    _check_spectrum_window(a, m, M)
    gamma = chord_ratio_bound(f, m, M)
    phi_a = PositiveDefiniteMatrix(p.apply_array(a.array))
    lhs = apply_function(phi_a, f).array
    rhs = gamma * p.apply_array(apply_function(a, f).array)
    holds, margin = loewner_leq(HermitianMatrix(lhs), HermitianMatrix(rhs), tol)
    return _result("jensen_reverse_gamma", holds, margin, lhs, rhs,
                   f"f(Phi(A)) vs gamma*Phi(f(A)) with gamma={gamma!r}")


def check_jensen_reverse_zeta(p: PositiveLinearMap, a: PositiveDefiniteMatrix,
                              f: ScalarFunction, m: float, M: float,
                              tol: float = DEFAULT_LOEWNER_TOL):
    """Verify zeta*I + Phi(f(A)) >= f(Phi(A)) with the chord gap bound on [m, M]."""
    _require_jensen_inputs(p, a, f)
    _check_spectrum_window(a, m, M)
    zeta = chord_gap_bound(f, m, M)
    phi_a = PositiveDefiniteMatrix(p.apply_array(a.array))
    lhs = apply_function(phi_a, f).array
    rhs = zeta * np.eye(a.dim) + p.apply_array(apply_function(a, f).array)
    holds, margin = loewner_leq(HermitianMatrix(lhs), HermitianMatrix(rhs), tol)
    return _result("jensen_reverse_zeta", holds, margin, lhs, rhs,
                   f"f(Phi(A)) vs Phi(f(A)) + zeta*I with zeta={zeta!r}")


def map_to_json(p: PositiveLinearMap) -> dict:
    """Exchange format: {"kraus": [matrix, ...]} using the matcore matrix layout."""
    if p.in_dim != p.out_dim:
        raise ShapeError("only square Kraus families are serializable")
    return {
        "kraus": [
            {"dim": p.in_dim, "re": c.real.tolist(), "im": c.imag.tolist()}
            for c in p.kraus
        ]
    }


def map_from_json(data: dict) -> PositiveLinearMap:
    factors = []
    for d in data["kraus"]:
        re = np.asarray(d["re"], dtype=float)
        im = np.asarray(d["im"], dtype=float)
        factors.append(re + 1j * im)
    return PositiveLinearMap(factors)
