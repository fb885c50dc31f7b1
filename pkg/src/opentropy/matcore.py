"""Dense complex Hermitian matrix kernel.

Spectral decompositions, functional calculus, congruences, and comparison in
the Loewner order (A <= B iff B - A is positive semidefinite).  All values are
small dense complex matrices, immutable after construction; Hermitian drift
from floating-point products is absorbed by symmetrizing once at construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EigenConvergenceError, NotPositiveDefiniteError, ShapeError

__all__ = [
    "DEFAULT_LOEWNER_TOL",
    "HermitianMatrix",
    "SpectralDecomposition",
    "PositiveDefiniteMatrix",
    "eig",
    "apply_function",
    "half_powers",
    "congruence",
    "loewner_leq",
    "sandwich_bounds",
    "identity",
    "matrix_to_json",
    "matrix_from_json",
]

DEFAULT_LOEWNER_TOL = 1e-9

# Construction rejects matrices with lambda_min <= floor * lambda_max;
# guards against numerically singular inputs before inversion.
_PD_RELATIVE_FLOOR = 1e-12


def _symmetrize(a: np.ndarray) -> np.ndarray:
    return (a + a.conj().T) / 2.0


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


class HermitianMatrix:
    """Immutable dense complex Hermitian matrix.

    Input entries are symmetrized to (H + H*)/2 at construction rather than
    rejected, which absorbs floating-point drift from matrix products.
    """

    __slots__ = ("_array",)

    def __init__(self, entries):
        if isinstance(entries, HermitianMatrix):
            self._array = entries._array
            return
        arr = np.asarray(entries, dtype=complex)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ShapeError(f"expected a square matrix, got shape {arr.shape}")
        if arr.shape[0] < 1:
            raise ShapeError("dimension must be at least 1")
        self._array = _freeze(_symmetrize(arr))

    @property
    def array(self) -> np.ndarray:
        """The underlying (read-only) complex ndarray."""
        return self._array

    @property
    def dim(self) -> int:
        return self._array.shape[0]

    def frobenius(self) -> float:
        return float(np.linalg.norm(self._array))

    def spectral_norm(self) -> float:
        w = np.linalg.eigvalsh(self._array)
        return float(max(abs(w[0]), abs(w[-1])))

    def trace(self) -> float:
        return float(np.trace(self._array).real)

    def __add__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(self._array + _entries(other))

    def __sub__(self, other: "HermitianMatrix") -> "HermitianMatrix":
        return HermitianMatrix(self._array - _entries(other))

    def __neg__(self) -> "HermitianMatrix":
        return HermitianMatrix(-self._array)

    def __rmul__(self, scalar: float) -> "HermitianMatrix":
        return HermitianMatrix(float(scalar) * self._array)

    __mul__ = __rmul__

    def __repr__(self) -> str:
        return f"HermitianMatrix(dim={self.dim})"


def _entries(m) -> np.ndarray:
    if isinstance(m, HermitianMatrix):
        return m.array
    if isinstance(m, PositiveDefiniteMatrix):
        return m.array
    return np.asarray(m, dtype=complex)


def identity(dim: int) -> HermitianMatrix:
    return HermitianMatrix(np.eye(dim, dtype=complex))


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues in nondecreasing order with matching orthonormal columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def __post_init__(self):
        _freeze(self.eigenvalues)
        _freeze(self.eigenvectors)

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def eig(h: HermitianMatrix) -> SpectralDecomposition:
    """Full eigendecomposition of a Hermitian matrix (LAPACK, ascending order)."""
    try:
        w, v = np.linalg.eigh(_entries(h))
    except np.linalg.LinAlgError as exc:
        raise EigenConvergenceError(f"eigendecomposition did not converge: {exc}") from exc
    return SpectralDecomposition(w, v)


class PositiveDefiniteMatrix:
    """Hermitian matrix whose eigenvalues are all strictly positive.

    The spectral decomposition is computed once at construction, cached, and
    reused by every derived quantity (roots, inverses, rescalings), so chains
    like A -> A^{-1/2} cost no further eigensolves.
    """

    __slots__ = ("_herm", "_decomp", "_sqrt_arr", "_inv_sqrt_arr")

    def __init__(self, entries, *, _decomposition: SpectralDecomposition | None = None):
        herm = entries if isinstance(entries, HermitianMatrix) else HermitianMatrix(_entries(entries))
        decomp = _decomposition if _decomposition is not None else eig(herm)
        lo = float(decomp.eigenvalues[0])
        hi = float(decomp.eigenvalues[-1])
        if lo <= 0.0 or lo <= _PD_RELATIVE_FLOOR * hi:
            raise NotPositiveDefiniteError(
                f"smallest eigenvalue {lo:.6e} is not safely positive (largest is {hi:.6e})"
            )
        self._herm = herm
        self._decomp = decomp
        self._sqrt_arr = None
        self._inv_sqrt_arr = None

    @classmethod
    def _from_eigenbasis(cls, eigenvalues: np.ndarray, eigenvectors: np.ndarray) -> "PositiveDefiniteMatrix":
        order = np.argsort(eigenvalues)
        w = np.ascontiguousarray(eigenvalues[order])
        v = np.ascontiguousarray(eigenvectors[:, order])
        herm = HermitianMatrix((v * w) @ v.conj().T)
        return cls(herm, _decomposition=SpectralDecomposition(w, v))

    @property
    def matrix(self) -> HermitianMatrix:
        return self._herm

    @property
    def array(self) -> np.ndarray:
        return self._herm.array

    @property
    def dim(self) -> int:
        return self._herm.dim

    @property
    def decomposition(self) -> SpectralDecomposition:
        return self._decomp

    @property
    def eigenvalues(self) -> np.ndarray:
        return self._decomp.eigenvalues

    @property
    def lambda_min(self) -> float:
        return float(self._decomp.eigenvalues[0])

    @property
    def lambda_max(self) -> float:
        return float(self._decomp.eigenvalues[-1])

    def scalar_image(self, values) -> np.ndarray:
        """V diag(values) V* for per-eigenvalue scalars `values`."""
        v = self._decomp.eigenvectors
        return _symmetrize((v * np.asarray(values)) @ v.conj().T)

    @property
    def sqrt_array(self) -> np.ndarray:
        if self._sqrt_arr is None:
            self._sqrt_arr = _freeze(self.scalar_image(np.sqrt(self._decomp.eigenvalues)))
        return self._sqrt_arr

    @property
    def inv_sqrt_array(self) -> np.ndarray:
        if self._inv_sqrt_arr is None:
            self._inv_sqrt_arr = _freeze(self.scalar_image(1.0 / np.sqrt(self._decomp.eigenvalues)))
        return self._inv_sqrt_arr

    def sqrt(self) -> "PositiveDefiniteMatrix":
        return self._map_eigenvalues(np.sqrt)

    def inv_sqrt(self) -> "PositiveDefiniteMatrix":
        return self._map_eigenvalues(lambda w: 1.0 / np.sqrt(w))

    def inv(self) -> "PositiveDefiniteMatrix":
        return self._map_eigenvalues(lambda w: 1.0 / w)

    def power(self, q: float) -> "PositiveDefiniteMatrix":
        return self._map_eigenvalues(lambda w: w ** float(q))

    def scaled(self, alpha: float) -> "PositiveDefiniteMatrix":
        alpha = float(alpha)
        if alpha <= 0.0:
            raise NotPositiveDefiniteError(f"scaling a PD matrix by {alpha} leaves the cone")
        return self._map_eigenvalues(lambda w: alpha * w)

    def _map_eigenvalues(self, fn) -> "PositiveDefiniteMatrix":
        return PositiveDefiniteMatrix._from_eigenbasis(fn(self._decomp.eigenvalues), self._decomp.eigenvectors)

    def __repr__(self) -> str:
        return f"PositiveDefiniteMatrix(dim={self.dim}, lambda_min={self.lambda_min:.3e})"


def apply_function(a: PositiveDefiniteMatrix, f) -> HermitianMatrix:
    """Spectral functional calculus: V diag(f(lambda_i)) V*.

    `f` is a ScalarFunction (or anything with `evaluate_array`); every
    eigenvalue of `a` must lie in its domain.
    """
    values = f.evaluate_array(a.eigenvalues)
    return HermitianMatrix(a.scalar_image(values))


def half_powers(a: PositiveDefiniteMatrix):
    """(A^{1/2}, A^{-1/2}, A^{-1}), all sharing the eigenbasis of A."""
    return a.sqrt(), a.inv_sqrt(), a.inv()


def congruence(c, x) -> HermitianMatrix:
    """C* X C, re-symmetrized.  C may be rectangular (n x m) against an n x n X."""
    c = np.asarray(c, dtype=complex)
    arr = _entries(x)
    if c.ndim != 2 or c.shape[0] != arr.shape[0]:
        raise ShapeError(f"congruence shape mismatch: C is {c.shape}, X is {arr.shape}")
    return HermitianMatrix(c.conj().T @ arr @ c)


def loewner_leq(a, b, tol: float = DEFAULT_LOEWNER_TOL) -> tuple[bool, float]:
    """Test A <= B in the Loewner order.

    Returns (holds, margin) with margin = lambda_min(B - A); the test passes
    when margin >= -tol * max(1, ||A||_2, ||B||_2).
    """
    if tol < 0.0:
        raise ValueError("tol must be nonnegative")
    aa, bb = _entries(a), _entries(b)
    if aa.shape != bb.shape:
        raise ShapeError(f"loewner_leq shape mismatch: {aa.shape} vs {bb.shape}")
    margin = float(np.linalg.eigvalsh(_symmetrize(bb - aa))[0])
    wa = np.linalg.eigvalsh(_symmetrize(aa))
    wb = np.linalg.eigvalsh(_symmetrize(bb))
    scale = float(max(1.0, abs(wa[0]), abs(wa[-1]), abs(wb[0]), abs(wb[-1])))
    return bool(margin >= -tol * scale), margin


def sandwich_bounds(a: PositiveDefiniteMatrix, b: PositiveDefiniteMatrix) -> tuple[float, float]:
    """Tightest constants (m, M) with m*A <= B <= M*A.

    These are the extreme eigenvalues of A^{-1/2} B A^{-1/2}.
    """
    if a.dim != b.dim:
        raise ShapeError(f"sandwich_bounds dimension mismatch: {a.dim} vs {b.dim}")
    r = a.inv_sqrt_array
    w = np.linalg.eigvalsh(_symmetrize(r @ b.array @ r))
    return float(w[0]), float(w[-1])


def matrix_to_json(m) -> dict:
    """Exchange format: {"dim": n, "re": [[...]], "im": [[...]]}, row-major."""
    arr = _entries(m)
    if arr.shape[0] != arr.shape[1]:
        raise ShapeError("only square matrices use the dim/re/im exchange format")
    return {
        "dim": int(arr.shape[0]),
        "re": arr.real.tolist(),
        "im": arr.imag.tolist(),
    }


def matrix_from_json(data: dict) -> HermitianMatrix:
    dim = int(data["dim"])
    re = np.asarray(data["re"], dtype=float)
    im = np.asarray(data["im"], dtype=float)
    if re.shape != (dim, dim) or im.shape != (dim, dim):
        raise ShapeError(f"matrix payload shape {re.shape}/{im.shape} does not match dim {dim}")
    return HermitianMatrix(re + 1j * im)
