"""Small dense numeric kernels shared by the analysis modules."""

from dataclasses import dataclass

import numpy as np

FIT_MODELS = ("linear", "quadratic_no_linear_term", "full_quadratic")


def hermitian_eigenvalues(matrix):
    """All eigenvalues of a Hermitian matrix, descending."""
    mat = np.asarray(matrix)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"need a square matrix, got {mat.shape}")
    if np.max(np.abs(mat - mat.conj().T)) > 1e-10:
        raise ValueError("matrix is not Hermitian within 1e-10")
    return list(np.linalg.eigvalsh(mat)[::-1])


def singular_values(matrix):
    """Singular values, descending."""
    return list(np.linalg.svd(np.asarray(matrix), compute_uv=False))


def dominant_singular_value(matrix, tol=1e-12, max_iter=1000):
    """Largest singular value by power iteration on A^H A.

    Deterministic start vector; independent of the full-decomposition route,
    used as a cross-check on Schmidt maximizations.
    """
    mat = np.asarray(matrix).astype(complex)
    rows, cols = mat.shape
    # seeded start: reproducible, and structured states (e.g. singlet products,
    # whose slices sum to zero) cannot be orthogonal to it by symmetry
    rng = np.random.default_rng(1905)
    v = rng.standard_normal(cols) + 1j * rng.standard_normal(cols)
    v /= np.linalg.norm(v)
    prev = 0.0
    for _ in range(max_iter):
        w = mat.conj().T @ (mat @ v)
        norm = np.linalg.norm(w)
        if norm == 0.0:
            return 0.0
        v = w / norm
        cur = float(np.real(v.conj() @ (mat.conj().T @ (mat @ v))))
        if abs(cur - prev) <= tol * max(1.0, cur):
            break
        prev = cur
    return float(np.sqrt(max(cur, 0.0)))


def bisect_boundary(predicate, lo, hi, tol):
    """Boundary point where a predicate flips on [lo, hi], within tol."""
    plo, phi = bool(predicate(lo)), bool(predicate(hi))
    if plo == phi:
        raise ValueError("predicate does not flip on the bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if bool(predicate(mid)) == plo:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


@dataclass(frozen=True)
class PolyFit:
    coefficients: tuple  # constant term first
    model: str
    mse: float  # mean of squared residuals over the fitted points

    def predict(self, x):
        x = np.asarray(x, dtype=float)
        c = self.coefficients
        if self.model == "linear":
            return c[0] + c[1] * x
        if self.model == "quadratic_no_linear_term":
            return c[0] + c[1] * x * x
        return c[0] + c[1] * x + c[2] * x * x


def _design(xs, model):
    xs = np.asarray(xs, dtype=float)
    if model == "linear":
        return np.column_stack([np.ones_like(xs), xs])
    if model == "quadratic_no_linear_term":
        return np.column_stack([np.ones_like(xs), xs * xs])
    if model == "full_quadratic":
        return np.column_stack([np.ones_like(xs), xs, xs * xs])
    raise ValueError(f"model must be one of {FIT_MODELS}, got {model!r}")


def poly_fit(xs, ys, model):
    """Normal-equations least squares with the given polynomial model."""
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    X = _design(xs, model)
    if len(xs) != len(ys):
        raise ValueError(f"{len(xs)} x values but {len(ys)} y values")
    if len(xs) < X.shape[1]:
        raise ValueError(f"{model} needs at least {X.shape[1]} points, got {len(xs)}")
    if np.linalg.matrix_rank(X) < X.shape[1]:
        raise ValueError("singular design matrix (degenerate x values)")
    coeff = np.linalg.solve(X.T @ X, X.T @ ys)
    resid = ys - X @ coeff
    return PolyFit(coefficients=tuple(float(c) for c in coeff), model=model,
                   mse=float(np.mean(resid ** 2)))
