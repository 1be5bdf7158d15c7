"""Sampled functions and the grading operator induced by a finite-order action."""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from ..config import DEFAULT_TOLERANCES, Tolerances
from ..errors import DimensionError, IncompatibilityError, InvalidRootError


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class SampledFunction:
    """Complex values of a function on an indexed finite sample set."""

    values: np.ndarray

    def __post_init__(self):
        vals = np.array(self.values, dtype=np.complex128).reshape(-1)
        if not np.all(np.isfinite(vals)):
            raise ValueError("sampled values must be finite")
        object.__setattr__(self, "values", _frozen(vals))

    @property
    def sample_count(self) -> int:
        return self.values.shape[0]

    def __len__(self) -> int:
        return self.sample_count

    @classmethod
    def constant(cls, c: complex, sample_count: int) -> "SampledFunction":
        return cls(np.full(sample_count, c, dtype=np.complex128))

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values))) if self.sample_count else 0.0

    def __add__(self, other: "SampledFunction") -> "SampledFunction":
        _check_same_size(self, other)
        return SampledFunction(self.values + other.values)

    def __sub__(self, other: "SampledFunction") -> "SampledFunction":
        _check_same_size(self, other)
        return SampledFunction(self.values - other.values)

    def __mul__(self, other):
        if isinstance(other, SampledFunction):
            _check_same_size(self, other)
            return SampledFunction(self.values * other.values)
        return SampledFunction(self.values * complex(other))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SampledFunction":
        return SampledFunction(self.values ** int(k))


def _check_same_size(a: SampledFunction, b: SampledFunction) -> None:
    if a.sample_count != b.sample_count:
        raise DimensionError(f"sample counts differ: {a.sample_count} vs {b.sample_count}")


def permutation_order(perm: np.ndarray) -> int:
    """Least k >= 1 with perm^k = id, via the lcm of cycle lengths."""
    perm = np.asarray(perm)
    seen = np.zeros(perm.shape[0], dtype=bool)
    order = 1
    for start in range(perm.shape[0]):
        if seen[start]:
            continue
        length = 0
        i = start
        while not seen[i]:
            seen[i] = True
            i = perm[i]
            length += 1
        order = order * length // gcd(order, length)
    return order


@dataclass(frozen=True, eq=False)
class IndexAction:
    """A permutation of sample indices; ``permutation[i]`` is the index of phi(v_i)."""

    permutation: np.ndarray
    order: int = 0

    def __post_init__(self):
        perm = np.array(self.permutation, dtype=np.int64).reshape(-1)
        m = perm.shape[0]
        if m == 0 or not np.array_equal(np.sort(perm), np.arange(m)):
            raise ValueError("permutation must be a bijection on 0..m-1")
        least = permutation_order(perm)
        if self.order and self.order != least:
            raise ValueError(f"declared order {self.order} but permutation has order {least}")
        object.__setattr__(self, "permutation", _frozen(perm))
        object.__setattr__(self, "order", least)

    @property
    def size(self) -> int:
        return self.permutation.shape[0]

    def power(self, k: int) -> np.ndarray:
        """Index array of the k-th power (k taken mod order)."""
        k %= self.order
        out = np.arange(self.size)
        for _ in range(k):
            out = self.permutation[out]
        return out

    def fixed_indices(self) -> np.ndarray:
        return np.flatnonzero(self.permutation == np.arange(self.size))


def apply_grading_operator(f: SampledFunction, act: IndexAction, times: int = 1) -> SampledFunction:
    """T(f) = f o phi at sample level: ``T(f)[i] = f[permutation[i]]``."""
    if f.sample_count != act.size:
        raise DimensionError(f"function has {f.sample_count} samples, action acts on {act.size}")
    return SampledFunction(f.values[act.power(times)])


def check_root(lam: complex, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> complex:
    lam = complex(lam)
    if n < 1:
        raise InvalidRootError(f"order must be positive, got {n}")
    if abs(lam**n - 1) > tol.root_of_unity:
        raise InvalidRootError(f"lambda={lam} is not an {n}-th root of unity (|lambda^n - 1| = {abs(lam**n - 1):.3g})")
    if abs(lam - 1) <= tol.root_of_unity:
        raise InvalidRootError("lambda must differ from 1")
    return lam


def root_of_unity(k: int, n: int) -> complex:
    """exp(2 pi i k / n) with rounding noise removed (exact for the real/imaginary axis roots)."""
    z = np.exp(2j * np.pi * k / n)
    re, im = float(np.round(z.real, 15)), float(np.round(z.imag, 15))
    return complex(re + 0.0, im + 0.0)


def root_order(lam: complex, n: int, tol: Tolerances = DEFAULT_TOLERANCES) -> int:
    """Multiplicative order of an n-th root of unity."""
    for d in range(1, n + 1):
        if n % d == 0 and abs(complex(lam) ** d - 1) <= tol.root_of_unity:
            return d
    raise InvalidRootError(f"lambda={lam} is not an {n}-th root of unity")


def _orbit_powers(f: SampledFunction, act: IndexAction) -> np.ndarray:
    """Stack of T^i f for i = 0..n-1, shape (n, m)."""
    n = act.order
    out = np.empty((n, f.sample_count), dtype=np.complex128)
    idx = np.arange(act.size)
    for i in range(n):
        out[i] = f.values[idx]
        idx = act.permutation[idx]
    return out


def project_component(f: SampledFunction, act: IndexAction, j: int, lam: complex,
                      tol: Tolerances = DEFAULT_TOLERANCES) -> SampledFunction:
    """Averaging projection onto ker(T - lam^j): (1/n) sum_i lam^(-ij) T^i f."""
    if f.sample_count != act.size:
        raise DimensionError(f"function has {f.sample_count} samples, action acts on {act.size}")
    n = act.order
    lam = check_root(lam, n, tol)
    if not 0 <= j < n:
        raise ValueError(f"component index {j} outside [0, {n})")
    weights = lam ** (-j * np.arange(n))
    return SampledFunction(weights @ _orbit_powers(f, act) / n)


@dataclass(frozen=True, eq=False)
class GradingDecomposition:
    components: tuple[SampledFunction, ...]
    lam: complex
    order: int

    def reconstruct(self) -> SampledFunction:
        return SampledFunction(np.sum([c.values for c in self.components], axis=0))

    def reconstruction_residual(self, f: SampledFunction) -> float:
        return float(np.max(np.abs(self.reconstruct().values - f.values)))

    def nontrivial(self) -> list[tuple[int, SampledFunction]]:
        return [(j, c) for j, c in enumerate(self.components) if j != 0]


def decompose(f: SampledFunction, act: IndexAction, lam: complex,
              tol: Tolerances = DEFAULT_TOLERANCES) -> GradingDecomposition:
    """Split f into homogeneous components with T(component_j) = lam^j component_j.

    lam must be a primitive n-th root here: for a non-primitive root the
    eigenspaces ker(T - lam^j) repeat and miss part of the space, so the
    components would not sum back to f.
    """
    n = act.order
    lam = check_root(lam, n, tol)
    if root_order(lam, n, tol) != n:
        raise InvalidRootError(
            f"decomposition needs a primitive {n}-th root; lambda={lam} has order {root_order(lam, n, tol)}")
    stack = _orbit_powers(f, act)
    # DFT over the orbit index: row j = (1/n) sum_i lam^(-ij) T^i f
    dft = lam ** (-np.outer(np.arange(n), np.arange(n))) / n
    comps = tuple(SampledFunction(row) for row in dft @ stack)
    dec = GradingDecomposition(comps, lam, n)
    resid = dec.reconstruction_residual(f)
    if resid > tol.reconstruction * (1 + f.sup_norm()):
        raise ArithmeticError(f"reconstruction residual {resid:.3g} above tolerance")
    return dec


def eigen_residual(g: SampledFunction, act: IndexAction, eigenvalue: complex) -> float:
    """||T g - eigenvalue * g||_inf."""
    tg = apply_grading_operator(g, act)
    return float(np.max(np.abs(tg.values - eigenvalue * g.values))) if g.sample_count else 0.0


@dataclass(frozen=True)
class ProductGradingReport:
    residuals: dict          # (i, j) -> eigen residual of c_i * c_j against lam^(i+j)
    thresholds: dict
    passed: bool

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def check_product_grading(dec1: GradingDecomposition, dec2: GradingDecomposition, act: IndexAction,
                          tol: Tolerances = DEFAULT_TOLERANCES) -> ProductGradingReport:
    """Check A_i A_j in A_{i+j mod n} on every pair of components."""
    if dec1.order != dec2.order or dec1.order != act.order:
        raise IncompatibilityError("decompositions use different orders")
    if abs(dec1.lam - dec2.lam) > tol.root_of_unity:
        raise IncompatibilityError("decompositions use different roots of unity")
    if dec1.components[0].sample_count != dec2.components[0].sample_count:
        raise IncompatibilityError("decompositions live on different sample sets")
    n, lam = dec1.order, dec1.lam
    residuals, thresholds = {}, {}
    passed = True
    for i, a in enumerate(dec1.components):
        for j, b in enumerate(dec2.components):
            prod = a * b
            r = eigen_residual(prod, act, lam ** ((i + j) % n))
            thr = tol.product_grading * (1 + a.sup_norm() * b.sup_norm())
            residuals[(i, j)] = r
            thresholds[(i, j)] = thr
            passed &= r <= thr
    return ProductGradingReport(residuals, thresholds, bool(passed))
