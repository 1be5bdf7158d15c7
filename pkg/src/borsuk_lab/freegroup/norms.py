"""Operator-norm brackets for elements of C[F_2] acting on l^2(F_2).

The lower bound is the norm of the compression P_R L_a P_R to the ball of
reduced words of length <= R, estimated by power iteration on C^* C.  The
upper bound is the l^1 norm of the coefficients (each group element acts as
a unitary).
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from typing import Hashable

import numpy as np

from ..config import DEFAULT_LIMITS, Limits
from ..errors import ResourceError
from .group_algebra import GroupAlgebraElement, homogeneous_components
from .quotient import PartitionSpec
from .words import LETTERS, count_reduced_words


@dataclass(frozen=True, eq=False)
class WordBall:
    """Index structure for reduced words of length <= radius (shortlex by construction).

    ``left[l][i]`` is the index of the reduced word l * w_i, or ``size`` (a
    sentinel slot) when that word has length radius + 1.  Each ``left[l]``
    has ``size + 1`` entries with the sentinel fixed.
    """

    radius: int
    size: int
    lengths: np.ndarray
    left: tuple


@lru_cache(maxsize=4)
def word_ball(radius: int) -> WordBall:
    n = count_reduced_words(radius)
    first = np.full(n, -1, dtype=np.int64)    # first letter, -1 for the empty word
    tail = np.full(n, -1, dtype=np.int64)     # index of the word minus its first letter
    lengths = np.zeros(n, dtype=np.int64)
    child = np.full((4, n), -1, dtype=np.int64)
    level = np.array([0])
    offs = 1
    for depth in range(1, radius + 1):
        start = offs
        for l in LETTERS:
            parents = level[first[level] != (l ^ 1)]
            ids = np.arange(offs, offs + len(parents))
            child[l, parents] = ids
            first[ids] = l
            tail[ids] = parents
            lengths[ids] = depth
            offs += len(parents)
        level = np.arange(start, offs)
    left = []
    for l in LETTERS:
        m = np.where(first == (l ^ 1), tail, child[l])
        m[m < 0] = n
        left.append(np.append(m, n))
    return WordBall(radius, n, lengths, tuple(left))


def _word_map(ball: WordBall, letters: tuple[int, ...]) -> np.ndarray:
    """Index map i -> index of (w * word_i) for the word w with these letters, sentinel if outside."""
    m = np.arange(ball.size + 1)
    for l in reversed(letters):
        m = ball.left[l][m]
    return m[:-1]


class CompressedOperator:
    """Matrix-free C = P_R L_a P_R on the ball and its adjoint."""

    def __init__(self, a: GroupAlgebraElement, radius: int):
        self.ball = word_ball(radius)
        self.coeffs = np.array([c for c in a.terms.values()], dtype=np.complex128)
        self.maps = [_word_map(self.ball, w.letters) for w in a.terms]

    @property
    def size(self) -> int:
        return self.ball.size

    def matvec(self, v: np.ndarray) -> np.ndarray:
        out = np.zeros(self.size + 1, dtype=np.complex128)
        for c, m in zip(self.coeffs, self.maps):
            out[m] += c * v          # m is injective off the sentinel
        return out[:-1]

    def rmatvec(self, u: np.ndarray) -> np.ndarray:
        ext = np.append(u, 0.0)
        out = np.zeros(self.size, dtype=np.complex128)
        for c, m in zip(self.coeffs, self.maps):
            out += c.conjugate() * ext[m]
        return out


@dataclass(frozen=True)
class NormEstimate:
    lower: float
    upper: float
    radius: int
    iterations: int
    rayleigh_delta: float
    seed: int

    def to_dict(self, element: GroupAlgebraElement | None = None) -> dict:
        d = asdict(self)
        d["R"] = d.pop("radius")
        if element is not None:
            d["element"] = element.to_json_list()
        return d

    def to_json(self, element: GroupAlgebraElement | None = None) -> str:
        return json.dumps(self.to_dict(element))


def truncated_norm(a: GroupAlgebraElement, radius: int, iters: int | None = None, seed: int = 0,
                   limits: Limits = DEFAULT_LIMITS) -> NormEstimate:
    if radius < 1:
        raise ValueError("radius must be >= 1")
    if radius > limits.max_norm_radius:
        raise ResourceError(f"radius {radius} above cap {limits.max_norm_radius}")
    iters = limits.power_iterations if iters is None else iters
    upper = a.l1_norm()
    if not a.terms:
        return NormEstimate(0.0, 0.0, radius, 0, 0.0, seed)
    op = CompressedOperator(a, radius)
    rng = np.random.default_rng(seed)
    v = rng.uniform(-1, 1, op.size) + 1j * rng.uniform(-1, 1, op.size)
    v /= np.linalg.norm(v)
    rq = prev = 0.0
    for _ in range(iters):
        u = op.rmatvec(op.matvec(v))
        prev, rq = rq, float(np.vdot(v, u).real)
        nu = np.linalg.norm(u)
        if nu == 0:
            rq = 0.0
            break
        v = u / nu
    return NormEstimate(float(np.sqrt(max(rq, 0.0))), upper, radius, iters, abs(rq - prev), seed)


@dataclass
class NormInequalityReport:
    partition: str
    n_classes: int
    radius: int
    whole_lower: float
    whole_upper: float
    per_class: dict = field(default_factory=dict)   # label -> {"lower", "bound", "passed", "ratio"}

    @property
    def passed(self) -> bool:
        return all(r["passed"] for r in self.per_class.values())

    @property
    def max_ratio(self) -> float:
        return max((r["ratio"] for r in self.per_class.values()), default=0.0)


def check_norm_inequality(a: GroupAlgebraElement, p: PartitionSpec, radius: int, iters: int | None = None,
                          seed: int = 0, limits: Limits = DEFAULT_LIMITS) -> NormInequalityReport:
    """Per class i check lower(x_i) <= sqrt(n) * l1(x), a sound consequence of
    |x_i|_op <= sqrt(n) |x|_op, and record the ratio lower(x_i) / lower(x)."""
    whole = truncated_norm(a, radius, iters, seed, limits)
    n = p.n_classes
    bound = np.sqrt(n) * whole.upper
    rep = NormInequalityReport(p.name, n, radius, whole.lower, whole.upper)
    for label, comp in homogeneous_components(a, p).items():
        est = truncated_norm(comp, radius, iters, seed, limits)
        ratio = est.lower / whole.lower if whole.lower > 0 else float("inf")
        rep.per_class[_label_key(label)] = {
            "lower": est.lower, "bound": float(bound), "passed": bool(est.lower <= bound + 1e-9), "ratio": ratio,
        }
    return rep


def _label_key(label: Hashable) -> str:
    return str(label)
