"""Finitely supported elements of the group algebra C[F_2]."""
from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from types import MappingProxyType
from typing import Hashable, Mapping

from ..config import DEFAULT_LIMITS, Limits
from ..errors import ResourceError
from .quotient import PartitionSpec
from .words import Word, multiply


@dataclass(frozen=True, eq=False)
class GroupAlgebraElement:
    terms: Mapping[Word, complex]

    def __post_init__(self):
        clean = {}
        for w, c in dict(self.terms).items():
            if not isinstance(w, Word):
                w = Word.parse(w)
            c = complex(c)
            if c != 0:
                clean[w] = clean.get(w, 0) + c
        clean = {w: c for w, c in clean.items() if c != 0}
        object.__setattr__(self, "terms", MappingProxyType(dict(sorted(clean.items()))))

    @classmethod
    def delta(cls, w, coeff: complex = 1.0) -> "GroupAlgebraElement":
        return cls({w if isinstance(w, Word) else Word.parse(w): coeff})

    @classmethod
    def parse(cls, text: str) -> "GroupAlgebraElement":
        """Shorthand literal ``"x + X + 2*y - 0.5*yxYX"`` (real coefficients)."""
        terms: dict[Word, complex] = defaultdict(complex)
        for chunk in text.replace("-", "+-").split("+"):
            chunk = chunk.strip()
            if not chunk:
                continue
            sign = 1.0
            if chunk.startswith("-"):
                sign, chunk = -1.0, chunk[1:].strip()
            coeff, _, word = chunk.rpartition("*")
            w = "" if word.strip() in ("e", "1") else word.strip()
            terms[Word.parse(w)] += sign * (float(coeff) if coeff else 1.0)
        return cls(terms)

    @classmethod
    def from_json(cls, data) -> "GroupAlgebraElement":
        if isinstance(data, str):
            data = json.loads(data)
        terms: dict[Word, complex] = defaultdict(complex)
        for t in data:
            terms[Word.parse(t["word"])] += complex(t.get("re", 0.0), t.get("im", 0.0))
        return cls(terms)

    def to_json_list(self) -> list[dict]:
        return [{"word": str(w), "re": c.real, "im": c.imag} for w, c in self.terms.items()]

    def __eq__(self, other) -> bool:
        return isinstance(other, GroupAlgebraElement) and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        t = defaultdict(complex, self.terms)
        for w, c in other.terms.items():
            t[w] += c
        return GroupAlgebraElement(t)

    def __sub__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return self + other.scale(-1)

    def scale(self, s: complex) -> "GroupAlgebraElement":
        return GroupAlgebraElement({w: s * c for w, c in self.terms.items()})

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        return convolve(self, other)

    def adjoint(self) -> "GroupAlgebraElement":
        """a* = sum conj(c) w^-1."""
        return GroupAlgebraElement({w.inverse(): c.conjugate() for w, c in self.terms.items()})

    def l1_norm(self) -> float:
        return float(sum(abs(c) for c in self.terms.values()))

    def max_length(self) -> int:
        return max((len(w) for w in self.terms), default=0)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({c.real:g}{c.imag:+g}i)*{str(w) or 'e'}" for w, c in self.terms.items())


def convolve(u: GroupAlgebraElement, v: GroupAlgebraElement,
             limits: Limits = DEFAULT_LIMITS) -> GroupAlgebraElement:
    if len(u) * len(v) > limits.max_convolution_terms:
        raise ResourceError(f"convolution of {len(u)} x {len(v)} terms exceeds cap {limits.max_convolution_terms}")
    out: dict[Word, complex] = defaultdict(complex)
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            out[multiply(a, b)] += ca * cb
    return GroupAlgebraElement(out)


def homogeneous_components(a: GroupAlgebraElement, p: PartitionSpec) -> dict[Hashable, GroupAlgebraElement]:
    """Split a by the class of each word; only occupied classes appear."""
    parts: dict[Hashable, dict[Word, complex]] = defaultdict(dict)
    for w, c in a.terms.items():
        parts[p.classify(w)][w] = c
    return {label: GroupAlgebraElement(t) for label, t in parts.items()}


def support_classes(a: GroupAlgebraElement, p: PartitionSpec) -> set:
    return {p.classify(w) for w in a.terms}
