"""Finite permutation quotients of F_2, the 3-sheeted cover, and group partitions."""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import permutations
from typing import Callable, Hashable

from .words import X, X_INV, Y, Y_INV, Word, commutator_b, multiply, reduced_words


@dataclass(frozen=True, order=True)
class Permutation:
    """``images[k]`` is the image of point k.  Product is composition: (s * t)(k) = s(t(k))."""

    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{imgs} is not a permutation")
        object.__setattr__(self, "images", imgs)

    @classmethod
    def identity(cls, m: int) -> "Permutation":
        return cls(tuple(range(m)))

    @classmethod
    def from_cycles(cls, m: int, *cycles) -> "Permutation":
        imgs = list(range(m))
        for cyc in cycles:
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                imgs[a] = b
        return cls(tuple(imgs))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(tuple(self.images[k] for k in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.degree
        for k, v in enumerate(self.images):
            inv[v] = k
        return Permutation(tuple(inv))

    @property
    def is_identity(self) -> bool:
        return self.images == tuple(range(self.degree))

    def cycles(self) -> list[tuple[int, ...]]:
        seen, out = set(), []
        for s in range(self.degree):
            if s in seen:
                continue
            cyc, k = [], s
            while k not in seen:
                seen.add(k)
                cyc.append(k)
                k = self.images[k]
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out

    def order(self) -> int:
        p, k = self, 1
        while not p.is_identity:
            p, k = p * self, k + 1
        return k

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"


@dataclass(frozen=True)
class QuotientMap:
    """Homomorphism F_2 -> Sym(m) fixed by the images of x and y."""

    image_of_x: Permutation
    image_of_y: Permutation

    def __post_init__(self):
        if self.image_of_x.degree != self.image_of_y.degree:
            raise ValueError("generator images must have the same degree")

    @property
    def degree(self) -> int:
        return self.image_of_x.degree

    def letter_image(self, l: int) -> Permutation:
        return {X: self.image_of_x, X_INV: self.image_of_x.inverse(),
                Y: self.image_of_y, Y_INV: self.image_of_y.inverse()}[l]

    @cached_property
    def _table(self):
        """Elements of the image group, their multiplication table and letter indices."""
        elems = sorted(self.image_group())
        index = {p: k for k, p in enumerate(elems)}
        mult = [[index[a * b] for b in elems] for a in elems]
        letters = [index[self.letter_image(l)] for l in (X, X_INV, Y, Y_INV)]
        return elems, mult, letters, index[Permutation.identity(self.degree)]

    def evaluate_index(self, w: Word) -> int:
        """Index (into the sorted image group) of the image of w, folded letter by letter."""
        _, mult, letters, acc = self._table
        for l in w.letters:
            acc = mult[acc][letters[l]]
        return acc

    def evaluate(self, w: Word) -> Permutation:
        """Product of generator images along w, leftmost letter outermost."""
        return self._table[0][self.evaluate_index(w)]

    def orbit(self, point: int = 0) -> set[int]:
        gens = [self.image_of_x, self.image_of_y]
        seen, todo = {point}, [point]
        while todo:
            k = todo.pop()
            for g in gens + [g.inverse() for g in gens]:
                if g(k) not in seen:
                    seen.add(g(k))
                    todo.append(g(k))
        return seen

    def in_stabilizer(self, w: Word, point: int = 0) -> bool:
        """Membership in H = Stab(point); for a covering this says the lift of w is a loop."""
        return self.evaluate(w)(point) == point

    def image_group(self) -> set[Permutation]:
        gens = [self.image_of_x, self.image_of_y]
        ident = Permutation.identity(self.degree)
        seen, todo = {ident}, [ident]
        while todo:
            p = todo.pop()
            for g in gens:
                q = p * g
                if q not in seen:
                    seen.add(q)
                    todo.append(q)
        return seen


def evaluate_quotient(q: QuotientMap, w: Word) -> Permutation:
    return q.evaluate(w)


def build_cover_automaton() -> QuotientMap:
    """Three-sheeted cover of the figure eight: sheets {0, 1, 2}, x swaps sheets 0 and 1,
    y swaps sheets 0 and 2.  H is the stabilizer of sheet 0, of index 3, and b is not in H."""
    q = QuotientMap(Permutation.from_cycles(3, (0, 1)), Permutation.from_cycles(3, (0, 2)))
    b = commutator_b()
    assert len(q.orbit(0)) == 3
    assert not q.in_stabilizer(b)
    return q


@dataclass(frozen=True)
class PartitionSpec:
    """A partition G = union of G_h indexed by a finite group, G_h G_k in G_{hk}.

    ``classify`` sends a word to its class label; ``compose`` multiplies labels.
    """

    name: str
    classify: Callable[[Word], Hashable]
    compose: Callable[[Hashable, Hashable], Hashable]
    identity: Hashable
    labels: tuple
    quotient: QuotientMap | None = None

    @property
    def n_classes(self) -> int:
        return len(self.labels)

    def class_of(self, w: Word) -> Hashable:
        return self.classify(w)


def build_s3_partition() -> PartitionSpec:
    q = build_cover_automaton()
    image = q.image_group()
    s3 = {Permutation(p) for p in permutations(range(3))}
    assert image == s3, "x, y images must generate S_3"
    labels = tuple(sorted(s3, key=lambda p: (p.order(), p.images)))
    return PartitionSpec("S3", q.evaluate, lambda a, b: a * b, Permutation.identity(3), labels, q)


def parity_partition(w: Word) -> int:
    """Reduced length mod 2; a homomorphism to Z_2 since reduction removes letters in pairs."""
    return len(w) % 2


PARITY = PartitionSpec("parity", parity_partition, lambda a, b: (a + b) % 2, 0, (0, 1))


def partition_by_name(name: str) -> PartitionSpec:
    if name.lower() in ("s3", "s_3"):
        return build_s3_partition()
    if name.lower() in ("parity", "z2"):
        return PARITY
    raise ValueError(f"unknown partition {name!r}")


def check_partition_axiom(p: PartitionSpec, max_length: int) -> tuple[int, list]:
    """Exhaustively test class(uv) = class(u) class(v) over reduced words of length <= max_length.

    Returns the number of pairs checked and up to 10 counterexamples.
    """
    words = list(reduced_words(max_length))
    classes = [p.classify(w) for w in words]
    failures = []
    checked = 0
    for u, cu in zip(words, classes):
        for v, cv in zip(words, classes):
            checked += 1
            if p.classify(multiply(u, v)) != p.compose(cu, cv):
                if len(failures) < 10:
                    failures.append((str(u), str(v)))
    return checked, failures
