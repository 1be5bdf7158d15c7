"""Reduced words in the free group on x, y.

Letters are small ints: 0 = x, 1 = x^-1, 2 = y, 3 = y^-1, so the inverse of
letter ``l`` is ``l ^ 1``.  The literal syntax writes inverses in upper case:
``"yxYX"`` is the commutator y x y^-1 x^-1.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

X, X_INV, Y, Y_INV = 0, 1, 2, 3
LETTERS = (X, X_INV, Y, Y_INV)
SYMBOLS = "xXyY"


def inverse_letter(l: int) -> int:
    return l ^ 1


def _stack_reduce(letters: Iterable[int]) -> tuple[int, ...]:
    out: list[int] = []
    for l in letters:
        if l not in LETTERS:
            raise ValueError(f"invalid letter {l!r}")
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


@dataclass(frozen=True, order=True)
class Word:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for a, b in zip(letters, letters[1:]):
            if a == b ^ 1:
                raise ValueError("Word must be freely reduced; use reduce()")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def _trusted(cls, letters: tuple[int, ...]) -> "Word":
        # caller guarantees a reduced tuple
        w = object.__new__(cls)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def parse(cls, text: str) -> "Word":
        try:
            return reduce(SYMBOLS.index(ch) for ch in text if not ch.isspace())
        except ValueError:
            raise ValueError(f"word literal {text!r} may only use x, X, y, Y") from None

    def __str__(self) -> str:
        return "".join(SYMBOLS[l] for l in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self) or 'e'!r})"

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def inverse(self) -> "Word":
        return Word._trusted(tuple(l ^ 1 for l in reversed(self.letters)))

    @property
    def is_identity(self) -> bool:
        return not self.letters


IDENTITY = Word()


def reduce(letters: Iterable[int]) -> Word:
    """Free reduction by a left-to-right stack (the result is order independent)."""
    return Word._trusted(_stack_reduce(letters))


def multiply(u: Word, v: Word) -> Word:
    a, b = u.letters, v.letters
    k = 0
    n = min(len(a), len(b))
    while k < n and a[len(a) - 1 - k] == b[k] ^ 1:
        k += 1
    return Word._trusted(a[:len(a) - k] + b[k:])


def commutator_b() -> Word:
    """b = y x y^-1 x^-1."""
    return Word.parse("yxYX")


def reduced_words(max_length: int) -> Iterator[Word]:
    """All reduced words of length <= max_length, shortlex order."""
    level = [()]
    yield IDENTITY
    for _ in range(max_length):
        nxt = []
        for w in level:
            for l in LETTERS:
                if w and w[-1] == l ^ 1:
                    continue
                nxt.append(w + (l,))
        for w in nxt:
            yield Word._trusted(w)
        level = nxt


def count_reduced_words(max_length: int) -> int:
    """1 + 4 (3^R - 1) / 2."""
    return 1 + 2 * (3**max_length - 1)
