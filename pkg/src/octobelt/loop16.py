"""The 16-element loop of signed octonion basis elements."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, NamedTuple, Tuple

from .algebra import BASIS_NAMES, Octonion, oct_mul

INDEX_BY_NAME = {name: n for n, name in enumerate(BASIS_NAMES)}


@dataclass(frozen=True, order=True)
class SignedBasis:
    """``sign * e_index`` with sign in {+1, -1} and index 0..7 (1, i, j, k, L, Li, Lj, Lk)."""

    sign: int
    index: int

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if not 0 <= self.index < 8:
            raise ValueError(f"basis index out of range: {self.index!r}")

    @classmethod
    def parse(cls, name: str) -> "SignedBasis":
        sign = 1
        if name.startswith("-"):
            sign, name = -1, name[1:]
        try:
            return cls(sign, INDEX_BY_NAME[name])
        except KeyError:
            raise ValueError(f"unknown basis element {name!r}") from None

    @property
    def name(self) -> str:
        return ("-" if self.sign < 0 else "") + BASIS_NAMES[self.index]

    def __str__(self) -> str:
        return self.name

    def __neg__(self) -> "SignedBasis":
        return SignedBasis(-self.sign, self.index)

    def __mul__(self, other: "SignedBasis") -> "SignedBasis":
        if not isinstance(other, SignedBasis):
            return NotImplemented
        return loop_mul(self, other)

    def to_octonion(self) -> Octonion:
        return Octonion.basis(self.index) * self.sign


ONE = SignedBasis(1, 0)
ELEMENTS: Tuple[SignedBasis, ...] = tuple(
    SignedBasis(s, n) for s in (1, -1) for n in range(8)
)
GENERATORS: Tuple[SignedBasis, ...] = tuple(SignedBasis(1, n) for n in range(1, 8))


def from_octonion(x: Octonion) -> SignedBasis:
    """Inverse of the embedding; raises if ``x`` is not a signed basis element."""
    nz = [(n, c) for n, c in enumerate(x.coeffs) if c != 0]
    if len(nz) != 1 or abs(nz[0][1]) != 1:
        raise ValueError(f"{x} is not a signed basis element")
    n, c = nz[0]
    return SignedBasis(1 if c > 0 else -1, n)


class LoopTable(NamedTuple):
    rows: Tuple[Tuple[SignedBasis, ...], ...]

    def __getitem__(self, key):
        if isinstance(key, tuple):
            r, c = key
            return self.rows[r][c]
        return self.rows[key]

    def names(self) -> List[List[str]]:
        return [[e.name for e in row] for row in self.rows]


@lru_cache(maxsize=1)
def build_loop_table() -> LoopTable:
    rows = []
    for r in range(8):
        row = []
        for c in range(8):
            prod = oct_mul(Octonion.basis(r), Octonion.basis(c))
            try:
                row.append(from_octonion(prod))
            except ValueError as exc:
                raise AssertionError(f"loop not closed at ({r}, {c})") from exc
        rows.append(tuple(row))
    return LoopTable(tuple(rows))


def loop_mul(x: SignedBasis, y: SignedBasis) -> SignedBasis:
    entry = build_loop_table().rows[x.index][y.index]
    return SignedBasis(entry.sign * x.sign * y.sign, entry.index)


def eval_word(word: Iterable[SignedBasis]) -> SignedBasis:
    """Left-normed product ((w1 w2) w3)...; the empty word is +1."""
    acc = ONE
    for g in word:
        acc = loop_mul(acc, g)
    return acc


def eval_word_right(word: Iterable[SignedBasis]) -> SignedBasis:
    """Right-normed product w1 (w2 (w3 ...))."""
    acc = ONE
    for g in reversed(list(word)):
        acc = loop_mul(g, acc)
    return acc


class Predicates(NamedTuple):
    pointing_up: bool
    flag_right: bool
    black_arrowhead: bool


def predicates(x: SignedBasis) -> Predicates:
    """The three observables the apparatus rules condition on, read off ``encode(x)``."""
    from .apparatus import encode, state_predicates

    return state_predicates(encode(x))
