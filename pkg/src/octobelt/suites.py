"""Exhaustive and seeded-random identity sweeps shared by the CLI and the tests."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterable, List, Optional, Tuple

from .algebra import Octonion, associator, oct_conj, oct_mul, oct_norm
from .loop16 import ELEMENTS, SignedBasis, loop_mul


@dataclass
class SuiteResult:
    name: str
    checked: int
    passed: int
    counterexample: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.checked == self.passed and self.counterexample is None

    def line(self) -> str:
        status = "ok" if self.ok else "FAIL"
        text = f"{status:4} {self.passed}/{self.checked} {self.name}"
        if self.counterexample:
            text += f" -- first counterexample: {self.counterexample}"
        return text


def random_rational(rng: random.Random, bound: int = 9) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def random_octonion(rng: random.Random, bound: int = 9) -> Octonion:
    return Octonion.from_coeffs([random_rational(rng, bound) for _ in range(8)])


def random_pairs(n: int, seed: int, bound: int = 9) -> List[Tuple[Octonion, Octonion]]:
    rng = random.Random(seed)
    return [(random_octonion(rng, bound), random_octonion(rng, bound)) for _ in range(n)]


def _run(name: str, cases: Iterable, check: Callable[..., bool], show: Callable[..., str]) -> SuiteResult:
    checked = passed = 0
    first = None
    for case in cases:
        checked += 1
        if check(*case):
            passed += 1
        elif first is None:
            first = show(*case)
    return SuiteResult(name, checked, passed, first)


def _sb(*xs: SignedBasis) -> str:
    return "(" + ", ".join(x.name for x in xs) + ")"


def moufang_loop() -> SuiteResult:
    """(xy)(zx) = (x(yz))x on all 16^3 loop triples."""
    m = loop_mul
    return _run(
        "Moufang identity on loop triples",
        product(ELEMENTS, repeat=3),
        lambda x, y, z: m(m(x, y), m(z, x)) == m(m(x, m(y, z)), x),
        _sb,
    )


def alternative_loop() -> SuiteResult:
    m = loop_mul
    return _run(
        "alternative laws on loop pairs",
        product(ELEMENTS, repeat=2),
        lambda x, y: m(m(x, x), y) == m(x, m(x, y)) and m(y, m(x, x)) == m(m(y, x), x),
        _sb,
    )


def flexible_loop() -> SuiteResult:
    m = loop_mul
    return _run(
        "flexible law on loop pairs",
        product(ELEMENTS, repeat=2),
        lambda x, y: m(m(x, y), x) == m(x, m(y, x)),
        _sb,
    )


def _pair_text(x: Octonion, y: Octonion) -> str:
    return f"x = {x}, y = {y}"


def norm_multiplicative(pairs) -> SuiteResult:
    return _run(
        "norm multiplicativity on random pairs",
        pairs,
        lambda x, y: oct_norm(oct_mul(x, y)) == oct_norm(x) * oct_norm(y),
        _pair_text,
    )


def alternative_random(pairs) -> SuiteResult:
    m = oct_mul
    return _run(
        "alternative and flexible laws on random pairs",
        pairs,
        lambda x, y: (
            m(m(x, x), y) == m(x, m(x, y))
            and m(y, m(x, x)) == m(m(y, x), x)
            and m(m(x, y), x) == m(x, m(y, x))
        ),
        _pair_text,
    )


def conj_antiautomorphism(pairs) -> SuiteResult:
    return _run(
        "conj(xy) = conj(y) conj(x) on random pairs",
        pairs,
        lambda x, y: oct_conj(oct_mul(x, y)) == oct_mul(oct_conj(y), oct_conj(x)),
        _pair_text,
    )


def associator_witnesses() -> List[Tuple[SignedBasis, SignedBasis, SignedBasis, Octonion]]:
    """Ordered triples of positive imaginary basis elements with a nonzero associator."""
    gens = [SignedBasis(1, n) for n in range(1, 8)]
    found = []
    for x, y, z in product(gens, repeat=3):
        a = associator(x.to_octonion(), y.to_octonion(), z.to_octonion())
        if not a.is_zero():
            found.append((x, y, z, a))
    return found
