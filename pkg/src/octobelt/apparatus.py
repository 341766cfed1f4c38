"""Discrete model of the hoop, ribbon, flag and arrowhead apparatus.

A state records what is visible in standard form: the side of the hoop the
flag sits on, whether the arrowhead points up or down, which face of the
ribbon shows at the arrowhead, and the number of full ribbon twists modulo 2
(a 4pi twist can be undone without moving the arrowhead, a 2pi twist cannot).

Every generator move has two parts:

* a *base effect* on (flag, direction, face), independent of twisting;
* a twist update ``base_sign(class) XOR reversal(state)``. Turning the other
  way by a half turn differs from the default turn by one full twist, so each
  "reverse the direction" clause toggles the parity.

The reversal predicates are fixed by the rules of the model. The base signs are
not observable from the rule text, so they are data (:class:`SignConvention`),
found by :func:`solve_signs` and shipped as ``data/default_convention.json``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from importlib import resources
from itertools import product
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .algebra import BASIS_NAMES
from .loop16 import (
    ELEMENTS,
    INDEX_BY_NAME,
    Predicates,
    SignedBasis,
    loop_mul,
)


class Flag(str, Enum):
    LEFT = "left"
    RIGHT = "right"


class Direction(str, Enum):
    DOWN = "down"
    UP = "up"


class Face(str, Enum):
    WHITE = "white"
    BLACK = "black"


@dataclass(frozen=True)
class ApparatusState:
    flag: Flag
    arrow_dir: Direction
    arrow_face: Face
    twist_parity: int

    def __post_init__(self):
        object.__setattr__(self, "flag", Flag(self.flag))
        object.__setattr__(self, "arrow_dir", Direction(self.arrow_dir))
        object.__setattr__(self, "arrow_face", Face(self.arrow_face))
        if self.twist_parity not in (0, 1):
            raise ValueError(f"twist_parity must be 0 or 1, got {self.twist_parity!r}")

    @property
    def orientation_class(self) -> int:
        """0..7 in the order 1, i, j, k, L, Li, Lj, Lk (twist ignored)."""
        return (
            (self.arrow_face is Face.BLACK)
            + 2 * (self.arrow_dir is Direction.UP)
            + 4 * (self.flag is Flag.RIGHT)
        )

    def describe(self) -> str:
        return (
            f"flag={self.flag.value} dir={self.arrow_dir.value} "
            f"face={self.arrow_face.value} twist={self.twist_parity}"
        )


IDENTITY_STATE = ApparatusState(Flag.LEFT, Direction.DOWN, Face.WHITE, 0)
ALL_STATES: Tuple[ApparatusState, ...] = tuple(
    ApparatusState(f, d, c, t) for t in (0, 1) for f in Flag for d in Direction for c in Face
)

GENERATOR_NAMES: Tuple[str, ...] = ("i", "j", "k", "L", "Li", "Lj", "Lk")
CLASS_NAMES: Tuple[str, ...] = BASIS_NAMES


def encode(x: SignedBasis) -> ApparatusState:
    """1 -> (down, white), i -> (down, black), j -> (up, white), k -> (up, black).

    The L part moves the flag to the right; a negative sign is one 2pi twist.
    """
    q = x.index % 4
    return ApparatusState(
        Flag.RIGHT if x.index >= 4 else Flag.LEFT,
        Direction.UP if q >= 2 else Direction.DOWN,
        Face.BLACK if q % 2 else Face.WHITE,
        1 if x.sign < 0 else 0,
    )


def decode(s: ApparatusState) -> SignedBasis:
    return SignedBasis(-1 if s.twist_parity else 1, s.orientation_class)


def state_predicates(s: ApparatusState) -> Predicates:
    return Predicates(
        pointing_up=s.arrow_dir is Direction.UP,
        flag_right=s.flag is Flag.RIGHT,
        black_arrowhead=s.arrow_face is Face.BLACK,
    )


def normalize(raw_twist: int, flag, arrow_dir, arrow_face) -> ApparatusState:
    """Fold an integer count of 2pi twists to its parity; two full twists cancel."""
    return ApparatusState(flag, arrow_dir, arrow_face, raw_twist % 2)


Reversal = Callable[[Predicates], bool]

# Direction-reversal clauses, per generator.
DEFAULT_REVERSALS: Dict[str, Reversal] = {
    "i": lambda p: p.flag_right ^ p.pointing_up,
    "j": lambda p: False,
    "k": lambda p: p.pointing_up,
    "L": lambda p: p.pointing_up ^ p.flag_right,
    "Li": lambda p: p.pointing_up,
    "Lj": lambda p: p.black_arrowhead ^ p.flag_right,
    "Lk": lambda p: p.black_arrowhead ^ p.flag_right ^ p.pointing_up,
}

REVERSAL_TEXT: Dict[str, str] = {
    "i": "flag_right XOR pointing_up",
    "j": "never",
    "k": "pointing_up",
    "L": "pointing_up XOR flag_right",
    "Li": "pointing_up",
    "Lj": "black_arrowhead XOR flag_right",
    "Lk": "black_arrowhead XOR flag_right XOR pointing_up",
}

OVERRIDES: Dict[str, Reversal] = {
    "always": lambda p: True,
    "never": lambda p: False,
}


def reversals_with(overrides: Optional[Mapping[str, str]] = None) -> Dict[str, Reversal]:
    """Default reversal table with some generators replaced by ``always``/``never``.

    Generator keys are matched case-insensitively (``lj`` means ``Lj``).
    """
    table = dict(DEFAULT_REVERSALS)
    by_lower = {g.lower(): g for g in GENERATOR_NAMES}
    for key, value in (overrides or {}).items():
        gen = by_lower.get(key.lower())
        if gen is None:
            raise ValueError(f"unknown generator in override: {key!r}")
        if value not in OVERRIDES:
            raise ValueError(f"override must be one of {sorted(OVERRIDES)}, got {value!r}")
        table[gen] = OVERRIDES[value]
    return table


@dataclass(frozen=True)
class GeneratorRule:
    """Base effect of one move on the visible orientation.

    ``turn_dir``/``turn_face`` say whether the rotation itself flips the arrow
    direction or the face shown at the arrowhead; ``recolour`` is the ribbon
    colour swap of the L-moves, which flips the face once more.
    """

    generator: str
    moves_flag: bool
    turn_dir: bool
    turn_face: bool
    recolour: bool = False

    def base_effect(self, flag: Flag, arrow_dir: Direction, arrow_face: Face):
        if self.moves_flag:
            flag = Flag.RIGHT if flag is Flag.LEFT else Flag.LEFT
        if self.turn_dir:
            arrow_dir = Direction.UP if arrow_dir is Direction.DOWN else Direction.DOWN
        if self.turn_face != self.recolour:
            arrow_face = Face.BLACK if arrow_face is Face.WHITE else Face.WHITE
        return flag, arrow_dir, arrow_face


RULES: Dict[str, GeneratorRule] = {
    "i": GeneratorRule("i", moves_flag=False, turn_dir=False, turn_face=True),
    "j": GeneratorRule("j", moves_flag=False, turn_dir=True, turn_face=False),
    "k": GeneratorRule("k", moves_flag=False, turn_dir=True, turn_face=True),
    "L": GeneratorRule("L", moves_flag=True, turn_dir=False, turn_face=False),
    "Li": GeneratorRule("Li", moves_flag=True, turn_dir=False, turn_face=False, recolour=True),
    "Lj": GeneratorRule("Lj", moves_flag=True, turn_dir=True, turn_face=True, recolour=True),
    "Lk": GeneratorRule("Lk", moves_flag=True, turn_dir=True, turn_face=False, recolour=True),
}


CONVENTION_FORMAT = "octobelt-sign-convention/1"


@dataclass(frozen=True)
class SignConvention:
    """Per-generator base twist bit for each of the 8 orientation classes.

    ``base_sign["Lj"][c]`` is the parity added by an unreversed ``Lj`` move
    from a state of class ``c`` (class order 1, i, j, k, L, Li, Lj, Lk).
    """

    base_sign: Mapping[str, Tuple[int, ...]] = field(hash=False)

    def __post_init__(self):
        clean = {}
        for g in GENERATOR_NAMES:
            bits = tuple(int(b) for b in self.base_sign[g])
            if len(bits) != 8 or any(b not in (0, 1) for b in bits):
                raise ValueError(f"base_sign[{g!r}] must be 8 bits, got {self.base_sign[g]!r}")
            clean[g] = bits
        extra = set(self.base_sign) - set(GENERATOR_NAMES)
        if extra:
            raise ValueError(f"unknown generators in convention: {sorted(extra)}")
        object.__setattr__(self, "base_sign", clean)

    def key(self) -> Tuple[int, ...]:
        """Canonical ordering: bits concatenated in generator order i, j, k, L, Li, Lj, Lk."""
        return tuple(b for g in GENERATOR_NAMES for b in self.base_sign[g])

    def __eq__(self, other):
        if not isinstance(other, SignConvention):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def bitstrings(self) -> Dict[str, str]:
        return {g: "".join(map(str, self.base_sign[g])) for g in GENERATOR_NAMES}

    def with_flipped(self, generator: str, cls: int) -> "SignConvention":
        bits = dict(self.base_sign)
        row = list(bits[generator])
        row[cls] ^= 1
        bits[generator] = tuple(row)
        return SignConvention(bits)

    def to_json(self) -> str:
        doc = {
            "format": CONVENTION_FORMAT,
            "class_order": list(CLASS_NAMES),
            "base_sign": self.bitstrings(),
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "SignConvention":
        doc = json.loads(text)
        if doc.get("format") != CONVENTION_FORMAT:
            raise ValueError(f"not a sign convention document: format={doc.get('format')!r}")
        if list(doc.get("class_order", [])) != list(CLASS_NAMES):
            raise ValueError("class_order must be 1, i, j, k, L, Li, Lj, Lk")
        return cls({g: tuple(int(ch) for ch in bits) for g, bits in doc["base_sign"].items()})

    @classmethod
    def load(cls, path: Union[str, Path]) -> "SignConvention":
        return cls.from_json(Path(path).read_text())


@lru_cache(maxsize=1)
def default_convention() -> SignConvention:
    text = resources.files("octobelt").joinpath("data/default_convention.json").read_text()
    return SignConvention.from_json(text)


def _generator_name(g) -> str:
    if isinstance(g, SignedBasis):
        if g.sign != 1:
            raise ValueError(f"generators are positive basis elements, got {g.name}")
        return BASIS_NAMES[g.index]
    if g in RULES or g == "1":
        return g
    raise ValueError(f"unknown generator {g!r}; expected one of 1, {', '.join(GENERATOR_NAMES)}")


def apply_generator(
    s: ApparatusState,
    g,
    convention: Optional[SignConvention] = None,
    reversals: Optional[Mapping[str, Reversal]] = None,
) -> ApparatusState:
    name = _generator_name(g)
    if name == "1":
        return s
    convention = convention or default_convention()
    reversals = reversals or DEFAULT_REVERSALS
    flag, arrow_dir, arrow_face = RULES[name].base_effect(s.flag, s.arrow_dir, s.arrow_face)
    delta = convention.base_sign[name][s.orientation_class] ^ bool(
        reversals[name](state_predicates(s))
    )
    return normalize(s.twist_parity + delta, flag, arrow_dir, arrow_face)


@dataclass(frozen=True)
class WordRun:
    final: SignedBasis
    trace: Tuple[ApparatusState, ...] = ()


def run_word(
    word: Sequence,
    trace: bool = False,
    convention: Optional[SignConvention] = None,
    reversals: Optional[Mapping[str, Reversal]] = None,
) -> WordRun:
    s = IDENTITY_STATE
    states = [s]
    for g in word:
        s = apply_generator(s, g, convention, reversals)
        if trace:
            states.append(s)
    return WordRun(decode(s), tuple(states) if trace else ())


def trace_lines(word: Sequence[str], states: Sequence[ApparatusState]) -> List[str]:
    """Render a trace, one ``step <n>: <op> -> ...`` line per state."""
    lines = []
    for n, s in enumerate(states):
        op = "start" if n == 0 else _generator_name(word[n - 1])
        lines.append(f"step {n}: {op} -> {s.describe()} elem={decode(s).name}")
    return lines


@dataclass
class ModelReport:
    passed: bool
    pairs_checked: int = 0
    pairs_passed: int = 0
    words_checked: int = 0
    words_by_length: Dict[int, int] = field(default_factory=dict)
    counterexample: Optional[str] = None


def _generator_element(name: str) -> SignedBasis:
    return SignedBasis(1, INDEX_BY_NAME[name])


def check_pairs(
    convention: Optional[SignConvention] = None,
    reversals: Optional[Mapping[str, Reversal]] = None,
    generators: Iterable[str] = GENERATOR_NAMES,
) -> List[Tuple[SignedBasis, str, SignedBasis, SignedBasis]]:
    """Every (x, g) where the apparatus and the loop disagree: ``(x, g, apparatus, loop)``."""
    bad = []
    for g in generators:
        ge = _generator_element(g)
        for x in ELEMENTS:
            got = decode(apply_generator(encode(x), g, convention, reversals))
            want = loop_mul(x, ge)
            if got != want:
                bad.append((x, g, got, want))
    return bad


def check_model(
    convention: Optional[SignConvention] = None,
    reversals: Optional[Mapping[str, Reversal]] = None,
    max_word_len: int = 6,
) -> ModelReport:
    """Compare the apparatus with loop multiplication, pair by pair and then word by word.

    Words of length 1..``max_word_len`` over the 7 generators are walked depth
    first, so each prefix is run once; the state after a prefix is exactly
    what :func:`run_word` would reach on it.
    """
    convention = convention or default_convention()
    reversals = reversals or DEFAULT_REVERSALS
    report = ModelReport(passed=False)

    report.pairs_checked = len(ELEMENTS) * len(GENERATOR_NAMES)
    bad = check_pairs(convention, reversals)
    report.pairs_passed = report.pairs_checked - len(bad)
    if bad:
        x, g, got, want = bad[0]
        report.counterexample = (
            f"state {encode(x).describe()} (elem={x.name}), generator {g}: "
            f"apparatus gives {got.name}, loop gives {want.name}"
        )
        return report

    gens = [(g, _generator_element(g)) for g in GENERATOR_NAMES]
    stack: List[Tuple[ApparatusState, SignedBasis, Tuple[str, ...]]] = [
        (IDENTITY_STATE, SignedBasis(1, 0), ())
    ]
    while stack:
        state, value, word = stack.pop()
        if len(word) == max_word_len:
            continue
        for g, ge in gens:
            nstate = apply_generator(state, g, convention, reversals)
            nvalue = loop_mul(value, ge)
            nword = word + (g,)
            report.words_checked += 1
            report.words_by_length[len(nword)] = report.words_by_length.get(len(nword), 0) + 1
            if decode(nstate) != nvalue:
                report.counterexample = (
                    f"word {' '.join(nword)}: apparatus gives {decode(nstate).name}, "
                    f"loop gives {nvalue.name}"
                )
                return report
            stack.append((nstate, nvalue, nword))
    report.passed = True
    return report


def solve_signs(reversals: Optional[Mapping[str, Reversal]] = None) -> List[SignConvention]:
    """All base-sign conventions under which the 112 state/generator checks pass.

    For each generator every one of the 2**8 candidate maps is tried against
    all 16 states. A move's checks only involve its own map, so the consistent
    conventions are the product of the per-generator survivors. Returned in
    canonical order (see :meth:`SignConvention.key`); the first is the default.
    """
    reversals = reversals or DEFAULT_REVERSALS
    survivors: Dict[str, List[Tuple[int, ...]]] = {}
    for g in GENERATOR_NAMES:
        ge = _generator_element(g)
        ok = []
        for bits in product((0, 1), repeat=8):
            trial = SignConvention({h: bits for h in GENERATOR_NAMES})
            if all(
                decode(apply_generator(encode(x), g, trial, reversals)) == loop_mul(x, ge)
                for x in ELEMENTS
            ):
                ok.append(bits)
        survivors[g] = ok
    found = [
        SignConvention(dict(zip(GENERATOR_NAMES, combo)))
        for combo in product(*(survivors[g] for g in GENERATOR_NAMES))
    ]
    return sorted(found, key=SignConvention.key)
