"""Generic Cayley-Dickson doubling, used as an independent oracle.

Elements of the dimension ``2**n`` algebra are flat coefficient tuples split
into halves ``(A, B)``. Doublings that produce dimension 8 and above read the
pair as ``A + L B`` and use the same term order as
:func:`octobelt.algebra.oct_mul`:

    (A, B)(C, D) = (AC - D conj(B), CB + conj(A) D)

The steps up to dimension 4 read the pair as ``A + B j`` instead,

    (A, B)(C, D) = (AC - B conj(D), AD + B conj(C))

which is what makes ``e1 e2 = e3`` (ij = k). The left-multiplier rule run on
complex halves gives the opposite quaternions, ``e1 e2 = -e3``.
In both cases ``conj(A, B) = (conj(A), -B)``.

Nothing here imports the quaternion or octonion classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import List, Optional, Sequence, Tuple

SUPPORTED_DIMS = (1, 2, 4, 8, 16, 32)
TABLE_DIMS = (1, 2, 4, 8, 16)

# (sign, index): basis_row * basis_col = sign * basis_index
SignedIndex = Tuple[int, int]
BasisTable = Tuple[Tuple[SignedIndex, ...], ...]


class DimensionError(ValueError):
    pass


@dataclass(frozen=True)
class CDElement:
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        if len(coeffs) not in SUPPORTED_DIMS:
            raise DimensionError(f"dimension {len(coeffs)} not in {SUPPORTED_DIMS}")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def dim(self) -> int:
        return len(self.coeffs)

    @classmethod
    def basis(cls, dim: int, index: int) -> "CDElement":
        return cls(tuple(int(t == index) for t in range(dim)))

    @classmethod
    def zero(cls, dim: int) -> "CDElement":
        return cls((0,) * dim)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __mul__(self, other: "CDElement") -> "CDElement":
        return cd_mul(self, other)

    def __add__(self, other: "CDElement") -> "CDElement":
        _check_dims(self, other)
        return CDElement(tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "CDElement") -> "CDElement":
        _check_dims(self, other)
        return CDElement(tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CDElement":
        return CDElement(tuple(-x for x in self.coeffs))

    def conj(self) -> "CDElement":
        return CDElement(_conj(self.coeffs))


def _check_dims(x: CDElement, y: CDElement) -> None:
    if x.dim != y.dim:
        raise DimensionError(f"dimension mismatch: {x.dim} vs {y.dim}")


def _add(x, y):
    return tuple(a + b for a, b in zip(x, y))


def _sub(x, y):
    return tuple(a - b for a, b in zip(x, y))


def _conj(x):
    if len(x) == 1:
        return x
    h = len(x) // 2
    return _conj(x[:h]) + tuple(-c for c in x[h:])


def _mul(x, y):
    if len(x) == 1:
        return (x[0] * y[0],)
    h = len(x) // 2
    a, b = x[:h], x[h:]
    c, d = y[:h], y[h:]
    if len(x) <= 4:
        return _sub(_mul(a, c), _mul(b, _conj(d))) + _add(_mul(a, d), _mul(b, _conj(c)))
    return _sub(_mul(a, c), _mul(d, _conj(b))) + _add(_mul(c, b), _mul(_conj(a), d))


def cd_mul(x: CDElement, y: CDElement) -> CDElement:
    _check_dims(x, y)
    return CDElement(_mul(x.coeffs, y.coeffs))


def cd_conj(x: CDElement) -> CDElement:
    return x.conj()


def cd_associator(x: CDElement, y: CDElement, z: CDElement) -> CDElement:
    return cd_mul(cd_mul(x, y), z) - cd_mul(x, cd_mul(y, z))


@lru_cache(maxsize=None)
def build_table(dim: int) -> BasisTable:
    """Signed basis multiplication table of the ``dim``-dimensional algebra.

    Entry ``[r][c]`` is ``(sign, index)`` with ``e_r e_c = sign * e_index``.
    """
    if dim not in TABLE_DIMS:
        raise DimensionError(f"table dimension must be one of {TABLE_DIMS}, got {dim}")
    rows = []
    for r in range(dim):
        row = []
        for c in range(dim):
            prod_ = _mul(CDElement.basis(dim, r).coeffs, CDElement.basis(dim, c).coeffs)
            nz = [t for t, v in enumerate(prod_) if v != 0]
            if len(nz) != 1 or abs(prod_[nz[0]]) != 1:
                raise AssertionError(f"e{r} * e{c} is not a signed basis element: {prod_}")
            row.append((1 if prod_[nz[0]] > 0 else -1, nz[0]))
        rows.append(tuple(row))
    return tuple(rows)


def reference_table(dim: int) -> BasisTable:
    """The same table computed from the quaternion/octonion classes."""
    from .algebra import Octonion, Quaternion, oct_mul, quat_mul

    if dim == 4:
        elems = [Quaternion.from_coeffs([int(t == n) for t in range(4)]) for n in range(4)]
        mul = quat_mul
    elif dim == 8:
        elems = [Octonion.basis(n) for n in range(8)]
        mul = oct_mul
    else:
        raise DimensionError(f"reference tables exist for dims 4 and 8, got {dim}")
    rows = []
    for x in elems:
        row = []
        for y in elems:
            coeffs = mul(x, y).coeffs
            nz = [t for t, v in enumerate(coeffs) if v != 0]
            if len(nz) != 1 or abs(coeffs[nz[0]]) != 1:
                raise AssertionError(f"basis product {coeffs} is not a signed basis element")
            row.append((1 if coeffs[nz[0]] > 0 else -1, nz[0]))
        rows.append(tuple(row))
    return tuple(rows)


def diff_tables(left: Sequence[Sequence[SignedIndex]], right: Sequence[Sequence[SignedIndex]]):
    """Cells where two tables disagree, as ``(row, col, left_entry, right_entry)``."""
    if len(left) != len(right):
        raise DimensionError(f"table sizes differ: {len(left)} vs {len(right)}")
    return [
        (r, c, left[r][c], right[r][c])
        for r in range(len(left))
        for c in range(len(left))
        if left[r][c] != right[r][c]
    ]


def compare_tables(dim: int) -> List[Tuple[int, int, SignedIndex, SignedIndex]]:
    """Mismatches between the doubling table and the algebra-core table; empty on success."""
    if dim not in (4, 8):
        raise DimensionError(f"compare_tables supports dims 4 and 8, got {dim}")
    return diff_tables(build_table(dim), reference_table(dim))


def _sparse_elements(dim: int, bound: int):
    """Nonzero integer vectors with at most two nonzero entries in [-bound, bound]."""
    values = [v for v in range(-bound, bound + 1) if v != 0]
    for t in range(dim):
        for v in values:
            yield ((t, v),)
    for s, t in combinations(range(dim), 2):
        for v, w in product(values, repeat=2):
            yield ((s, v), (t, w))


def find_zero_divisor(dim: int, coefficient_bound: int = 1) -> Optional[Tuple[CDElement, CDElement]]:
    """Search two-term integer combinations of basis elements for ``x y = 0``.

    The scan multiplies through the signed basis table; a hit is replayed
    through :func:`cd_mul` before it is returned.
    """
    if dim not in (8, 16):
        raise DimensionError(f"zero-divisor search supports dims 8 and 16, got {dim}")
    if coefficient_bound < 1:
        raise ValueError("coefficient_bound must be >= 1")
    table = build_table(dim)
    elems = list(_sparse_elements(dim, coefficient_bound))
    for x in elems:
        for y in elems:
            acc = [0] * dim
            for s, v in x:
                for t, w in y:
                    sign, idx = table[s][t]
                    acc[idx] += sign * v * w
            if any(acc):
                continue
            xe, ye = _dense(dim, x), _dense(dim, y)
            if not cd_mul(xe, ye).is_zero():
                raise AssertionError("basis table and cd_mul disagree on a zero product")
            return xe, ye
    return None


def _dense(dim, sparse) -> CDElement:
    coeffs = [0] * dim
    for t, v in sparse:
        coeffs[t] = v
    return CDElement(tuple(coeffs))
