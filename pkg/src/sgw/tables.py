"""Published reference values reproduced by the test suite and the CLI.

Every entry keeps the value exactly as printed in the reference tables.
``status`` classifies how the printed value fares against recomputation:

* ``golden`` - recomputation confirms the printed value.
* ``suspect`` - the printed value fails an a-priori consistency check
  (kappa-exponent off the grading formula, or denominator digits
  inconsistent with neighbouring entries); reported against the
  recomputed value instead of asserted.
* ``discrepant`` - the printed value passes the a-priori checks but exact
  recomputation (weight-independent across seeds, permutation-invariant,
  grading-consistent) yields a different number; both are kept.

Entries with a non-golden status carry the recomputed invariant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .point import Invariant

GOLDEN = "golden"
SUSPECT = "suspect"
DISCREPANT = "discrepant"


@dataclass(frozen=True)
class PointEntry:
    k: int
    coeff: Fraction
    kappa_exp: int
    status: str = GOLDEN
    note: str = ""
    recomputed: Invariant | None = None

    @property
    def printed(self) -> Invariant:
        return Invariant.of(self.coeff, self.kappa_exp)

    @property
    def expected(self) -> Invariant:
        return self.recomputed if self.recomputed is not None else self.printed


@dataclass(frozen=True)
class TautEntry:
    k: int
    exps: tuple[int, ...]
    value: Fraction


@dataclass(frozen=True)
class InvariantEntry:
    n: int
    k: int
    classes: tuple[int, ...]
    coeff: Fraction
    kappa_exp: int
    status: str = GOLDEN
    note: str = ""
    recomputed: Invariant | None = None

    @property
    def printed(self) -> Invariant:
        return Invariant.of(self.coeff, self.kappa_exp)

    @property
    def expected(self) -> Invariant:
        """The value recomputation is pinned to."""
        return self.recomputed if self.recomputed is not None else self.printed

    @property
    def label(self) -> str:
        body = ",".join(str(a) for a in self.classes)
        return f"{self.k}-point P^{self.n} ({body})"


def _F(num: int, den: int = 1) -> Fraction:
    return Fraction(num, den)


_EXPONENT_NOTE = "printed kappa-exponent violates the grading formula -r - d + deg"
_DENOMINATOR_NOTE = "printed denominator digits inconsistent with neighbouring entries"
_VALUE_NOTE = "printed value inconsistent with exact recomputation"

POINT_ENTRIES: tuple[PointEntry, ...] = (
    PointEntry(3, _F(1), -1),
    PointEntry(4, _F(-1, 2), -3),
    PointEntry(5, _F(3, 4), -5),
    PointEntry(
        6,
        _F(-3, 2),
        -7,
        DISCREPANT,
        "printed sum omits the composition (0,2,1), whose integral is 3",
        Invariant.of(_F(-15, 8), -7),
    ),
)

TAUT_ENTRIES: tuple[TautEntry, ...] = (
    TautEntry(4, (1,), _F(1)),
    TautEntry(5, (1, 1), _F(2)),
    TautEntry(5, (0, 2), _F(1)),
    TautEntry(6, (1, 1, 1), _F(6)),
    TautEntry(6, (1, 0, 2), _F(2)),
    TautEntry(6, (0, 1, 2), _F(3)),
    TautEntry(6, (0, 0, 3), _F(1)),
)

ONE_POINT_ENTRIES: tuple[InvariantEntry, ...] = (
    InvariantEntry(1, 1, (1,), _F(1), -1),
    InvariantEntry(1, 1, (0,), _F(-1), -2),
    InvariantEntry(2, 1, (2,), _F(2), -3),
    InvariantEntry(2, 1, (1,), _F(3, 4), -4),
    InvariantEntry(2, 1, (0,), _F(-3, 2), -5),
    InvariantEntry(3, 1, (3,), _F(7, 2), -5),
    InvariantEntry(3, 1, (2,), _F(5), -6),
    InvariantEntry(3, 1, (1,), _F(15, 8), -7),
    InvariantEntry(3, 1, (0,), _F(-35, 8), -8),
    InvariantEntry(4, 1, (4,), _F(25, 4), -7),
    InvariantEntry(4, 1, (3,), _F(245, 16), -8),
    InvariantEntry(4, 1, (2,), _F(35, 2), -9),
    InvariantEntry(4, 1, (1,), _F(105, 16), -10),
    InvariantEntry(4, 1, (0,), _F(-525, 32), -11),
    InvariantEntry(5, 1, (5,), _F(91, 8), -9),
    InvariantEntry(5, 1, (4,), _F(315, 8), -10),
    InvariantEntry(5, 1, (3,), _F(2205, 32), -11),
    InvariantEntry(5, 1, (2,), _F(1155, 16), -12),
    InvariantEntry(
        5, 1, (1,), _F(3465, 128), -12, SUSPECT, _EXPONENT_NOTE, Invariant.of(_F(3465, 128), -13)
    ),
    InvariantEntry(
        5, 1, (0,), _F(-9009, 128), -12, SUSPECT, _EXPONENT_NOTE, Invariant.of(_F(-9009, 128), -14)
    ),
)

TWO_POINT_ENTRIES: tuple[InvariantEntry, ...] = (
    InvariantEntry(1, 2, (1, 1), _F(1), -2),
    InvariantEntry(1, 2, (1, 0), _F(-1, 2), -3),
    InvariantEntry(1, 2, (0, 0), _F(0), 0),
    InvariantEntry(2, 2, (2, 2), _F(1), -3),
    InvariantEntry(2, 2, (2, 1), _F(3, 2), -4),
    InvariantEntry(2, 2, (1, 1), _F(3, 4), -5),
    InvariantEntry(2, 2, (2, 0), _F(-3, 4), -5),
    InvariantEntry(2, 2, (1, 0), _F(-3, 4), -6),
    InvariantEntry(2, 2, (0, 0), _F(0), 0),
    InvariantEntry(3, 2, (3, 3), _F(1), -4),
    InvariantEntry(3, 2, (3, 2), _F(2), -5),
    InvariantEntry(3, 2, (3, 1), _F(5, 2), -6),
    InvariantEntry(3, 2, (2, 2), _F(5), -6),
    InvariantEntry(3, 2, (3, 0), _F(-5, 4), -7),
    InvariantEntry(
        3, 2, (2, 1), _F(-15, 4), -7, DISCREPANT, _VALUE_NOTE, Invariant.of(_F(15, 4), -7)
    ),
    InvariantEntry(3, 2, (2, 0), _F(-5, 2), -8),
    InvariantEntry(3, 2, (1, 1), _F(15, 8), -8),
    InvariantEntry(3, 2, (1, 0), _F(-35, 16), -9),
    InvariantEntry(3, 2, (0, 0), _F(0), 0),
    InvariantEntry(4, 2, (4, 4), _F(1), -5),
    InvariantEntry(4, 2, (4, 3), _F(5, 2), -6),
    InvariantEntry(4, 2, (4, 2), _F(15, 4), -7),
    InvariantEntry(4, 2, (3, 3), _F(15, 2), -7),
    InvariantEntry(4, 2, (4, 1), _F(35, 8), -8),
    InvariantEntry(4, 2, (3, 2), _F(105, 8), -8),
    InvariantEntry(4, 2, (4, 0), _F(-35, 16), -9),
    InvariantEntry(4, 2, (3, 1), _F(175, 16), -9),
    InvariantEntry(4, 2, (2, 2), _F(315, 16), -9),
    InvariantEntry(4, 2, (3, 0), _F(-105, 16), -10),
    InvariantEntry(4, 2, (2, 1), _F(105, 8), -10),
    InvariantEntry(4, 2, (2, 0), _F(-315, 32), -11),
    InvariantEntry(
        4, 2, (1, 1), _F(-525, 64), -11, DISCREPANT, _VALUE_NOTE, Invariant.of(_F(105, 16), -11)
    ),
    InvariantEntry(
        4, 2, (1, 0), _F(-35, 16), -12, DISCREPANT, _VALUE_NOTE, Invariant.of(_F(-525, 64), -12)
    ),
    InvariantEntry(4, 2, (0, 0), _F(0), 0),
    InvariantEntry(5, 2, (5, 5), _F(1), -6),
    InvariantEntry(5, 2, (5, 4), _F(3), -7),
    InvariantEntry(5, 2, (5, 3), _F(21, 4), -8),
    InvariantEntry(5, 2, (4, 4), _F(21, 2), -8),
    InvariantEntry(5, 2, (5, 2), _F(7), -9),
    InvariantEntry(5, 2, (4, 3), _F(21), -9),
    InvariantEntry(5, 2, (5, 1), _F(63, 8), -10),
    InvariantEntry(5, 2, (4, 2), _F(63, 2), -10),
    InvariantEntry(5, 2, (3, 3), _F(189, 4), -10),
    InvariantEntry(5, 2, (5, 0), _F(-63, 16), -11),
    InvariantEntry(5, 2, (4, 1), _F(441, 16), -11),
    InvariantEntry(5, 2, (3, 2), _F(1071, 16), -11),
    InvariantEntry(5, 2, (4, 0), _F(-63, 4), -12),
    InvariantEntry(
        5, 2, (3, 1), _F(1575, 316), -12, SUSPECT, _DENOMINATOR_NOTE, Invariant.of(_F(1575, 32), -12)
    ),
    InvariantEntry(5, 2, (2, 2), _F(1365, 16), -12),
    InvariantEntry(5, 2, (3, 0), _F(-2079, 64), -13),
    InvariantEntry(5, 2, (2, 1), _F(3465, 64), -13),
    InvariantEntry(5, 2, (2, 0), _F(-693, 16), -14),
    InvariantEntry(
        5, 2, (1, 1), _F(-3465, 128), -14, DISCREPANT, _VALUE_NOTE, Invariant.of(_F(3465, 128), -14)
    ),
    InvariantEntry(
        5, 2, (1, 0), _F(-9009, 2566), -15, SUSPECT, _DENOMINATOR_NOTE, Invariant.of(_F(-9009, 256), -15)
    ),
    InvariantEntry(5, 2, (0, 0), _F(0), 0),
)

THREE_POINT_ENTRIES: tuple[InvariantEntry, ...] = (
    InvariantEntry(1, 3, (1, 1, 1), _F(1), -3),
    InvariantEntry(1, 3, (1, 1, 0), _F(0), 0),
    InvariantEntry(1, 3, (1, 0, 0), _F(-1, 4), -5),
    InvariantEntry(1, 3, (0, 0, 0), _F(0), 0),
    InvariantEntry(2, 3, (2, 2, 1), _F(1), -4),
    InvariantEntry(2, 3, (2, 2, 0), _F(0), 0),
    InvariantEntry(2, 3, (2, 1, 1), _F(3, 2), -5),
    InvariantEntry(2, 3, (2, 1, 0), _F(0), 0),
    InvariantEntry(2, 3, (1, 1, 1), _F(3, 2), -6),
    InvariantEntry(2, 3, (2, 0, 0), _F(-3, 8), -7),
    InvariantEntry(2, 3, (1, 1, 0), _F(-3, 8), -7),
    InvariantEntry(
        2, 3, (1, 0, 0), _F(-3, 8), -7, SUSPECT, _EXPONENT_NOTE, Invariant.of(_F(-3, 8), -8)
    ),
    InvariantEntry(2, 3, (0, 0, 0), _F(0), 0),
    InvariantEntry(3, 3, (3, 3, 1), _F(1), -5),
    InvariantEntry(3, 3, (3, 2, 2), _F(1), -5),
    InvariantEntry(3, 3, (3, 3, 0), _F(0), 0),
    InvariantEntry(3, 3, (3, 2, 1), _F(2), -6),
    InvariantEntry(3, 3, (3, 2, 0), _F(0), 0),
    InvariantEntry(3, 3, (3, 1, 1), _F(5, 2), -7),
    InvariantEntry(3, 3, (2, 2, 1), _F(5), -7),
    InvariantEntry(3, 3, (3, 1, 0), _F(0), 0),
    InvariantEntry(3, 3, (2, 2, 0), _F(0), 0),
    InvariantEntry(3, 3, (2, 1, 1), _F(5), -8),
    InvariantEntry(3, 3, (2, 1, 0), _F(-5, 8), -9),
    InvariantEntry(3, 3, (1, 1, 1), _F(15, 4), -9),
    InvariantEntry(3, 3, (2, 0, 0), _F(-5, 4), -10),
    InvariantEntry(3, 3, (1, 1, 0), _F(-5, 4), -10),
    InvariantEntry(3, 3, (1, 0, 0), _F(-35, 32), -11),
    InvariantEntry(3, 3, (0, 0, 0), _F(0), 0),
)

ALL_INVARIANT_ENTRIES: tuple[InvariantEntry, ...] = (
    ONE_POINT_ENTRIES + TWO_POINT_ENTRIES + THREE_POINT_ENTRIES
)


def entries_for(k: int, status: str | None = None) -> list[InvariantEntry]:
    found = [e for e in ALL_INVARIANT_ENTRIES if e.k == k]
    if status is not None:
        found = [e for e in found if e.status == status]
    return found
