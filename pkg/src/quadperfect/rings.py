"""Exact arithmetic in the nine imaginary quadratic rings with unique
factorization.

For d in {-1, -2} (d = 2, 3 mod 4) the ring is Z[sqrt(d)] and elements are
stored as a + b*sqrt(d).  For the seven d = 1 mod 4 the ring is
Z[(1 + sqrt(d))/2] and elements are stored as a + b*w with w = (1 + sqrt(d))/2,
so every coordinate pair is a pair of plain integers in both cases.  All
arithmetic is exact; nothing here touches floating point.
"""

from __future__ import annotations

import enum
import re
from typing import Iterator

from .errors import MixedRings, ZeroElement

# The nine imaginary quadratic fields whose integers factor uniquely.
ADMISSIBLE_D = (-163, -67, -43, -19, -11, -7, -3, -2, -1)


class BasisKind(enum.Enum):
    PLAIN = "plain"          # {1, sqrt(d)}
    HALF_INTEGER = "half"    # {1, (1 + sqrt(d))/2}


class Ring:
    """One of the nine rings, identified by its squarefree d."""

    __slots__ = ("d", "basis_kind", "_units")

    _cache: dict[int, "Ring"] = {}

    def __new__(cls, d: int) -> "Ring":
        if d in cls._cache:
            return cls._cache[d]
        if d not in ADMISSIBLE_D:
            raise ValueError(f"d must be one of {ADMISSIBLE_D}, got {d!r}")
        self = object.__new__(cls)
        self.d = d
        self.basis_kind = BasisKind.HALF_INTEGER if d % 4 == 1 else BasisKind.PLAIN
        self._units = None
        cls._cache[d] = self
        return self

    @property
    def half_integer(self) -> bool:
        return self.basis_kind is BasisKind.HALF_INTEGER

    @property
    def omega_square(self) -> int:
        """c with w^2 = w + c in the half-integer basis."""
        return (self.d - 1) // 4

    @property
    def unit_count(self) -> int:
        if self.d == -1:
            return 4
        if self.d == -3:
            return 6
        return 2

    def units(self) -> tuple["QuadInt", ...]:
        if self._units is None:
            one = self.element(1)
            if self.d == -1:
                w = self.element(0, 1)
                us = (one, w, -one, -w)
            elif self.d == -3:
                w = self.element(0, 1)
                us = (one, w, w - 1, -one, -w, one - w)
            else:
                us = (one, -one)
            self._units = us
        return self._units

    def element(self, a: int, b: int = 0) -> "QuadInt":
        return QuadInt(self, a, b)

    def zero(self) -> "QuadInt":
        return QuadInt(self, 0, 0)

    def one(self) -> "QuadInt":
        return QuadInt(self, 1, 0)

    def parse(self, text: str) -> "QuadInt":
        return parse_element(self, text)

    def __reduce__(self):
        return (Ring, (self.d,))

    def __repr__(self) -> str:
        return f"Ring({self.d})"


def ring(d: int) -> Ring:
    return Ring(d)


# Strict element grammar: <int> [("+"|"-") <uint> "*w"], no whitespace.
_ELEM_RE = re.compile(r"^(-?\d+)(?:([+-])(\d+)\*(w|i))?$")


def parse_element(rg: Ring, text: str) -> "QuadInt":
    m = _ELEM_RE.match(text)
    if m is None:
        raise ValueError(f"malformed element {text!r}; expected e.g. 3, -2+1*w, 3-9*w")
    a = int(m.group(1))
    if m.group(2) is None:
        return rg.element(a)
    if m.group(4) == "i" and rg.d != -1:
        raise ValueError("the 'i' spelling is only valid for d=-1")
    b = int(m.group(3))
    if m.group(2) == "-":
        b = -b
    return rg.element(a, b)


def element_from_json(obj: dict) -> "QuadInt":
    try:
        d, a, b = int(obj["d"]), int(obj["a"]), int(obj["b"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"element object must have integer d, a, b: {obj!r}") from exc
    return Ring(d).element(a, b)


class QuadInt:
    """An element a + b*w of one of the nine rings, immutable."""

    __slots__ = ("ring", "a", "b")

    def __init__(self, rg: Ring, a: int, b: int) -> None:
        object.__setattr__(self, "ring", rg)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    def __setattr__(self, name, value):
        raise AttributeError("QuadInt is immutable")

    # -- basic predicates ---------------------------------------------------

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_unit(self) -> bool:
        return self.norm() == 1

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "QuadInt | None":
        if isinstance(other, QuadInt):
            if other.ring is not self.ring:
                raise MixedRings(
                    f"cannot mix elements of d={self.ring.d} and d={other.ring.d}"
                )
            return other
        if isinstance(other, int):
            return QuadInt(self.ring, other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.ring, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadInt(self.ring, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.ring, -self.a, -self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        if self.ring.half_integer:
            c = self.ring.omega_square
            return QuadInt(
                self.ring, a1 * a2 + c * b1 * b2, a1 * b2 + a2 * b1 + b1 * b2
            )
        return QuadInt(
            self.ring, a1 * a2 + self.ring.d * b1 * b2, a1 * b2 + a2 * b1
        )

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "QuadInt":
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = self.ring.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def conjugate(self) -> "QuadInt":
        if self.ring.half_integer:
            return QuadInt(self.ring, self.a + self.b, -self.b)
        return QuadInt(self.ring, self.a, -self.b)

    def norm(self) -> int:
        a, b, d = self.a, self.b, self.ring.d
        if self.ring.half_integer:
            return a * a + a * b + b * b * ((1 - d) // 4)
        return a * a - d * b * b

    def exact_divide(self, other) -> "QuadInt | None":
        """self / other when other divides self exactly, else None."""
        o = self._coerce(other)
        if o is None:
            raise TypeError(f"cannot divide QuadInt by {type(other).__name__}")
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by the zero element")
        num = self * o.conjugate()
        qa, ra = divmod(num.a, n)
        if ra:
            return None
        qb, rb = divmod(num.b, n)
        if rb:
            return None
        return QuadInt(self.ring, qa, qb)

    def divides(self, other: "QuadInt") -> bool:
        o = self._coerce(other)
        return o.exact_divide(self) is not None

    def is_associated(self, other) -> bool:
        o = self._coerce(other)
        if self.is_zero() or o.is_zero():
            return self.is_zero() and o.is_zero()
        q = self.exact_divide(o)
        return q is not None and q.is_unit()

    # -- canonical sector ---------------------------------------------------

    def in_fundamental_sector(self) -> bool:
        """Exactly one associate of every nonzero element lands here.

        The sector is an angular slice of the plane chosen so unit
        multiplication tiles it: [0, pi/2) for d=-1, [0, pi/3) for d=-3,
        [0, pi) otherwise.  Both membership tests reduce to sign checks on
        the stored coordinates.
        """
        if self.is_zero():
            raise ZeroElement("the zero element belongs to no sector")
        if self.ring.d in (-1, -3):
            return self.a > 0 and self.b >= 0
        # Im(z) has the sign of b in either basis; on the real axis b = 0.
        return self.b > 0 or (self.b == 0 and self.a > 0)

    def canonical_associate(self) -> "QuadInt":
        if self.is_zero():
            raise ZeroElement("the zero element has no canonical associate")
        for u in self.ring.units():
            cand = u * self
            if cand.in_fundamental_sector():
                return cand
        raise AssertionError(f"no associate of {self!r} lies in the sector")

    def sort_key(self) -> tuple[int, int, int]:
        return (self.norm(), self.a, self.b)

    # -- conversions --------------------------------------------------------

    def to_json(self) -> dict:
        return {"d": self.ring.d, "a": self.a, "b": self.b}

    def pretty(self) -> str:
        """Mathematical rendering; uses i for d=-1."""
        a, b = self.a, self.b
        sym = "i" if self.ring.d == -1 else "w"
        if b == 0:
            return str(a)
        bs = "" if abs(b) == 1 else str(abs(b))
        head = "" if a == 0 else f"{a}"
        sign = "-" if b < 0 else ("+" if head else "")
        return f"{head}{sign}{bs}{sym}"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        sign = "+" if self.b > 0 else "-"
        return f"{self.a}{sign}{abs(self.b)}*w"

    def __repr__(self) -> str:
        return f"QuadInt(d={self.ring.d}, a={self.a}, b={self.b})"

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadInt):
            return (
                self.ring is other.ring and self.a == other.a and self.b == other.b
            )
        if isinstance(other, int):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.ring.d, self.a, self.b))


def iter_units(rg: Ring) -> Iterator[QuadInt]:
    return iter(rg.units())
