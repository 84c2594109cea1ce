"""Exact scalars over the rationals and over prime fields F_p (p odd).

Two scalar types share one arithmetic protocol (``+ - * /``, unary minus,
``inv``, ``is_zero``, ``==``):

* :class:`FieldElement` -- a single exact value. Rationals are held as a
  plain ``int`` when integral and otherwise as a :class:`fractions.Fraction`
  (lowest terms, positive denominator, never 1); prime-field values as the
  reduced residue in ``[0, p)``. Equality is structural.
* :class:`FieldArray` -- a numpy batch of residues of one prime field. Every
  operation acts elementwise, ``==`` and ``is_zero`` return boolean arrays.

Geometry code written against the protocol therefore runs unchanged on a
single value or on millions of them at once. Code that branches on a value
must go through :func:`any_of` / :func:`all_of` instead of plain ``if``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import (
    DenominatorZero,
    DivisionByZero,
    FieldMismatch,
    InvalidFieldSpec,
    ParseError,
)

__all__ = [
    "FieldSpec",
    "FieldElement",
    "FieldArray",
    "QQ",
    "field_parse",
    "field_format",
    "is_prime",
    "any_of",
    "all_of",
    "not_",
    "first_nonzero",
]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_INTEGER_RE = re.compile(r"^[+-]?\d+$")

# FieldArray keeps products of two residues inside int64.
_MAX_ARRAY_PRIME = 2**31


def _array_dtype(p: int):
    """Narrowest signed dtype holding p^2, since every operation reduces
    mod p right after one product or sum of two residues."""
    if p * p < 2**15:
        return np.int16
    if p * p < 2**31:
        return np.int32
    return np.int64


def _canon(q):
    """Integral rationals as int (much faster to multiply), others as Fraction."""
    if type(q) is Fraction and q.denominator == 1:
        return q.numerator
    return q


def is_prime(n: int) -> bool:
    """Deterministic trial division by 2, 3 and 6k +/- 1 up to sqrt(n)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0 or n % 3 == 0:
        return False
    k = 5
    while k * k <= n:
        if n % k == 0 or n % (k + 2) == 0:
            return False
        k += 6
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Which field a scalar lives in: ``rational`` or ``prime`` with modulus ``p``.

    Construction rejects composite moduli and p = 2 (characteristic 2 is
    excluded). Use :meth:`rational` / :meth:`prime` to get shared instances.
    """

    kind: str
    p: int | None = None

    def __post_init__(self):
        if self.kind == "rational":
            if self.p is not None:
                raise InvalidFieldSpec("the rational field takes no modulus")
        elif self.kind == "prime":
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise InvalidFieldSpec(f"prime modulus must be an integer, got {self.p!r}")
            if self.p == 2:
                raise InvalidFieldSpec("characteristic 2 is not supported")
            if not is_prime(self.p):
                raise InvalidFieldSpec(f"{self.p} is not prime")
        else:
            raise InvalidFieldSpec(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rational() -> FieldSpec:
        return QQ

    @staticmethod
    @lru_cache(maxsize=None)
    def prime(p: int) -> FieldSpec:
        return FieldSpec("prime", p)

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        """Parse ``rational`` (or ``Q``) and ``prime:<p>``."""
        t = text.strip()
        if t.lower() in ("rational", "q"):
            return QQ
        if t.lower().startswith("prime:"):
            digits = t[len("prime:"):]
            if not digits.isdigit():
                raise InvalidFieldSpec(f"bad prime modulus in {text!r}")
            return cls.prime(int(digits))
        raise InvalidFieldSpec(f"unknown field {text!r}; expected 'rational' or 'prime:<p>'")

    @property
    def is_prime(self) -> bool:
        return self.kind == "prime"

    def __str__(self) -> str:
        return "rational" if self.kind == "rational" else f"prime:{self.p}"

    def __call__(self, value) -> FieldElement:
        """Coerce an int, Fraction or scalar string into this field."""
        if isinstance(value, str):
            return self.parse_element(value)
        return FieldElement(self, value)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def parse_element(self, text: str) -> FieldElement:
        """Parse the scalar text grammar.

        Rationals: optional sign, digits, optional ``/`` and a positive
        denominator. Prime fields: a decimal integer (optionally signed);
        values outside ``[0, p)`` are reduced mod p rather than rejected.
        """
        t = text.strip()
        if self.kind == "rational":
            m = _RATIONAL_RE.match(t)
            if not m:
                raise ParseError(f"not a rational number: {text!r}")
            num = int(m.group(1))
            den = int(m.group(2)) if m.group(2) is not None else 1
            if den == 0:
                raise DenominatorZero(f"zero denominator in {text!r}")
            return FieldElement._raw(self, _canon(Fraction(num, den)))
        if not _INTEGER_RE.match(t):
            raise ParseError(f"not an integer residue: {text!r}")
        return FieldElement._raw(self, int(t) % self.p)


QQ = FieldSpec("rational")


def field_parse(text: str, spec: FieldSpec) -> FieldElement:
    return spec.parse_element(text)


def field_format(x: FieldElement) -> str:
    return str(x)


class FieldElement:
    """An exact scalar tagged with its field.

    Arithmetic with a plain ``int`` (or ``Fraction``) coerces it into the
    field first; arithmetic between different fields raises FieldMismatch.
    """

    __slots__ = ("spec", "value")

    def __init__(self, spec: FieldSpec, value):
        if spec.kind == "rational":
            value = _canon(Fraction(value))
        elif isinstance(value, Fraction):
            if value.denominator % spec.p == 0:
                raise DivisionByZero(f"{value} has no image in F_{spec.p}")
            value = value.numerator * pow(value.denominator, -1, spec.p) % spec.p
        else:
            value = int(value) % spec.p
        self.spec = spec
        self.value = value

    @classmethod
    def _raw(cls, spec: FieldSpec, value) -> FieldElement:
        obj = object.__new__(cls)
        obj.spec = spec
        obj.value = value
        return obj

    def _other(self, other):
        """Value of ``other`` in this field, or None if it is not a scalar we handle."""
        if isinstance(other, FieldElement):
            if other.spec is not self.spec and other.spec != self.spec:
                raise FieldMismatch(f"cannot combine {self.spec} with {other.spec}")
            return other.value
        if type(other) is int and self.spec.p is None:
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.spec, other).value
        return None

    def _wrap(self, value) -> FieldElement:
        if self.spec.p is not None:
            value %= self.spec.p
        elif type(value) is Fraction and value.denominator == 1:
            value = value.numerator
        return FieldElement._raw(self.spec, value)

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.value + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.value - v)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(v - self.value)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.value * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.value)

    def __pos__(self):
        return self

    def inv(self) -> FieldElement:
        if self.value == 0:
            raise DivisionByZero("inverse of zero")
        if self.spec.p is None:
            return FieldElement._raw(self.spec, _canon(1 / Fraction(self.value)))
        return FieldElement._raw(self.spec, pow(self.value, -1, self.spec.p))

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self * FieldElement._raw(self.spec, v).inv()

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return FieldElement._raw(self.spec, v) * self.inv()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        if self.spec.p is None:
            return FieldElement._raw(self.spec, _canon(self.value**exponent))
        return FieldElement._raw(self.spec, pow(self.value, exponent, self.spec.p))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.spec == other.spec and self.value == other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            try:
                return self.value == FieldElement(self.spec, other).value
            except DivisionByZero:
                return False
        return NotImplemented

    def __ne__(self, other):
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.spec, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        if self.spec.p is None:
            return f"Q({self.value})"
        return f"F{self.spec.p}({self.value})"


class FieldArray:
    """A one-dimensional batch of elements of one prime field.

    Operands may be other FieldArrays of the same length, single
    FieldElements or ints (broadcast). Comparisons return numpy bool arrays.
    """

    __slots__ = ("spec", "values")

    def __init__(self, spec: FieldSpec, values):
        if not spec.is_prime or spec.p >= _MAX_ARRAY_PRIME:
            raise InvalidFieldSpec(f"FieldArray needs a prime field below 2**31, got {spec}")
        self.spec = spec
        reduced = np.mod(np.asarray(values, dtype=np.int64), spec.p)
        self.values = reduced.astype(_array_dtype(spec.p))

    @classmethod
    def _raw(cls, spec, values) -> FieldArray:
        obj = object.__new__(cls)
        obj.spec = spec
        obj.values = values
        return obj

    def _other(self, other):
        if isinstance(other, FieldArray):
            if other.spec != self.spec:
                raise FieldMismatch(f"cannot combine {self.spec} with {other.spec}")
            return other.values
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldMismatch(f"cannot combine {self.spec} with {other.spec}")
            return other.value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.spec, other).value
        return None

    def _wrap(self, values) -> FieldArray:
        return FieldArray._raw(self.spec, np.mod(values, self.spec.p))

    def __add__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.values + v)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.values - v)

    def __rsub__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(v - self.values)

    def __mul__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self._wrap(self.values * v)

    __rmul__ = __mul__

    def __neg__(self):
        return self._wrap(-self.values)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inv() ** (-exponent)
        p = self.spec.p
        result = np.ones_like(self.values)
        base = self.values.copy()
        while exponent:
            if exponent & 1:
                result = result * base % p
            base = base * base % p
            exponent >>= 1
        return FieldArray._raw(self.spec, result)

    def inv(self) -> FieldArray:
        if np.any(self.values == 0):
            raise DivisionByZero("inverse of zero in batch")
        return self ** (self.spec.p - 2)

    def __truediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        if isinstance(v, np.ndarray):
            return self * FieldArray._raw(self.spec, v).inv()
        return self * FieldElement._raw(self.spec, v).inv()

    def __rtruediv__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.inv() * v

    def is_zero(self) -> np.ndarray:
        return self.values == 0

    def __eq__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.values == v

    def __ne__(self, other):
        v = self._other(other)
        if v is None:
            return NotImplemented
        return self.values != v

    __hash__ = None

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, index):
        if isinstance(index, (int, np.integer)):
            return FieldElement._raw(self.spec, int(self.values[index]))
        return FieldArray._raw(self.spec, self.values[index])

    def compress(self, mask) -> FieldArray:
        return FieldArray._raw(self.spec, self.values[mask])

    def __repr__(self) -> str:
        return f"FieldArray({self.spec}, {self.values!r})"


def any_of(mask) -> bool:
    """True if the predicate holds for some element (a plain bool passes through)."""
    if isinstance(mask, np.ndarray):
        return bool(mask.any())
    return bool(mask)


def all_of(mask) -> bool:
    if isinstance(mask, np.ndarray):
        return bool(mask.all())
    return bool(mask)


def not_(mask):
    if isinstance(mask, np.ndarray):
        return ~mask
    return not mask


def first_nonzero(*scalars):
    """The first nonzero scalar in order, taken elementwise for batches.

    Returns zero where every argument is zero.
    """
    if not any(isinstance(s, FieldArray) for s in scalars):
        for s in scalars:
            if not s.is_zero():
                return s
        return scalars[-1]
    spec = next(s.spec for s in scalars if isinstance(s, FieldArray))
    n = next(len(s) for s in scalars if isinstance(s, FieldArray))
    dtype = _array_dtype(spec.p)
    picked = np.zeros(n, dtype=dtype)
    done = np.zeros(n, dtype=bool)
    for s in scalars:
        vals = s.values if isinstance(s, FieldArray) else np.full(n, s.value, dtype=dtype)
        take = ~done & (vals != 0)
        picked[take] = vals[take]
        done |= take
    return FieldArray._raw(spec, picked)
