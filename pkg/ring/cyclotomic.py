"""
Cyclotomic Field Arithmetic - exact elements of Q(zeta_L) stored modulo the L-th cyclotomic polynomial
Houses Gauss sums, character values, square roots of primes and every eigenvalue the toolkit produces
"""
import logging
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

import numpy as np
from sympy import Poly, QQ, Rational, Symbol, cyclotomic_poly, factorint, isprime, primefactors

from config import APPROX_DIGITS, GAUSS_SUM_BUDGET
from errors import ArgumentError

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

_X = Symbol('x')
_INT64_SAFE = 2 ** 62

Scalar = Union[int, Fraction]


@lru_cache(maxsize=512)
def _cyclotomic_terms(level: int) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
    """
    Degree of Phi_L and its nonzero lower-order terms
    Returns: (phi, ((exponent, coefficient), ...)) with Phi_L = x^phi + sum c_e x^e
    """
    coeffs = Poly(cyclotomic_poly(level, _X), _X).all_coeffs()
    phi = len(coeffs) - 1
    lower = []
    for idx, c in enumerate(coeffs[1:], start=1):
        if c != 0:
            lower.append((phi - idx, int(c)))
    return phi, tuple(lower)


def _reduce(level: int, poly: List) -> Tuple[Fraction, ...]:
    """Reduce a coefficient list (any length) modulo x^L - 1 and then modulo Phi_L"""
    folded = [0] * level
    for idx, c in enumerate(poly):
        if c:
            folded[idx % level] += c
    phi, lower = _cyclotomic_terms(level)
    for idx in range(level - 1, phi - 1, -1):
        c = folded[idx]
        if not c:
            continue
        folded[idx] = 0
        shift = idx - phi
        for exp, coeff in lower:
            folded[shift + exp] -= c * coeff
    return tuple(Fraction(c) for c in folded[:phi])


def _common_denominator(coeffs: Sequence[Fraction]) -> int:
    den = 1
    for c in coeffs:
        d = c.denominator
        if d != 1:
            den = den * d // gcd(den, d)
    return den


def _convolve(a: List[int], b: List[int]) -> List[int]:
    bound = max((abs(x) for x in a), default=0) * max((abs(x) for x in b), default=0)
    if bound * min(len(a), len(b)) < _INT64_SAFE:
        return np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)).tolist()
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


class CycNumber:
    """Exact element of Q[x]/(Phi_L(x)), embedded numerically by x -> exp(2 pi i / L)"""

    __slots__ = ('level', 'coeffs')

    def __init__(self, level: int, coeffs: Sequence[Fraction]):
        phi = _cyclotomic_terms(level)[0]
        if len(coeffs) != phi:
            raise ArgumentError(f"level {level} needs {phi} coefficients, got {len(coeffs)}")
        self.level = level
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    # Constructors

    @classmethod
    def from_rational(cls, value: Scalar, level: int = 1) -> 'CycNumber':
        phi = _cyclotomic_terms(level)[0]
        coeffs = [Fraction(0)] * phi
        coeffs[0] = Fraction(value)
        return cls(level, coeffs)

    @classmethod
    def zero(cls, level: int = 1) -> 'CycNumber':
        return cls.from_rational(0, level)

    @classmethod
    def one(cls, level: int = 1) -> 'CycNumber':
        return cls.from_rational(1, level)

    @classmethod
    def from_exponent_counts(cls, level: int, counts: Union[Sequence[int], Dict[int, int]]) -> 'CycNumber':
        """Sum of counts[a] * zeta_L^a"""
        poly = [0] * level
        items = counts.items() if isinstance(counts, dict) else enumerate(counts)
        for a, c in items:
            if c:
                poly[int(a) % level] += int(c)
        return cls(level, _reduce(level, poly))

    # Structure

    def lift(self, level: int) -> 'CycNumber':
        """Embed into Q(zeta_M) for a multiple M of the current level"""
        if level == self.level:
            return self
        if level % self.level:
            raise ArgumentError(f"cannot lift level {self.level} to {level}")
        step = level // self.level
        poly = [0] * level
        for idx, c in enumerate(self.coeffs):
            if c:
                poly[idx * step] = c
        return CycNumber(level, _reduce(level, poly))

    def _align(self, other: 'CycNumber') -> Tuple['CycNumber', 'CycNumber']:
        if self.level == other.level:
            return self, other
        level = self.level * other.level // gcd(self.level, other.level)
        return self.lift(level), other.lift(level)

    def as_rational(self) -> Optional[Fraction]:
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # Arithmetic

    def __add__(self, other) -> 'CycNumber':
        other = _coerce(other)
        a, b = self._align(other)
        return CycNumber(a.level, [x + y for x, y in zip(a.coeffs, b.coeffs)])

    __radd__ = __add__

    def __neg__(self) -> 'CycNumber':
        return CycNumber(self.level, [-c for c in self.coeffs])

    def __sub__(self, other) -> 'CycNumber':
        return self + (-_coerce(other))

    def __rsub__(self, other) -> 'CycNumber':
        return _coerce(other) - self

    def scale(self, value: Scalar) -> 'CycNumber':
        value = Fraction(value)
        return CycNumber(self.level, [c * value for c in self.coeffs])

    def __mul__(self, other) -> 'CycNumber':
        other = _coerce(other)
        if other.level == 1:
            return self.scale(other.coeffs[0])
        if self.level == 1:
            return other.scale(self.coeffs[0])
        a, b = self._align(other)
        da = _common_denominator(a.coeffs)
        db = _common_denominator(b.coeffs)
        na = [int(c * da) for c in a.coeffs]
        nb = [int(c * db) for c in b.coeffs]
        reduced = _reduce(a.level, _convolve(na, nb))
        den = da * db
        return CycNumber(a.level, [c / den for c in reduced])

    __rmul__ = __mul__

    def galois(self, a: int) -> 'CycNumber':
        """Image under zeta_L -> zeta_L^a, a a unit mod L"""
        if gcd(a, self.level) != 1:
            raise ArgumentError(f"{a} is not a unit mod {self.level}")
        poly = [0] * self.level
        for idx, c in enumerate(self.coeffs):
            if c:
                poly[(a * idx) % self.level] += c
        return CycNumber(self.level, _reduce(self.level, poly))

    def conj(self) -> 'CycNumber':
        """Complex conjugate, x -> x^(L-1)"""
        if self.level <= 2:
            return self
        return self.galois(self.level - 1)

    def _descend(self, p: int) -> Optional['CycNumber']:
        """
        The same number at level L/p, or None when it is not in Q(zeta_(L/p))
        For p^2 | L, Phi_L(x) = Phi_(L/p)(x^p) so the subfield is spanned by the powers x^(pj).
        For p || L, write zeta_L = zeta_(L/p)^u zeta_p^v and expand over 1, zeta_p, ..., zeta_p^(p-2).
        """
        sub = self.level // p
        if sub % p == 0:
            if any(c for i, c in enumerate(self.coeffs) if i % p):
                return None
            return CycNumber(sub, self.coeffs[::p])
        u = pow(p, -1, sub) if sub > 1 else 0
        v = (1 - u * p) // sub
        polys = [[0] * sub for _ in range(p)]
        for a, c in enumerate(self.coeffs):
            if c:
                polys[(v * a) % p][(u * a) % sub] += c
        parts = [_reduce(sub, poly) for poly in polys]
        # zeta_p^(p-1) = -(1 + zeta_p + ... + zeta_p^(p-2))
        relative = [[x - y for x, y in zip(part, parts[-1])] for part in parts[:-1]]
        if any(any(part) for part in relative[1:]):
            return None
        return CycNumber(sub, relative[0])

    def canonical(self) -> 'CycNumber':
        """The same number at the smallest level whose field contains it"""
        current = self
        while current.as_rational() is None:
            for p in primefactors(current.level):
                lower = current._descend(p)
                if lower is not None:
                    current = lower
                    break
            else:
                return current
        return CycNumber.from_rational(current.as_rational())

    def inverse(self) -> 'CycNumber':
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        rational = self.as_rational()
        if rational is not None:
            return CycNumber.from_rational(1 / rational, self.level)
        modulus = Poly(cyclotomic_poly(self.level, _X), _X, domain=QQ)
        element = Poly([Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)], _X, domain=QQ)
        inv = element.invert(modulus)
        coeffs = [Fraction(int(c.p), int(c.q)) for c in reversed(inv.all_coeffs())]
        phi = len(self.coeffs)
        coeffs += [Fraction(0)] * (phi - len(coeffs))
        return CycNumber(self.level, coeffs[:phi])

    def __truediv__(self, other) -> 'CycNumber':
        other = _coerce(other)
        rational = other.as_rational()
        if rational is not None:
            if rational == 0:
                raise ZeroDivisionError("division by zero in a cyclotomic field")
            return self.scale(1 / rational)
        return self * other.inverse()

    def __rtruediv__(self, other) -> 'CycNumber':
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> 'CycNumber':
        exponent = int(exponent)
        base = self if exponent >= 0 else self.inverse()
        exponent = abs(exponent)
        result = CycNumber.one(self.level)
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def abs2(self) -> 'CycNumber':
        return self * self.conj()

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = CycNumber.from_rational(other)
        if not isinstance(other, CycNumber):
            return NotImplemented
        a, b = self._align(other)
        return a.coeffs == b.coeffs

    __hash__ = None

    # Numeric embedding and serialization

    def to_complex(self) -> complex:
        if self.level == 1:
            return complex(float(self.coeffs[0]), 0.0)
        roots = np.exp(2j * np.pi * np.arange(len(self.coeffs)) / self.level)
        values = np.array([float(c) for c in self.coeffs])
        return complex(np.dot(values, roots))

    def to_dict(self) -> Dict:
        """JSON form at the canonical level, so equal numbers serialize identically"""
        value = self.canonical()
        approx = value.to_complex()
        return {
            'L': value.level,
            'coeffs': [f"{c.numerator}/{c.denominator}" for c in value.coeffs],
            'approx': {
                're': float(f"{approx.real:.{APPROX_DIGITS}g}"),
                'im': float(f"{approx.imag:.{APPROX_DIGITS}g}")
            }
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> 'CycNumber':
        return cls(int(payload['L']), [Fraction(c) for c in payload['coeffs']])

    def __repr__(self) -> str:
        z = self.to_complex()
        return f"CycNumber(L={self.level}, ~{z.real:.6g}{z.imag:+.6g}i)"


def _coerce(value) -> CycNumber:
    if isinstance(value, CycNumber):
        return value
    if isinstance(value, (int, Fraction)):
        return CycNumber.from_rational(value)
    raise TypeError(f"cannot combine CycNumber with {type(value).__name__}")


def cyc_sum(values: Iterable[CycNumber]) -> CycNumber:
    total = CycNumber.zero()
    for v in values:
        total = total + v
    return total


def cyc_root_of_unity(L: int, a: int) -> CycNumber:
    """zeta_L^a"""
    if L < 1:
        raise ArgumentError(f"root of unity order must be positive, got {L}")
    return CycNumber.from_exponent_counts(L, {a % L: 1})


def root_of_unity_from_turn(turn: Fraction) -> CycNumber:
    """exp(2 pi i * turn) for a rational turn"""
    turn = Fraction(turn)
    return cyc_root_of_unity(turn.denominator, turn.numerator)


def _require_odd_prime(q: int) -> None:
    if q % 2 == 0 or not isprime(q):
        raise ArgumentError(f"{q} is not an odd prime")


@lru_cache(maxsize=256)
def gauss_g1(q: int) -> CycNumber:
    """Classical quadratic Gauss sum: sum over u mod q of zeta_q^(u^2)"""
    _require_odd_prime(q)
    if q > GAUSS_SUM_BUDGET:
        raise ArgumentError(f"q={q} exceeds the Gauss sum budget {GAUSS_SUM_BUDGET}")
    counts = np.bincount((np.arange(q, dtype=np.int64) ** 2) % q, minlength=q)
    return CycNumber.from_exponent_counts(q, counts.tolist())


@lru_cache(maxsize=256)
def sqrt_prime(q: int) -> CycNumber:
    """Positive square root of a prime as a cyclotomic element"""
    if q == 2:
        return cyc_root_of_unity(8, 1) + cyc_root_of_unity(8, 7)
    g = gauss_g1(q)
    if q % 4 == 1:
        return g
    return g * cyc_root_of_unity(4, 3)


def sqrt_integer(m: int) -> CycNumber:
    """sqrt(m) for m > 0, i*sqrt(|m|) for m < 0"""
    if m == 0:
        return CycNumber.zero()
    square, result = 1, CycNumber.one()
    for p, e in factorint(abs(m)).items():
        square *= p ** (e // 2)
        if e % 2:
            result = result * sqrt_prime(p)
    result = result.scale(square)
    if m < 0:
        result = result * cyc_root_of_unity(4, 1)
    return result


def prime_power(q: int, exponent: Union[int, Fraction]) -> CycNumber:
    """q^e for e in (1/2)Z, negative exponents allowed"""
    exponent = Fraction(exponent)
    if exponent.denominator == 1:
        return CycNumber.from_rational(Fraction(q) ** exponent.numerator)
    if exponent.denominator != 2:
        raise ArgumentError(f"exponent {exponent} is not a half-integer")
    whole = exponent - Fraction(1, 2)
    return sqrt_prime(q).scale(Fraction(q) ** int(whole))
