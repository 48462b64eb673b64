"""
Dirichlet Characters - characters modulo 4N stored as local components at 4 and at each prime q | N
Also parses the textual character spec used on the command line
"""
import logging
import re
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Iterable, Optional, Tuple, Union

from pydantic import BaseModel, field_validator
from sympy import factorint, isprime
from sympy.ntheory import discrete_log, legendre_symbol, primitive_root

from errors import ArgumentError
from ring.cyclotomic import CycNumber, root_of_unity_from_turn

logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)

Rationalish = Union[int, Fraction]


def legendre(a: int, q: int) -> int:
    """Legendre symbol (a/q) for an odd prime q"""
    if q % 2 == 0 or not isprime(q):
        raise ArgumentError(f"{q} is not an odd prime")
    return int(legendre_symbol(a % q, q))


def odd_squarefree_primes(N: int) -> Tuple[int, ...]:
    """Prime factors of an odd squarefree N, ascending"""
    if N < 1 or N % 2 == 0:
        raise ArgumentError(f"N={N} must be a positive odd integer")
    factors = factorint(N)
    if any(e > 1 for e in factors.values()):
        raise ArgumentError(f"N={N} is not squarefree")
    return tuple(sorted(factors))


@lru_cache(maxsize=256)
def _generator(m: int) -> int:
    return 3 if m == 4 else int(primitive_root(m))


@lru_cache(maxsize=65536)
def _log(m: int, a: int) -> int:
    """Discrete log of a unit a mod m to the fixed generator"""
    a %= m
    if m == 4:
        return 0 if a == 1 else 1
    return int(discrete_log(m, a, _generator(m)))


def _group_order(m: int) -> int:
    return 2 if m == 4 else m - 1


class DirichletCharacter:
    """Character modulo 4N as a product of components chi_4 and chi_q"""

    __slots__ = ('N', 'components')

    def __init__(self, N: int, components: Optional[Dict[int, Tuple[int, int]]] = None):
        """
        components: modulus m -> (order, exponent) meaning chi_m(g_m) = zeta_order^exponent
        Unlisted moduli are trivial
        """
        primes = odd_squarefree_primes(N)
        self.N = N
        normalized = {}
        for m in (4,) + primes:
            order, exponent = (components or {}).get(m, (1, 0))
            if order < 1 or _group_order(m) % order:
                raise ArgumentError(f"order {order} does not divide |(Z/{m})^x| = {_group_order(m)}")
            exponent %= order
            step = gcd(order, exponent) if exponent else order
            normalized[m] = (order // step, exponent // step)
        extra = set(components or {}) - set(normalized)
        if extra:
            raise ArgumentError(f"moduli {sorted(extra)} do not divide 4N = {4 * N}")
        self.components = normalized

    @classmethod
    def trivial(cls, N: int) -> 'DirichletCharacter':
        return cls(N)

    @property
    def modulus(self) -> int:
        return 4 * self.N

    @property
    def moduli(self) -> Tuple[int, ...]:
        return tuple(self.components)

    @property
    def primes(self) -> Tuple[int, ...]:
        return tuple(m for m in self.components if m != 4)

    def order_at(self, m: int) -> int:
        return self.components[m][0]

    def is_trivial_at(self, m: int) -> bool:
        return self.components[m][0] == 1

    def square_is_trivial_at(self, m: int) -> bool:
        return self.components[m][0] <= 2

    def component_turn(self, m: int, a: Rationalish) -> Optional[Fraction]:
        """
        chi_m(a) as a fraction of a full turn, for a in Z or a rational with numerator and denominator prime to m
        Returns: None when a is not a unit mod m
        """
        a = Fraction(a)
        if gcd(a.numerator, m) != 1 or gcd(a.denominator, m) != 1:
            return None
        order, exponent = self.components[m]
        if order == 1:
            return Fraction(0)
        log = _log(m, a.numerator) - _log(m, a.denominator)
        return Fraction(exponent * log, order) % 1

    def turn(self, a: Rationalish, moduli: Optional[Iterable[int]] = None) -> Optional[Fraction]:
        total = Fraction(0)
        for m in (self.moduli if moduli is None else moduli):
            part = self.component_turn(m, a)
            if part is None:
                return None
            total += part
        return total % 1

    def value(self, a: Rationalish, moduli: Optional[Iterable[int]] = None) -> CycNumber:
        """chi(a), or the product of the selected components; 0 on non-units"""
        t = self.turn(a, moduli)
        if t is None:
            return CycNumber.zero()
        return root_of_unity_from_turn(t)

    def power_value(self, base: Rationalish, exponent: int, moduli: Optional[Iterable[int]] = None) -> CycNumber:
        """chi(base)^exponent, negative exponents meaning the conjugate power"""
        t = self.turn(base, moduli)
        if t is None:
            return CycNumber.zero()
        return root_of_unity_from_turn(t * exponent)

    def parity(self) -> int:
        """chi(-1) as +1 or -1"""
        return 1 if self.turn(-1) == 0 else -1

    def restrict(self, moduli: Iterable[int]) -> 'DirichletCharacter':
        keep = set(moduli)
        return DirichletCharacter(self.N, {m: c for m, c in self.components.items() if m in keep})

    def square(self) -> 'DirichletCharacter':
        return DirichletCharacter(self.N, {m: (o, 2 * e) for m, (o, e) in self.components.items()})

    def conj(self) -> 'DirichletCharacter':
        return DirichletCharacter(self.N, {m: (o, -e) for m, (o, e) in self.components.items()})

    def describe(self) -> str:
        parts = []
        for m, (order, exponent) in self.components.items():
            if order == 1:
                parts.append(f"trivial@{m}")
            elif order == 2:
                parts.append(f"quadratic@{m}")
            else:
                parts.append(f"gen^{exponent}:{order}@{m}")
        return ",".join(parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DirichletCharacter):
            return NotImplemented
        return self.N == other.N and self.components == other.components

    def __hash__(self) -> int:
        return hash((self.N, tuple(sorted(self.components.items()))))

    def __repr__(self) -> str:
        return f"DirichletCharacter(mod {self.modulus}: {self.describe()})"


def char_eval(chi: DirichletCharacter, a: int) -> CycNumber:
    return chi.value(a)


_COMPONENT = re.compile(r'^(trivial|quadratic|gen\^(-?\d+):(\d+))@(\d+)$')


class CharacterSpec(BaseModel):
    """Textual character: comma separated comp@m with comp in trivial, quadratic, gen^e:ord"""
    text: str = ''

    @field_validator('text')
    @classmethod
    def check_syntax(cls, value: str) -> str:
        value = value.replace(' ', '')
        for part in filter(None, value.split(',')):
            if not _COMPONENT.match(part):
                raise ValueError(f"bad character component '{part}'")
        return value

    def to_character(self, N: int) -> DirichletCharacter:
        components = {}
        for part in filter(None, self.text.split(',')):
            match = _COMPONENT.match(part)
            kind, exponent, order, m = match.group(1), match.group(2), match.group(3), int(match.group(4))
            if m in components:
                raise ArgumentError(f"modulus {m} listed twice in character spec")
            if kind == 'trivial':
                components[m] = (1, 0)
            elif kind == 'quadratic':
                components[m] = (2, 1)
            else:
                components[m] = (int(order), int(exponent))
        return DirichletCharacter(N, components)


def parse_character(text: Optional[str], N: int) -> DirichletCharacter:
    return CharacterSpec(text=text or '').to_character(N)
