"""
Ring package - exact cyclotomic arithmetic and Dirichlet characters
"""
from .cyclotomic import (
    CycNumber,
    cyc_root_of_unity,
    cyc_sum,
    gauss_g1,
    prime_power,
    root_of_unity_from_turn,
    sqrt_integer,
    sqrt_prime
)
from .characters import (
    CharacterSpec,
    DirichletCharacter,
    char_eval,
    legendre,
    odd_squarefree_primes,
    parse_character
)

__all__ = [
    'CycNumber',
    'cyc_root_of_unity',
    'cyc_sum',
    'gauss_g1',
    'prime_power',
    'root_of_unity_from_turn',
    'sqrt_integer',
    'sqrt_prime',
    'CharacterSpec',
    'DirichletCharacter',
    'char_eval',
    'legendre',
    'odd_squarefree_primes',
    'parse_character'
]
