# -*- coding: utf-8 -*-

from cyclac.config import get_logger
from cyclac.errors import ParamError
from cyclac.meta import freeze, Var
from functools import lru_cache
from sympy import factorint, isprime
from typing import List, Tuple, Union
import math


""" arithmetic in F_p and its multiplicative group
"""


# module setup {{{

logger = get_logger(__name__)

# the literal power-table generator search is only run as an oracle on small fields
NAIVE_LIMIT = 200

# }}}


@freeze
class PrimeModulus:
    """
    A prime p together with the prime factorization of p-1

    - p: the prime
    - p_minus_1_factors: prime factors of p-1 with multiplicity, ascending
    """

    p = Var()

    def __init__(self) -> None:
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise ParamError(f"modulus must be an integer, got {self.p!r}")
        if self.p < 2 or not isprime(self.p):
            raise ParamError(f"modulus {self.p} is not prime")
        factors: List[int] = []
        for q, mult in sorted(factorint(self.p - 1).items()):
            factors.extend([q] * mult)
        self.p_minus_1_factors = tuple(factors)

    @property
    def distinct_factors(self) -> Tuple[int, ...]:
        return tuple(sorted(set(self.p_minus_1_factors)))

    def __int__(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"PrimeModulus({self.p})"


Modulus = Union[int, PrimeModulus]


def as_modulus(modulus: Modulus) -> PrimeModulus:
    return modulus if isinstance(modulus, PrimeModulus) else PrimeModulus(modulus)


@freeze
class Generator:
    """
    A primitive root of F_p*

    - value: integer in [2, p-1] (1 is the generator of F_2*, the only field where that happens)
    - modulus: PrimeModulus
    """

    value = Var()
    modulus = Var()

    def __init__(self) -> None:
        self.modulus = as_modulus(self.modulus)
        if not is_generator(self.value, self.modulus):
            raise ParamError(f"{self.value} does not generate F_{self.modulus.p}*")

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Generator({self.value}, {self.modulus.p})"

    def __str__(self) -> str:
        return str(self.value)


def mod_pow(base: int, exponent: int, modulus: Modulus) -> int:
    """ base^exponent mod p
    """
    if exponent < 0:
        raise ParamError(f"negative exponent {exponent}")
    return pow(int(base), exponent, int(modulus))


def is_generator(candidate: int, modulus: Modulus) -> bool:
    """ order test: candidate generates F_p* iff candidate^((p-1)/q) != 1 for every prime q | p-1
    """
    modulus = as_modulus(modulus)
    p = modulus.p
    if isinstance(candidate, bool) or not isinstance(candidate, int) or not 1 <= candidate <= p - 1:
        raise ParamError(f"candidate {candidate!r} outside [1, {p - 1}]")
    if p == 2:
        return True
    return all(pow(candidate, (p - 1) // q, p) != 1 for q in modulus.distinct_factors)


def find_generators(modulus: Modulus) -> Tuple[Generator, ...]:
    """ all primitive roots of F_p*, ascending

        There are exactly phi(p-1) of them.
    """
    modulus = as_modulus(modulus)
    gens = tuple(Generator(g, modulus) for g in range(1, modulus.p) if is_generator(g, modulus))
    logger.debug(f"F_{modulus.p}*: {len(gens)} generators")
    return gens


def multiplicative_order(x: int, modulus: Modulus) -> int:
    """ order of x by repeated multiplication
    """
    p = int(modulus)
    if x % p == 0:
        raise ParamError(f"0 has no multiplicative order mod {p}")
    order, acc = 1, x % p
    while acc != 1:
        acc = acc * x % p
        order += 1
    return order


def naive_generators(modulus: Modulus) -> Tuple[Generator, ...]:
    """ generator search by full power-table enumeration

        For each candidate, mark every power candidate^1..candidate^(p-1) in a flag table and
        accept the candidate when all p-1 flags are set. Cubic in p; kept as an oracle for
        find_generators and refused for p >= NAIVE_LIMIT.
    """
    modulus = as_modulus(modulus)
    p = modulus.p
    if p >= NAIVE_LIMIT:
        raise ParamError(f"naive generator search is limited to p < {NAIVE_LIMIT}, got {p}")
    elements = list(range(1, p))
    gens = []
    for gamma in elements:
        flags = [0] * p
        for a in range(1, p):
            r = mod_pow(gamma, a, p)
            for j in elements:
                if r == j:
                    flags[j] = 1
        if sum(flags) == p - 1:
            gens.append(Generator(gamma, modulus))
    return tuple(gens)


def discrete_log(base: Generator, target: int, modulus: Modulus) -> int:
    """ baby-step/giant-step: the unique r in [1, p-1] with base^r = target (mod p)

        Writes r = i*m + j with m = ceil(sqrt(p-1)); baby steps tabulate base^j, giant steps
        walk target * base^(-m*i) until they hit the table. O(sqrt(p)) time and space.
    """
    modulus = as_modulus(modulus)
    p = modulus.p
    g = int(base)
    if isinstance(target, bool) or not isinstance(target, int) or not 1 <= target <= p - 1:
        raise ParamError(f"discrete log target {target!r} outside [1, {p - 1}]")
    order = p - 1
    m = math.isqrt(order - 1) + 1 if order > 1 else 1
    table = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * g % p
    factor = pow(g, -m, p)
    cur = target
    for i in range(m):
        j = table.get(cur)
        if j is not None:
            r = (i * m + j) % order
            return r if r else order
        cur = cur * factor % p
    # unreachable for a true generator
    raise ParamError(f"{target} is not a power of {g} mod {p}")


# power tables {{{

@lru_cache(maxsize=64)
def power_table(gamma: Generator) -> Tuple[int, ...]:
    """ (gamma^0, gamma^1, ..., gamma^(p-2)) mod p
    """
    p = gamma.modulus.p
    powers = [1] * (p - 1)
    for i in range(1, p - 1):
        powers[i] = powers[i - 1] * gamma.value % p
    return tuple(powers)


@lru_cache(maxsize=64)
def index_table(gamma: Generator) -> Tuple[int, ...]:
    """ index_table(gamma)[x] = i with gamma^i = x, for x in [1, p-1]; slot 0 holds -1
    """
    indices = [-1] * gamma.modulus.p
    for i, x in enumerate(power_table(gamma)):
        indices[x] = i
    return tuple(indices)

# }}}

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
