# -*- coding: utf-8 -*-

from cyclac.config import get_logger
from cyclac.errors import IntegrityError, ParamError
from cyclac.field import Generator, PrimeModulus, index_table, power_table
from cyclac.matrix import IntMatrix
from cyclac.meta import freeze, Var
from cyclac.workers import WorkerManager
from functools import lru_cache
from sympy import isprime
from typing import Dict, FrozenSet, Iterator, List, NamedTuple, Optional, Sequence, Tuple


""" cyclotomic numbers of order e = 2l² over F_p

A cyclotomic number (a,b) counts the pairs (s,t) in [0,k)² with
1 + gamma^(es+a) = gamma^(et+b) (mod p). Index pairs fall into equality classes (orbits)
whose members always share the same count, so a full e x e matrix only needs one count per
class.
"""


# module setup {{{

logger = get_logger(__name__)

# }}}


@freeze
class CyclotomyParams:
    """
    The tuple (l, e, p, k) with p = e*k + 1 and e = 2l²

    - l: prime
    - p: PrimeModulus
    - e, k: derived
    """

    l = Var()
    p = Var()

    def __init__(self) -> None:
        if isinstance(self.l, bool) or not isinstance(self.l, int) or not isprime(self.l):
            raise ParamError(f"l = {self.l!r} is not prime")
        if not isinstance(self.p, PrimeModulus):
            self.p = PrimeModulus(self.p)
        self.e = 2 * self.l * self.l
        if (self.p.p - 1) % self.e:
            raise ParamError(f"p - 1 = {self.p.p - 1} is not divisible by 2l² = {self.e}")
        self.k = (self.p.p - 1) // self.e

    @property
    def lsq(self) -> int:
        return self.l * self.l

    @property
    def k_even(self) -> bool:
        return self.k % 2 == 0

    def __repr__(self) -> str:
        return f"CyclotomyParams(l={self.l}, p={self.p.p}, e={self.e}, k={self.k})"


def make_params(l: int, p: int) -> CyclotomyParams:
    """ validate (l, p) and derive e = 2l², k = (p-1)/e
    """
    return CyclotomyParams(l, p)


class IndexPair(NamedTuple):
    """ the symbolic identity (a, b) of a cyclotomic number, both coordinates in [0, e) """
    a: int
    b: int

    @classmethod
    def of(cls, a: int, b: int, e: int) -> "IndexPair":
        return cls(a % e, b % e)

    def __str__(self) -> str:
        return f"{self.a}:{self.b}"


def _lift(x: int, e: int) -> int:
    # negative indices get 2l² added once, then everything is reduced mod e
    if x < 0:
        x += e
    return x % e


def related_pairs(pair: IndexPair, params: CyclotomyParams) -> Tuple[IndexPair, ...]:
    """ the six pairs forced equal to `pair`

        k even: (a,b) = (b,a) = (a-b,-b) = (b-a,-a) = (-a,b-a) = (-b,a-b)
        k odd:  (a,b) = (b+l²,a+l²) = (l²+a-b,-b) = (l²+b-a,l²-a) = (-a,b-a) = (l²-b,a-b)
    """
    a, b = pair
    e = params.e
    if params.k_even:
        raw = ((a, b), (b, a), (a - b, -b), (b - a, -a), (-a, b - a), (-b, a - b))
    else:
        h = params.lsq
        raw = ((a, b), (b + h, a + h), (h + a - b, -b), (h + b - a, h - a), (-a, b - a), (h - b, a - b))
    return tuple(IndexPair(_lift(x, e), _lift(y, e)) for x, y in raw)


def orbit(pair: IndexPair, params: CyclotomyParams) -> FrozenSet[IndexPair]:
    """ closure of {pair} under the six relations; size 1, 2, 3 or 6
    """
    start = IndexPair.of(pair[0], pair[1], params.e)
    seen = {start}
    todo = [start]
    while todo:
        for other in related_pairs(todo.pop(), params):
            if other not in seen:
                seen.add(other)
                todo.append(other)
    return frozenset(seen)


def canonical_rep(pair: IndexPair, params: CyclotomyParams) -> IndexPair:
    """ lexicographically smallest member of the orbit
    """
    return min(orbit(pair, params))


@freeze
class RepTable:
    """
    e x e grid of canonical representatives: entries[a][b] = canonical_rep((a, b))
    """

    entries = Var()
    params = Var()

    def __init__(self) -> None:
        self.entries = tuple(tuple(IndexPair(*cell) for cell in row) for row in self.entries)
        e = self.params.e
        if len(self.entries) != e or any(len(row) != e for row in self.entries):
            raise ParamError(f"representative table must be {e}x{e}")

    def __getitem__(self, index):
        if isinstance(index, tuple):
            a, b = index
            return self.entries[a][b]
        return self.entries[index]

    def __iter__(self) -> Iterator[Tuple[IndexPair, ...]]:
        return iter(self.entries)

    def representatives(self) -> Tuple[IndexPair, ...]:
        """ the distinct entries, ascending
        """
        return tuple(sorted({cell for row in self.entries for cell in row}))

    def positions(self) -> Dict[IndexPair, List[Tuple[int, int]]]:
        """ representative -> every (a, b) position it stands for
        """
        out: Dict[IndexPair, List[Tuple[int, int]]] = {}
        for a, row in enumerate(self.entries):
            for b, cell in enumerate(row):
                out.setdefault(cell, []).append((a, b))
        return out

    def __str__(self) -> str:
        return "\n".join(",".join(str(cell) for cell in row) for row in self.entries)


@lru_cache(maxsize=32)
def equality_table(params: CyclotomyParams) -> RepTable:
    """ representative table for params (depends only on l and the parity of k)
    """
    e = params.e
    reps: Dict[IndexPair, IndexPair] = {}
    for a in range(e):
        for b in range(e):
            pair = IndexPair(a, b)
            if pair in reps:
                continue
            members = orbit(pair, params)
            rep = min(members)
            for member in members:
                reps[member] = rep
    table = RepTable([[reps[IndexPair(a, b)] for b in range(e)] for a in range(e)], params)
    logger.debug(f"equality table for {params}: {len(reps)} pairs in {len(set(reps.values()))} classes")
    return table


def class_count(params: CyclotomyParams) -> int:
    """ number of equality classes: e + ceil((e-1)(e-2)/6)

        (e-1)(e-2) is divisible by 6 for every prime l except 3; for l = 3 the ceiling absorbs
        the extra two-element class.
    """
    e = params.e
    return e - (-(e - 1) * (e - 2) // 6)


def orbit_classes(params: CyclotomyParams) -> Tuple[Tuple[IndexPair, Tuple[IndexPair, ...]], ...]:
    """ (representative, members) for every class, ordered by representative
    """
    return tuple((rep, tuple(sorted(orbit(rep, params)))) for rep in equality_table(params).representatives())


# counting {{{

def _check_generator(gamma: Generator, params: CyclotomyParams) -> None:
    if gamma.modulus != params.p:
        raise ParamError(f"generator {gamma} belongs to F_{gamma.modulus.p}, not F_{params.p.p}")


def cyclotomic_number(pair: IndexPair, gamma: Generator, params: CyclotomyParams) -> int:
    """ direct count of (s, t) in [0, k)² with 1 + gamma^(es+a) = gamma^(et+b) (mod p)

        Straight double loop over the power table; the reference every faster path is checked
        against.
    """
    _check_generator(gamma, params)
    a, b = IndexPair.of(pair[0], pair[1], params.e)
    e, k, p = params.e, params.k, params.p.p
    powers = power_table(gamma)
    count = 0
    for s in range(k):
        x = powers[e * s + a]
        for t in range(k):
            if (1 + x - powers[e * t + b]) % p == 0:
                count += 1
    return count


def _counter(gamma: Generator, params: CyclotomyParams):
    """ count (a, b) in O(k): for each s, the matching gamma^(et+b) must equal 1 + gamma^(es+a),
        which has index = b (mod e) exactly when a matching t exists (and then t is unique)
    """
    e, k, p = params.e, params.k, params.p.p
    powers = power_table(gamma)
    indices = index_table(gamma)

    def count(pair: IndexPair) -> int:
        a, b = pair
        n = 0
        for s in range(k):
            y = (1 + powers[e * s + a]) % p
            if y and indices[y] % e == b:
                n += 1
        return n
    return count

# }}}


@freeze
class CycMatrix:
    """
    Cyclotomic matrix of order e for one generator

    - values: e x e grid of counts in [0, k]
    - generator: Generator
    - params: CyclotomyParams
    - evaluations: number of solution counts performed to build it
    """

    values = Var()
    generator = Var()
    params = Var()
    evaluations = Var(0)

    def __init__(self) -> None:
        self.values = tuple(tuple(row) for row in self.values)
        e, k = self.params.e, self.params.k
        if len(self.values) != e or any(len(row) != e for row in self.values):
            raise ParamError(f"cyclotomic matrix must be {e}x{e}")
        if any(not 0 <= v <= k for row in self.values for v in row):
            raise ParamError(f"cyclotomic numbers must lie in [0, {k}]")
        # row a sums to k, less one for the class holding -1; the total is then p - 2
        minus_one = 0 if self.params.k_even else self.params.lsq
        if self.row_sums() != tuple(k - (a == minus_one) for a in range(e)):
            logger.error(f"cyclotomic matrix for {self.generator} {self.params}: row sums {self.row_sums()}")
            raise IntegrityError(f"total {self.total()} is not p - 2 = {self.params.p.p - 2}"
                    f" or a row sum differs from k = {k} (k - 1 in row {minus_one})")

    def __eq__(self, other) -> bool:
        # the evaluation count is bookkeeping, not part of the value
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return (self.values, self.generator, self.params) == (other.values, other.generator, other.params)

    def __hash__(self) -> int:
        return hash((self.values, self.generator, self.params))

    def __getitem__(self, index):
        if isinstance(index, tuple):
            a, b = index
            return self.values[a][b]
        return self.values[index]

    def __iter__(self) -> Iterator[Tuple[int, ...]]:
        return iter(self.values)

    def total(self) -> int:
        return sum(sum(row) for row in self.values)

    def row_sums(self) -> Tuple[int, ...]:
        return tuple(sum(row) for row in self.values)

    def as_int_matrix(self) -> IntMatrix:
        return IntMatrix(self.values)

    def __str__(self) -> str:
        return str(self.as_int_matrix())


def cyclotomic_matrix(gamma: Generator, params: CyclotomyParams, workers: Optional[int] = None) -> CycMatrix:
    """ count once per equality class, then broadcast to every position of the class
    """
    _check_generator(gamma, params)
    positions = equality_table(params).positions()
    reps = sorted(positions)
    with WorkerManager(workers) as wm:
        counts = wm.map(_counter(gamma, params), reps)
    values = [[0] * params.e for _ in range(params.e)]
    for rep, count in zip(reps, counts):
        for a, b in positions[rep]:
            values[a][b] = count
    logger.debug(f"cyclotomic matrix gamma={gamma} {params}: {len(reps)} evaluations")
    return CycMatrix(values, gamma, params, len(reps))


def naive_cyclotomic_matrix(gamma: Generator, params: CyclotomyParams, workers: Optional[int] = None) -> CycMatrix:
    """ count every one of the e² positions, no class reduction
    """
    _check_generator(gamma, params)
    e = params.e
    pairs = [IndexPair(a, b) for a in range(e) for b in range(e)]
    with WorkerManager(workers) as wm:
        counts = wm.map(_counter(gamma, params), pairs)
    values = [counts[a * e:(a + 1) * e] for a in range(e)]
    return CycMatrix(values, gamma, params, len(pairs))


# generator change {{{

def scale_pairs(table: RepTable, r0: int) -> Tuple[Tuple[IndexPair, ...], ...]:
    """ symbolic matrix: every entry (a, b) of the table replaced by canonical_rep((r0*a, r0*b))
    """
    params = table.params
    e = params.e
    return tuple(
        tuple(canonical_rep(IndexPair.of(r0 * a, r0 * b, e), params) for a, b in row)
        for row in table.entries)


def substitute(grid: Sequence[Sequence[IndexPair]], matrix: CycMatrix) -> IntMatrix:
    """ replace each symbolic pair by the matrix value at that pair
    """
    return IntMatrix([[matrix.values[a][b] for a, b in row] for row in grid])


def permute_matrix(matrix: CycMatrix, r0: int) -> IntMatrix:
    """ values[(r0*a) mod e][(r0*b) mod e]

        If gamma''^r0 = gamma' then permute_matrix(cyclotomic_matrix(gamma''), r0) is the
        cyclotomic matrix of gamma'.
    """
    e = matrix.params.e
    return IntMatrix([[matrix.values[r0 * a % e][r0 * b % e] for b in range(e)] for a in range(e)])

# }}}

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
