# -*- coding: utf-8 -*-

from cyclac.config import get_config, get_logger
from cyclac.cyclotomy import (CyclotomyParams, cyclotomic_matrix, equality_table,
        make_params, scale_pairs, substitute)
from cyclac.errors import DimensionError, FormatError, IntegrityError, ParamError, SingularMatrix
from cyclac.field import Generator, discrete_log, find_generators
from cyclac.matrix import IntMatrix, RatMatrix, determinant, inverse, mat_mul, rat_mul
from cyclac.meta import freeze, Var
from cyclac.workers import WorkerManager
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple, Union
import math
import random


""" the cyclotomic asymmetric cryptosystem

The public key is a generator gamma' of F_p*; its cyclotomic matrix B encrypts a message block A
as C = B x A. The secret key (gamma'', r0) with gamma''^r0 = gamma' lets the holder rebuild B by
relabelling the cyclotomic matrix of gamma'' and invert it: A = B^-1 x C.

Anyone can compute B from the public key and invert it just as well; break_ciphertext does
exactly that. The scheme is a linear map with a public matrix and offers no secrecy.
"""


# module setup {{{

logger = get_logger(__name__)

HEADER_BYTES = 8
BYTE_MAX = 255

# }}}


def _generator(value: Union[int, Generator], params: CyclotomyParams) -> Generator:
    if isinstance(value, Generator):
        if value.modulus != params.p:
            raise ParamError(f"generator {value} belongs to F_{value.modulus.p}, not F_{params.p.p}")
        return value
    return Generator(value, params.p)


# keys {{{

@freeze
class PublicKey:
    """
    (p, l, gamma')
    """

    params = Var()
    gamma_prime = Var()

    def __init__(self) -> None:
        self.gamma_prime = _generator(self.gamma_prime, self.params)

    def check(self) -> None:
        """ SingularMatrix unless the public cyclotomic matrix is invertible
        """
        if public_determinant(self) == 0:
            logger.warning(f"public matrix of gamma'={self.gamma_prime} {self.params} is singular")
            raise SingularMatrix(f"cyclotomic matrix of {self.gamma_prime} mod {self.params.p.p} is singular")


@freeze
class SecretKey:
    """
    (p, l, gamma'', r0) with gamma''^r0 = gamma'
    """

    params = Var()
    gamma_double_prime = Var()
    r0 = Var()

    def __init__(self) -> None:
        self.gamma_double_prime = _generator(self.gamma_double_prime, self.params)
        order = self.params.p.p - 1
        if isinstance(self.r0, bool) or not isinstance(self.r0, int) or not 1 <= self.r0 <= order:
            raise ParamError(f"r0 = {self.r0!r} outside [1, {order}]")
        if math.gcd(self.r0, order) != 1:
            raise ParamError(f"r0 = {self.r0} is not coprime to p - 1 = {order}")
        if self.r0 == 1:
            raise ParamError("r0 = 1 makes the secret generator equal to the public one")

    @property
    def gamma_prime(self) -> Generator:
        p = self.params.p.p
        return Generator(pow(self.gamma_double_prime.value, self.r0, p), self.params.p)

    def public_key(self) -> PublicKey:
        return PublicKey(self.params, self.gamma_prime)


@freeze
class ExpandedKey:
    """
    The decryption matrix Z (inverse of the public cyclotomic matrix) rebuilt from secret data

    - z_matrix: RatMatrix
    - params: CyclotomyParams
    - pairs: the symbolic relabelled table the values were substituted into
    """

    z_matrix = Var()
    params = Var()
    pairs = Var(None)


@lru_cache(maxsize=32)
def public_matrix(pk: PublicKey) -> IntMatrix:
    return cyclotomic_matrix(pk.gamma_prime, pk.params).as_int_matrix()


@lru_cache(maxsize=32)
def public_determinant(pk: PublicKey) -> int:
    return determinant(public_matrix(pk))


@lru_cache(maxsize=32)
def public_inverse(pk: PublicKey) -> RatMatrix:
    pk.check()
    return inverse(public_matrix(pk))


def keygen_from_generators(params: CyclotomyParams, gamma_prime: Union[int, Generator],
        gamma_double_prime: Union[int, Generator]) -> Tuple[PublicKey, SecretKey]:
    """ key pair for pinned generators; r0 = log base gamma'' of gamma'
    """
    if params.k < 2:
        raise ParamError(f"k = {params.k}: cyclotomic matrices are always singular for k = 1")
    gp = _generator(gamma_prime, params)
    gpp = _generator(gamma_double_prime, params)
    if gp == gpp:
        raise ParamError(f"public and secret generators must differ, both are {gp}")
    r0 = discrete_log(gpp, gp.value, params.p)
    pk = PublicKey(params, gp)
    pk.check()
    sk = SecretKey(params, gpp, r0)
    logger.info(f"key pair {params}: gamma'={gp}, gamma''={gpp}, r0={r0}")
    return pk, sk


def keygen(l: int, p: int, seed: int, retries: Optional[int] = None) -> Tuple[PublicKey, SecretKey]:
    """ draw gamma'' and then gamma' != gamma'' from the generators of F_p*, deterministically from
        seed; gamma' is re-drawn while its cyclotomic matrix is singular, at most `retries` times
    """
    params = make_params(l, p)
    if params.k < 2:
        raise ParamError(f"k = {params.k}: cyclotomic matrices are always singular for k = 1")
    retries = get_config().keygen_retries if retries is None else retries
    rng = random.Random(seed)
    gens = list(find_generators(params.p))
    secret = rng.choice(gens)
    candidates = [g for g in gens if g != secret]
    rng.shuffle(candidates)
    for attempt, gp in enumerate(candidates[:retries], 1):
        try:
            return keygen_from_generators(params, gp, secret)
        except SingularMatrix:
            logger.info(f"keygen attempt {attempt}: gamma'={gp} gives a singular matrix, re-drawing")
    raise SingularMatrix(f"no non-singular public matrix among {min(retries, len(candidates))} generators of F_{p}*")

# }}}


# blocks {{{

@freeze
class MessageBlock:
    """
    Square matrix of byte values (plaintext)
    """

    matrix = Var()

    def __init__(self) -> None:
        if not isinstance(self.matrix, IntMatrix):
            self.matrix = IntMatrix(self.matrix)
        if not self.matrix.is_square:
            raise FormatError(f"message block must be square, got {self.matrix.rows}x{self.matrix.cols}")
        if any(not 0 <= cell <= BYTE_MAX for row in self.matrix for cell in row):
            raise FormatError("message block cells must be byte values")

    @property
    def order(self) -> int:
        return self.matrix.rows

    def to_bytes(self) -> bytes:
        return bytes(cell for row in self.matrix for cell in row)


@freeze
class CipherBlock:
    """
    Square matrix of non-negative integers (ciphertext)
    """

    matrix = Var()

    def __init__(self) -> None:
        if not isinstance(self.matrix, IntMatrix):
            self.matrix = IntMatrix(self.matrix)
        if not self.matrix.is_square:
            raise FormatError(f"cipher block must be square, got {self.matrix.rows}x{self.matrix.cols}")
        if any(cell < 0 for row in self.matrix for cell in row):
            raise FormatError("cipher block cells must be non-negative")

    @property
    def order(self) -> int:
        return self.matrix.rows

    def check(self, params: CyclotomyParams) -> None:
        """ FormatError unless the block has order e and every cell is at most e*k*255
        """
        if self.order != params.e:
            raise FormatError(f"cipher block of order {self.order}, expected {params.e}")
        bound = params.e * params.k * BYTE_MAX
        if any(cell > bound for row in self.matrix for cell in row):
            raise FormatError(f"cipher block cell exceeds e*k*255 = {bound}")


def _blocks(buf: bytes, e: int) -> List[MessageBlock]:
    size = e * e
    return [MessageBlock([buf[i + r * e:i + (r + 1) * e] for r in range(e)])
            for i in range(0, len(buf), size)]


def encode_message(data: bytes, params: CyclotomyParams) -> List[MessageBlock]:
    """ 8-byte big-endian length, payload, zero padding to a multiple of e², split row-major
    """
    e = params.e
    buf = len(data).to_bytes(HEADER_BYTES, "big") + bytes(data)
    buf += bytes(-len(buf) % (e * e))
    return _blocks(buf, e)


def decode_message(blocks: Sequence[MessageBlock]) -> bytes:
    if not blocks:
        raise FormatError("no blocks to decode")
    e = blocks[0].order
    if any(block.order != e for block in blocks):
        raise FormatError("blocks of mixed order")
    buf = b"".join(block.to_bytes() for block in blocks)
    length = int.from_bytes(buf[:HEADER_BYTES], "big")
    expected = -(-(length + HEADER_BYTES) // (e * e))
    if expected != len(blocks):
        raise FormatError(f"header declares {length} bytes ({expected} blocks) but {len(blocks)} blocks were given")
    return buf[HEADER_BYTES:HEADER_BYTES + length]


def raw_blocks(data: bytes, params: CyclotomyParams) -> List[MessageBlock]:
    """ header-less framing: data must fill whole e x e blocks
    """
    size = params.e * params.e
    if not data or len(data) % size:
        raise FormatError(f"raw input of {len(data)} bytes is not a positive multiple of e² = {size}")
    return _blocks(bytes(data), params.e)


def raw_bytes(blocks: Sequence[MessageBlock]) -> bytes:
    return b"".join(block.to_bytes() for block in blocks)

# }}}


# encryption {{{

def encrypt(pk: PublicKey, block: MessageBlock) -> CipherBlock:
    """ C = B x A with B the cyclotomic matrix of gamma'
    """
    pk.check()
    if block.order != pk.params.e:
        raise DimensionError(f"message block of order {block.order}, expected {pk.params.e}")
    return CipherBlock(mat_mul(public_matrix(pk), block.matrix))


def expand_secret(sk: SecretKey) -> ExpandedKey:
    """ rebuild the inverse public matrix from (gamma'', r0)

        1. representative table of (l, parity of k)
        2. every entry (a, b) relabelled to canonical_rep((r0*a, r0*b))
        3. every relabelled pair replaced by its value in the cyclotomic matrix of gamma'';
           this is the public matrix, by the generator-change law
        4. exact inverse
    """
    params = sk.params
    pairs = scale_pairs(equality_table(params), sk.r0)
    relabelled = substitute(pairs, cyclotomic_matrix(sk.gamma_double_prime, params))
    try:
        z = inverse(relabelled)
    except SingularMatrix:
        logger.warning(f"secret key gamma''={sk.gamma_double_prime} r0={sk.r0} {params}: singular matrix")
        raise
    return ExpandedKey(z, params, pairs)


def _recover(z: RatMatrix, cipher: CipherBlock, params: CyclotomyParams) -> MessageBlock:
    cipher.check(params)
    product = rat_mul(z, cipher.matrix)
    if not product.is_integral():
        logger.error(f"decryption produced fractions {params}")
        raise IntegrityError("decryption produced non-integer cells: wrong key or corrupted block")
    plain = product.to_int_matrix()
    if any(not 0 <= cell <= BYTE_MAX for row in plain for cell in row):
        logger.error(f"decryption produced non-byte cells {params}")
        raise IntegrityError("decryption produced cells outside [0, 255]: wrong key or corrupted block")
    return MessageBlock(plain)


def decrypt(ek: ExpandedKey, cipher: CipherBlock) -> MessageBlock:
    """ A = Z x C
    """
    return _recover(ek.z_matrix, cipher, ek.params)


def break_ciphertext(pk: PublicKey, cipher: CipherBlock) -> MessageBlock:
    """ decrypt with nothing but the public key: invert the public matrix
    """
    return _recover(public_inverse(pk), cipher, pk.params)


def encrypt_message(pk: PublicKey, data: bytes, raw: bool = False, workers: Optional[int] = None) -> List[CipherBlock]:
    blocks = raw_blocks(data, pk.params) if raw else encode_message(data, pk.params)
    pk.check()
    with WorkerManager(workers) as wm:
        return wm.map(lambda block: encrypt(pk, block), blocks)


def decrypt_message(ek: ExpandedKey, ciphers: Sequence[CipherBlock], raw: bool = False, workers: Optional[int] = None) -> bytes:
    with WorkerManager(workers) as wm:
        blocks = wm.map(lambda cipher: decrypt(ek, cipher), ciphers)
    return raw_bytes(blocks) if raw else decode_message(blocks)


def break_message(pk: PublicKey, ciphers: Sequence[CipherBlock], raw: bool = False, workers: Optional[int] = None) -> bytes:
    public_inverse(pk)
    with WorkerManager(workers) as wm:
        blocks = wm.map(lambda cipher: break_ciphertext(pk, cipher), ciphers)
    return raw_bytes(blocks) if raw else decode_message(blocks)

# }}}

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
