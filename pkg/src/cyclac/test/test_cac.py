# -*- coding: utf-8 -*-

from cyclac.cac import (CipherBlock, MessageBlock, PublicKey, SecretKey, break_ciphertext,
        break_message, decode_message, decrypt, decrypt_message, encode_message, encrypt,
        encrypt_message, expand_secret, keygen, keygen_from_generators, public_determinant,
        public_inverse, public_matrix, raw_blocks, raw_bytes)
from cyclac.cyclotomy import cyclotomic_matrix, make_params
from cyclac.errors import DimensionError, FormatError, IntegrityError, ParamError, SingularMatrix
from cyclac.field import Generator, find_generators
from cyclac.matrix import IntMatrix, RatMatrix, determinant
from cyclac.test import golden
import random
import pytest


@pytest.fixture
def golden_keys():
    return keygen_from_generators(make_params(golden.L, golden.P), golden.GAMMA_PRIME, golden.GAMMA_DOUBLE_PRIME)


def test_golden_example(golden_keys):
    pk, sk = golden_keys
    assert sk.r0 == golden.R0
    assert sk.gamma_prime == pk.gamma_prime == Generator(11, 17)
    assert sk.public_key() == pk
    assert public_matrix(pk) == IntMatrix(golden.B3)
    assert public_determinant(pk) == 1

    cipher = encrypt(pk, MessageBlock(golden.A))
    assert cipher.matrix == IntMatrix(golden.C)

    ek = expand_secret(sk)
    assert ek.pairs == golden.D
    assert ek.z_matrix == RatMatrix(golden.D_STAR)
    assert public_inverse(pk) == ek.z_matrix
    assert decrypt(ek, cipher).matrix == IntMatrix(golden.A)
    assert break_ciphertext(pk, cipher).matrix == IntMatrix(golden.A)


def test_keygen_from_generators_errors():
    params = make_params(2, 17)
    with pytest.raises(ParamError):
        keygen_from_generators(params, 11, 11)
    with pytest.raises(ParamError):
        keygen_from_generators(params, 4, 3)
    with pytest.raises(ParamError):
        keygen_from_generators(make_params(3, 19), 3, 2)


def test_secret_key_validation():
    params = make_params(2, 17)
    assert SecretKey(params, 3, 7).gamma_prime.value == 11
    for r0 in (1, 2, 0, 17, 16):
        with pytest.raises(ParamError):
            SecretKey(params, 3, r0)
    with pytest.raises(ParamError):
        SecretKey(params, 2, 7)


def test_keygen():
    pk, sk = keygen(2, 17, 5)
    assert (pk, sk) == keygen(2, 17, 5)
    assert pk.gamma_prime != sk.gamma_double_prime
    assert sk.gamma_prime == pk.gamma_prime
    assert public_determinant(pk) != 0
    drawn = {keygen(2, 17, seed)[1].gamma_double_prime for seed in range(40)}
    assert 1 < len(drawn) and drawn <= set(find_generators(17))


def test_singular_at_k_one():
    params = make_params(3, 19)
    for g in find_generators(params.p):
        matrix = cyclotomic_matrix(g, params).as_int_matrix()
        assert determinant(matrix) == 0
        with pytest.raises(SingularMatrix):
            PublicKey(params, g).check()
    with pytest.raises(ParamError):
        keygen(3, 19, 0)


def test_determinant_shared_by_all_generators():
    params = make_params(2, 41)
    dets = {determinant(cyclotomic_matrix(g, params).as_int_matrix()) for g in find_generators(params.p)}
    assert dets == {99}
    params = make_params(3, 19)
    dets = {determinant(cyclotomic_matrix(g, params).as_int_matrix()) for g in find_generators(params.p)}
    assert dets == {0}


def test_framing():
    params = make_params(2, 17)
    blocks = encode_message(b"", params)
    assert len(blocks) == 1 and blocks[0].to_bytes() == bytes(64)
    assert decode_message(blocks) == b""
    assert len(encode_message(bytes(56), params)) == 1
    assert len(encode_message(bytes(57), params)) == 2
    data = bytes(range(200))
    assert decode_message(encode_message(data, params)) == data
    assert encode_message(b"\x01", params)[0].matrix[1, 0] == 1

    raw = bytes(sum(golden.A, ()))
    assert raw_blocks(raw, params)[0].matrix == IntMatrix(golden.A)
    assert raw_bytes(raw_blocks(raw * 2, params)) == raw * 2
    for bad in (b"", raw[:-1]):
        with pytest.raises(FormatError):
            raw_blocks(bad, params)


def test_framing_errors():
    params = make_params(2, 17)
    with pytest.raises(FormatError):
        decode_message([])
    lying = bytearray(64)
    lying[7] = 200
    with pytest.raises(FormatError):
        decode_message(raw_blocks(bytes(lying), params))
    with pytest.raises(FormatError):
        decode_message(encode_message(b"x", params) + encode_message(b"x", make_params(3, 37)))
    with pytest.raises(FormatError):
        MessageBlock([[256]])
    with pytest.raises(FormatError):
        MessageBlock([[1, 2]])
    with pytest.raises(FormatError):
        CipherBlock([[-1]])


def test_encrypt_errors(golden_keys):
    pk, _ = golden_keys
    with pytest.raises(DimensionError):
        encrypt(pk, MessageBlock([[1, 2], [3, 4]]))


def test_tampered_cipher(golden_keys):
    pk, sk = golden_keys
    ek = expand_secret(sk)
    tampered = [list(row) for row in golden.C]
    # column 5 of A has a zero where the first column of the inverse has -1
    tampered[0][5] += 1
    with pytest.raises(IntegrityError):
        decrypt(ek, CipherBlock(tampered))
    with pytest.raises(IntegrityError):
        break_ciphertext(pk, CipherBlock(tampered))
    with pytest.raises(FormatError):
        decrypt(ek, CipherBlock([[5000] * 8] * 8))
    with pytest.raises(FormatError):
        decrypt(ek, CipherBlock([[1, 0, 0], [0, 1, 0], [0, 0, 1]]))


def invertible_keys():
    """ key pairs over a spread of (l, p, seed) and the (l, p) that turned out singular """
    keys, singular = [], []
    for l, p in ((2, 17), (2, 41), (2, 73), (2, 89), (2, 97), (2, 113), (3, 37), (3, 73), (3, 109)):
        try:
            pairs = [keygen(l, p, seed) for seed in range(1, 11)]
        except SingularMatrix:
            singular.append((l, p))
            continue
        keys.extend(pairs)
    return keys, singular


def test_round_trip():
    pairs, singular = invertible_keys()
    assert singular == [], f"no invertible matrix for {singular}"
    assert len(pairs) == 90
    keys = [(pk, sk, expand_secret(sk)) for pk, sk in pairs]
    rng = random.Random(2024)
    for n in range(100):
        pk, sk, ek = keys[n % len(keys)]
        data = bytes(rng.randrange(256) for _ in range(rng.randrange(4097)))
        ciphers = encrypt_message(pk, data)
        assert decrypt_message(ek, ciphers) == data
        assert break_message(pk, ciphers) == data
        for cipher in ciphers[:3]:
            assert break_ciphertext(pk, cipher) == decrypt(ek, cipher)


def test_round_trip_workers(golden_keys):
    pk, sk = golden_keys
    data = bytes(range(256)) * 5
    ciphers = encrypt_message(pk, data, workers=4)
    assert ciphers == encrypt_message(pk, data, workers=1)
    assert decrypt_message(expand_secret(sk), ciphers, workers=3) == data
    raw = bytes(sum(golden.A, ()))
    assert encrypt_message(pk, raw, raw=True)[0].matrix == IntMatrix(golden.C)
    assert break_message(pk, encrypt_message(pk, raw, raw=True), raw=True) == raw


def test_odd_k_keys():
    pk, sk = keygen(2, 41, 1)
    assert not pk.params.k_even
    assert pow(sk.gamma_double_prime.value, sk.r0, 41) == pk.gamma_prime.value
    assert public_determinant(pk) == 99
    ek = expand_secret(sk)
    assert ek.z_matrix == public_inverse(pk)
    ciphers = encrypt_message(pk, b"hello")
    assert decrypt_message(ek, ciphers) == b"hello"
    assert break_message(pk, ciphers) == b"hello"
