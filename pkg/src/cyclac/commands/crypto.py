# -*- coding: utf-8 -*-

from cyclac import command_utils as utils
from cyclac.cac import (break_message, decrypt_message, encrypt_message, expand_secret, keygen,
        keygen_from_generators)
from cyclac.cyclotomy import make_params
from cyclac.errors import FormatError, ParamError
from cyclac.fileformat import CipherFile, KeyFile
import pathlib


def _text(path: str) -> str:
    try:
        return pathlib.Path(path).read_text(encoding="utf-8")
    except UnicodeDecodeError as e:
        raise FormatError(f"{path} is not UTF-8 text: {e}") from e


def _read_key(path: str) -> KeyFile:
    return KeyFile.from_raw(_text(path))


def _read_cipher(path: str) -> CipherFile:
    return CipherFile.from_raw(_text(path))


def _framing(func):
    func = utils.argument("--raw-block", action="store_true",
            help="no length header: input is a whole number of e x e byte blocks")(func)
    func = utils.argument("--out", required=True, help="output file")(func)
    func = utils.argument("--in", dest="in_path", required=True, help="input file")(func)
    return utils.argument("--key", required=True, help="key file")(func)


@utils.command("keygen", "generate a key pair")
@utils.params
@utils.argument("--seed", type=int, default=0, help="seed for the generator draw")
@utils.argument("--gamma-prime", type=int, default=None, help="pin the public generator")
@utils.argument("--gamma-double-prime", type=int, default=None, help="pin the secret generator")
@utils.argument("--public-out", required=True, help="public key file")
@utils.argument("--secret-out", required=True, help="secret key file")
def keygen_cmd(args, out):
    pinned = (args.gamma_prime, args.gamma_double_prime)
    if pinned == (None, None):
        pk, sk = keygen(args.l, args.p, args.seed)
    elif None in pinned:
        raise ParamError("--gamma-prime and --gamma-double-prime go together")
    else:
        pk, sk = keygen_from_generators(make_params(args.l, args.p), *pinned)
    public = KeyFile.from_public(pk)
    pathlib.Path(args.public_out).write_text(public.raw)
    pathlib.Path(args.secret_out).write_text(KeyFile.from_secret(sk).raw)
    out.write(f"{public.fingerprint()}\n")


@utils.command("encrypt", "encrypt a file with a public key")
@_framing
def encrypt_cmd(args, out):
    pk = _read_key(args.key).public_key()
    data = pathlib.Path(args.in_path).read_bytes()
    ciphers = encrypt_message(pk, data, raw=args.raw_block, workers=args.workers)
    pathlib.Path(args.out).write_text(CipherFile.build(pk, ciphers).raw)


@utils.command("decrypt", "decrypt a cipher file with a secret key")
@_framing
def decrypt_cmd(args, out):
    sk = _read_key(args.key).secret_key()
    cipher = _read_cipher(args.in_path)
    if not cipher.matches(sk.public_key()):
        raise FormatError("cipher file was not made for this key")
    data = decrypt_message(expand_secret(sk), cipher.cipher_blocks(), raw=args.raw_block, workers=args.workers)
    pathlib.Path(args.out).write_bytes(data)


@utils.command("attack", "recover the plaintext of a cipher file from the public key alone")
@_framing
def attack_cmd(args, out):
    pk = _read_key(args.key).public_key()
    cipher = _read_cipher(args.in_path)
    if not cipher.matches(pk):
        raise FormatError("cipher file was not made for this key")
    data = break_message(pk, cipher.cipher_blocks(), raw=args.raw_block, workers=args.workers)
    pathlib.Path(args.out).write_bytes(data)
