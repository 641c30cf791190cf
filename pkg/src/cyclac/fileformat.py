# -*- coding: utf-8 -*-

from cyclac.cac import CipherBlock, PublicKey, SecretKey
from cyclac.config import get_logger
from cyclac.cyclotomy import make_params
from cyclac.errors import FormatError, IntegrityError, ParamError
from cyclac.field import Generator, discrete_log
from cyclac.meta import freeze, Var
from typing import Any, Dict, List, Sequence
import hashlib
import json


""" key and ciphertext files

Both are JSON objects. Every integer is written as a decimal string so that readers with 64-bit
numbers never truncate them. Writing, reading and writing again gives the same bytes.
"""


# module setup {{{

logger = get_logger(__name__)

FORMAT_VERSION = 1

ROLES = {"public", "secret"}

# }}}


def _decimal(obj: Dict[str, Any], key: str) -> int:
    """ read a decimal-string field
    """
    raw = obj.get(key)
    if not isinstance(raw, str) or not (raw.isascii() and raw.isdigit()):
        raise FormatError(f"field {key!r} must be a decimal string, got {raw!r}")
    return int(raw)


def _load(raw: str) -> Dict[str, Any]:
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as e:
        raise FormatError(f"not a JSON document: {e}") from e
    if not isinstance(obj, dict):
        raise FormatError("top level must be a JSON object")
    if obj.get("version") != FORMAT_VERSION:
        raise FormatError(f"unsupported version {obj.get('version')!r}, expected {FORMAT_VERSION}")
    return obj


@freeze
class KeyFile:
    """
    Public or secret key on disk

    - version: format version
    - role: "public" or "secret"
    - p, l, gamma_prime: ints
    - gamma_double_prime, r0: ints (secret keys only)
    """

    role = Var()
    p = Var()
    l = Var()
    gamma_prime = Var()
    gamma_double_prime = Var(None)
    r0 = Var(None)
    version = Var(FORMAT_VERSION)

    def __init__(self) -> None:
        if self.role not in ROLES:
            raise FormatError(f"role must be 'public' or 'secret', got {self.role!r}")
        secret_fields = (self.gamma_double_prime, self.r0)
        if self.role == "secret" and None in secret_fields:
            raise FormatError("secret key file needs gamma_double_prime and r0")
        if self.role == "public" and secret_fields != (None, None):
            raise FormatError("public key file must not carry secret fields")

    @classmethod
    def from_raw(cls, raw: str) -> "KeyFile":
        obj = _load(raw)
        role = obj.get("role")
        kwargs = {key: _decimal(obj, key) for key in ("p", "l", "gamma_prime")}
        if role == "secret":
            kwargs.update({key: _decimal(obj, key) for key in ("gamma_double_prime", "r0")})
        return cls(role, **kwargs)

    @classmethod
    def from_public(cls, pk: PublicKey) -> "KeyFile":
        return cls("public", pk.params.p.p, pk.params.l, pk.gamma_prime.value)

    @classmethod
    def from_secret(cls, sk: SecretKey) -> "KeyFile":
        return cls("secret", sk.params.p.p, sk.params.l, sk.gamma_prime.value,
                sk.gamma_double_prime.value, sk.r0)

    @property
    def raw(self) -> str:
        obj = {"version": self.version, "role": self.role, "p": str(self.p), "l": str(self.l),
                "gamma_prime": str(self.gamma_prime)}
        if self.role == "secret":
            obj["gamma_double_prime"] = str(self.gamma_double_prime)
            obj["r0"] = str(self.r0)
        return json.dumps(obj, indent=2) + "\n"

    def _params(self):
        try:
            return make_params(self.l, self.p)
        except ParamError as e:
            raise FormatError(f"key file parameters are invalid: {e}") from e

    def public_key(self) -> PublicKey:
        """ the public key, re-validated (SingularMatrix if its matrix cannot be inverted)
        """
        params = self._params()
        try:
            pk = PublicKey(params, self.gamma_prime)
        except ParamError as e:
            raise FormatError(f"key file gamma_prime is invalid: {e}") from e
        pk.check()
        return pk

    def secret_key(self) -> SecretKey:
        """ the secret key, re-validated: r0 is recomputed from the generators and must match
        """
        if self.role != "secret":
            raise FormatError("not a secret key file")
        params = self._params()
        try:
            gpp = Generator(self.gamma_double_prime, params.p)
            gp = Generator(self.gamma_prime, params.p)
            sk = SecretKey(params, gpp, self.r0)
        except ParamError as e:
            raise FormatError(f"secret key file is invalid: {e}") from e
        r0 = discrete_log(gpp, gp.value, params.p)
        if r0 != self.r0:
            logger.error(f"secret key file r0={self.r0} but log_{gpp}({gp}) = {r0}")
            raise IntegrityError(f"secret key file is corrupted: r0 = {self.r0} does not map {gpp} to {gp}")
        sk.public_key().check()
        return sk

    def fingerprint(self) -> str:
        """ sha256 over the public part, first 16 hex digits
        """
        public = KeyFile("public", self.p, self.l, self.gamma_prime)
        return hashlib.sha256(public.raw.encode("utf-8")).hexdigest()[:16]

    def __str__(self) -> str:
        return self.raw


@freeze
class CipherFile:
    """
    Ciphertext on disk

    - version: format version
    - p, l, gamma_prime: the public key used
    - blocks: tuple of e x e grids of non-negative ints
    """

    p = Var()
    l = Var()
    gamma_prime = Var()
    blocks = Var()
    version = Var(FORMAT_VERSION)

    def __init__(self) -> None:
        if not isinstance(self.l, int) or self.l < 2:
            raise FormatError(f"l must be an integer >= 2, got {self.l!r}")
        e = 2 * self.l * self.l
        self.blocks = tuple(tuple(tuple(row) for row in block) for block in self.blocks)
        if not self.blocks:
            raise FormatError("cipher file has no blocks")
        for n, block in enumerate(self.blocks):
            if len(block) != e or any(len(row) != e for row in block):
                raise FormatError(f"block {n} is not {e}x{e}")
            if any(not isinstance(cell, int) or cell < 0 for row in block for cell in row):
                raise FormatError(f"block {n} has negative or non-integer cells")

    @classmethod
    def from_raw(cls, raw: str) -> "CipherFile":
        obj = _load(raw)
        blocks = obj.get("blocks")
        if not isinstance(blocks, list):
            raise FormatError("field 'blocks' must be a list")
        grids = []
        for block in blocks:
            if not isinstance(block, list) or not all(isinstance(row, list) for row in block):
                raise FormatError("every block must be a list of rows")
            grids.append([[_decimal({"cell": cell}, "cell") for cell in row] for row in block])
        return cls(_decimal(obj, "p"), _decimal(obj, "l"), _decimal(obj, "gamma_prime"), grids)

    @classmethod
    def build(cls, pk: PublicKey, ciphers: Sequence[CipherBlock]) -> "CipherFile":
        return cls(pk.params.p.p, pk.params.l, pk.gamma_prime.value,
                [cipher.matrix.cells for cipher in ciphers])

    @property
    def raw(self) -> str:
        obj = {"version": self.version, "p": str(self.p), "l": str(self.l),
                "gamma_prime": str(self.gamma_prime),
                "blocks": [[[str(cell) for cell in row] for row in block] for block in self.blocks]}
        return json.dumps(obj, separators=(",", ":")) + "\n"

    def cipher_blocks(self) -> List[CipherBlock]:
        return [CipherBlock(block) for block in self.blocks]

    def matches(self, pk: PublicKey) -> bool:
        return (self.p, self.l, self.gamma_prime) == (pk.params.p.p, pk.params.l, pk.gamma_prime.value)

    def __str__(self) -> str:
        return self.raw

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
