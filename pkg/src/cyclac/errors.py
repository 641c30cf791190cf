# -*- coding: utf-8 -*-

""" errors raised by cyclac

Each error carries the exit code the command line reports for it.
"""


class CyclacError(Exception):
    exit_code = 1


class ParamError(CyclacError, ValueError):
    """ invalid parameters: non-prime p or l, p != 2l²k+1, out-of-range arguments """
    exit_code = 2


class DimensionError(ParamError):
    """ matrix shapes do not fit the operation """


class SingularMatrix(CyclacError, ArithmeticError):
    exit_code = 3


class IntegrityError(CyclacError):
    """ decryption produced a non-integral or out-of-range block """
    exit_code = 4


class FormatError(CyclacError, ValueError):
    exit_code = 4
