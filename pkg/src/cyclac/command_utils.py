# -*- coding: utf-8 -*-

""" decorators that turn plain functions into command line commands

.. Example::
    from cyclac import command_utils as utils

    @utils.command("generators", "list the generators of F_p*")
    @utils.argument("--p", type=int, required=True)
    def generators(args, out):
        ...
"""

from functools import wraps


def _tagged(func):
    @wraps(func)
    def wrapper(*args, **kwargs):
        return func(*args, **kwargs)
    return wrapper


def command(name, help=""):
    def deco(func):
        wrapper = _tagged(func)
        wrapper.command = name
        wrapper.help = help
        return wrapper
    return deco


def argument(*flags, **kwargs):
    """ add an argparse argument; stacked decorators keep their top-to-bottom order
    """
    def deco(func):
        wrapper = _tagged(func)
        wrapper.arguments = [(flags, kwargs)] + list(getattr(func, "arguments", []))
        return wrapper
    return deco


def params(func):
    """ shorthand for the --l / --p pair every cyclotomy command takes
    """
    func = argument("--p", type=int, required=True, help="prime p = 2l²k + 1")(func)
    return argument("--l", type=int, required=True, help="prime l (order e = 2l²)")(func)


def output_format(func):
    return argument("--format", choices=("csv", "json"), default="csv", help="output format")(func)
