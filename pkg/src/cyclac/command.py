# -*- coding: utf-8 -*-

from cyclac.config import get_logger
from cyclac.errors import CyclacError
from typing import Callable, TextIO
import argparse
import sys


# module setup {{{

logger = get_logger(__name__)

# }}}


class Command(object):
    """
    A command line command built from a decorated function

    The function carries `command`, `help` and `arguments` attributes (see command_utils) and is
    called as callback(args, out) with the parsed namespace and the text stream to print to.
    """

    def __init__(self, name: str, callback: Callable) -> None:
        """ Command initializer

            :param name: qualified name, "{module}*{function}"
            :param callback: decorated function
        """
        self._name = name
        self._callback = callback
        self._command = getattr(callback, "command", None)
        self._help = getattr(callback, "help", "")
        self._arguments = list(getattr(callback, "arguments", []))

    @property
    def name(self) -> str:
        return self._name

    @property
    def command(self) -> str:
        return self._command

    def add_to(self, subparsers) -> argparse.ArgumentParser:
        parser = subparsers.add_parser(self._command, help=self._help, description=self._help)
        for flags, kwargs in self._arguments:
            parser.add_argument(*flags, **kwargs)
        parser.set_defaults(command_object=self)
        return parser

    def run(self, args: argparse.Namespace, out: TextIO, err: TextIO = sys.stderr) -> int:
        """ run the callback; library errors become their exit codes
        """
        try:
            self._callback(args, out)
        except CyclacError as e:
            logger.error(f"{self._command}: {e.__class__.__name__}: {e}")
            err.write(f"cyclac {self._command}: {e}\n")
            return e.exit_code
        except OSError as e:
            logger.error(f"{self._command}: {e}")
            err.write(f"cyclac {self._command}: {e}\n")
            return 4
        return 0

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
