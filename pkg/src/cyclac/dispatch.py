#!/usr/bin/env python3
# -*- coding: utf-8 -*-

from cyclac.command import Command
from cyclac.config import enable_console, get_config, get_logger
from cyclac.errors import CyclacError
from importlib import util as imp
from types import FunctionType
from typing import List, Optional, Sequence, TextIO
import argparse
import pathlib
import sys


# module setup {{{

ROOT = pathlib.Path(__file__).parent

logger = get_logger(__name__)

# }}}


class CommandHandler:
    """
    Collects commands from the modules in the command directories and dispatches argv to them
    """

    def __init__(self, command_dirs: Sequence = (ROOT/"commands",)) -> None:
        """ CommandHandler initializer

            :param command_dirs: directories holding command modules
        """
        self._command_dirs = list(command_dirs)
        self.load_commands()

    @property
    def commands(self):
        return dict(self._commands)

    def load_commands(self, command_dirs=None) -> int:
        """ load_commands

            :returns: the number of errors
        """
        if command_dirs is None:
            command_dirs = self._command_dirs
        self._command_dirs = []
        for command_dir in command_dirs:
            path = pathlib.Path(command_dir)
            if not path.is_dir():
                continue
            self._command_dirs.append(path)
        self._commands = {}
        errors = 0
        for command_dir in self._command_dirs:
            for module_file in sorted(command_dir.glob("*.py")):
                if module_file.match("__*"):
                    continue
                module_name = f"cyclac_commands_{module_file.stem}"
                try:
                    spec = imp.spec_from_file_location(module_name, module_file)
                    module = imp.module_from_spec(spec)
                    spec.loader.exec_module(module)
                except Exception as e:
                    logger.error(f"unable to load {module_file}: {e}")
                    errors += 1
                    continue
                for attr in dir(module):
                    if attr.startswith("_"):
                        continue
                    func = getattr(module, attr)
                    if not isinstance(func, FunctionType) or not hasattr(func, "command"):
                        continue  # not a command
                    if func.__module__ != module_name:
                        continue  # imported
                    cmd = Command(f"{module_file.stem}*{attr}", func)
                    if cmd.command in self._commands:
                        logger.warning(f"command {cmd.command!r} from {cmd.name!r} shadows {self._commands[cmd.command].name!r}")
                    self._commands[cmd.command] = cmd
                    logger.debug(f"command {cmd.command!r} loaded from {cmd.name!r}")
        return errors

    def build_parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog="cyclac",
                description="cyclotomic numbers of order 2l² and the cyclotomic matrix cryptosystem")
        parser.add_argument("--verbose", "-v", action="store_true", help="log to stderr")
        parser.add_argument("--workers", type=int, default=None, help="threads for independent evaluations")
        subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
        subparsers.required = True
        for name in sorted(self._commands):
            self._commands[name].add_to(subparsers)
        return parser

    def process(self, argv: Optional[List[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
        """ parse argv and run the selected command; returns the exit code
        """
        out = sys.stdout if out is None else out
        err = sys.stderr if err is None else err
        parser = self.build_parser()
        try:
            args = parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2
        if args.workers is not None and args.workers < 1:
            err.write("cyclac: --workers must be positive\n")
            return 2
        try:
            get_config()
        except CyclacError as e:
            logger.error(f"bad environment: {e}")
            err.write(f"cyclac: {e}\n")
            return e.exit_code
        if args.verbose:
            enable_console("DEBUG")
        logger.info(f"cyclac {args.command}")
        return args.command_object.run(args, out, err)

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
