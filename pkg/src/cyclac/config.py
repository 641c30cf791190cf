# -*- coding: utf-8 -*-

from cyclac.errors import ParamError
from cyclac.meta import freeze, Var
from typing import Mapping, Optional
import logging
import os
import pathlib


""" runtime configuration and logging setup

Settings come from the environment (CYCLAC_*) and can be overridden per invocation by the
command line flags.
"""


# module setup {{{

ROOT = pathlib.Path(__file__).parent

LOG_FORMAT = "%(asctime)s %(levelname)-8s %(message)s"
LOG_DATEFMT = "%Y-%m-%d  %H:%M:%S"

# }}}


def _positive_int(environ: Mapping[str, str], name: str, default: int) -> int:
    raw = environ.get(name)
    if raw is None or raw == "":
        return default
    raw = raw.strip()
    if not (raw.isascii() and raw.isdigit()) or int(raw) < 1:
        raise ParamError(f"{name} must be a positive integer, got {raw!r}")
    return int(raw)


@freeze
class Config:
    """
    Settings

    - log_dir: directory for cyclac.log
    - log_level: level name for the file log
    - workers: threads used for independent evaluations (1 = sequential)
    - keygen_retries: how many public generators keygen tries before giving up on singularity
    """

    log_dir = Var(ROOT/"logs")
    log_level = Var("DEBUG")
    workers = Var(1)
    keygen_retries = Var(16)

    def __init__(self) -> None:
        if logging.getLevelName(str(self.log_level).upper()) == f"Level {str(self.log_level).upper()}":
            raise ParamError(f"unknown log level {self.log_level!r}")
        if not isinstance(self.workers, int) or self.workers < 1:
            raise ParamError(f"workers must be a positive integer, got {self.workers!r}")
        if not isinstance(self.keygen_retries, int) or self.keygen_retries < 1:
            raise ParamError(f"keygen_retries must be a positive integer, got {self.keygen_retries!r}")
        self.log_dir = pathlib.Path(self.log_dir)

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Config":
        """ build a Config from CYCLAC_LOG_DIR, CYCLAC_LOG_LEVEL, CYCLAC_WORKERS and
            CYCLAC_KEYGEN_RETRIES; unset variables keep the defaults
        """
        if environ is None:
            environ = os.environ
        kwargs = {}
        if environ.get("CYCLAC_LOG_DIR"):
            kwargs["log_dir"] = pathlib.Path(environ["CYCLAC_LOG_DIR"])
        if environ.get("CYCLAC_LOG_LEVEL"):
            kwargs["log_level"] = environ["CYCLAC_LOG_LEVEL"].upper()
        kwargs["workers"] = _positive_int(environ, "CYCLAC_WORKERS", 1)
        kwargs["keygen_retries"] = _positive_int(environ, "CYCLAC_KEYGEN_RETRIES", 16)
        return cls(**kwargs)


_config: Optional[Config] = None


def get_config() -> Config:
    """ the environment's Config, read on first use

        ParamError if a CYCLAC_* variable is malformed; nothing is cached then, so every call
        reports it again
    """
    global _config
    if _config is None:
        _config = Config.from_env()
    return _config


# logging {{{

_handler: Optional[logging.Handler] = None


def _file_handler() -> logging.Handler:
    """ one shared handler for every module logger; NullHandler if the log dir is unusable
    """
    global _handler
    if _handler is None:
        try:
            config = get_config()
        except ParamError:
            config = Config()
        try:
            config.log_dir.mkdir(parents=True, exist_ok=True)
            _handler = logging.FileHandler(config.log_dir/"cyclac.log")
            _handler.setLevel(config.log_level)
            _handler.setFormatter(logging.Formatter(LOG_FORMAT, LOG_DATEFMT))
        except OSError:
            _handler = logging.NullHandler()
    return _handler


def get_logger(name: str) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.setLevel(logging.DEBUG)
    handler = _file_handler()
    if handler not in logger.handlers:
        logger.addHandler(handler)
    return logger


def enable_console(level: str = "INFO") -> None:
    """ mirror package log records to stderr
    """
    package = logging.getLogger("cyclac")
    for handler in package.handlers:
        if getattr(handler, "_cyclac_console", False):
            handler.setLevel(level)
            return
    ch = logging.StreamHandler()
    ch._cyclac_console = True
    ch.setLevel(level)
    ch.setFormatter(logging.Formatter("%(levelname)s %(message)s"))
    package.addHandler(ch)

# }}}

# vim: foldmethod=marker foldmarker={{{,}}} foldlevel=0:
