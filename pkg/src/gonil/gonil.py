from __future__ import annotations

import argparse
import contextlib
import logging
import sys
import traceback
from pathlib import Path
from typing import TYPE_CHECKING

from gonil import config as default_config
from gonil.__version__ import __version__
from gonil.bilinear import SignatureConvention
from gonil.cli.report import JSONReport, Report, ReportEnvelope
from gonil.cli.router import Router
from gonil.exceptions import GonilException
from gonil.plugin import PluginManager

if TYPE_CHECKING:
    from collections.abc import Callable, Sequence
    from typing import IO, Any

    from gonil.plugin import Plugin

logger = logging.getLogger(__name__)


class GoNil:
    """The command-line application: router, plugins and exception handlers.

    Args:
        config: A module or object whose upper-case attributes override the
            defaults in ``gonil.config``; read with ``getattr``.
    """

    def __init__(self, config: Any = default_config) -> None:
        self.router = Router()
        self.config = config
        self.exceptions: dict[type[BaseException], Callable[[Any], Report]] = {}
        self.plugin_manager = PluginManager(self)

        self.register_exception(Exception)(self._default_exception_handler)

    def setting(self, name: str, default: Any = None) -> Any:
        return getattr(self.config, name, getattr(default_config, name, default))

    def register_router(self, router: Router):
        self.router.merge(router)

    def register_exception(self, exc: type[BaseException]):
        def wrapper(func: Callable[..., Report]):
            self.exceptions[exc] = func
            return func

        return wrapper

    def register_plugin(self, plugin: Plugin):
        self.plugin_manager.register(plugin)

    def unregister_plugin(self, plugin: Plugin | str):
        self.plugin_manager.unregister(plugin)

    def build_parser(self) -> argparse.ArgumentParser:
        """One subparser per routed command, defaults drawn from the config."""
        parser = argparse.ArgumentParser(
            prog="gonil",
            description="Exact tools for geodesic-orbit Lorentz nilmanifolds.",
        )
        parser.add_argument("--version", action="version", version=__version__)
        parser.add_argument(
            "--log-level",
            default=self.setting("LOG_LEVEL", "WARNING"),
            choices=["DEBUG", "INFO", "WARNING", "ERROR"],
        )
        parser.add_argument(
            "--convention",
            default=None,
            choices=[c.value for c in SignatureConvention],
            help="Overrides the file's and the configured signature convention.",
        )
        subparsers = parser.add_subparsers(dest="command", required=True)
        for command in self.router.commands:
            _, metadata = self.router.dispatch(command)
            sub = subparsers.add_parser(
                command, aliases=metadata.get("aliases", []), help=metadata.get("help")
            )
            for arg in metadata.get("arguments", []):
                options = dict(arg["options"])
                name = options.pop("config", None)
                if name is not None:
                    options["default"] = self.setting(name, options.get("default"))
                sub.add_argument(*arg["flags"], **options)
        return parser

    def run(
        self,
        argv: Sequence[str] | None = None,
        stdout: IO[str] | None = None,
        stderr: IO[str] | None = None,
    ) -> int:
        """Parses ``argv``, runs the command and writes its report.

        Returns:
            int: The exit code: 0 pass, 1 property failure, 2 input error,
            3 internal error.
        """
        stdout = stdout or sys.stdout
        stderr = stderr or sys.stderr
        try:
            with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
                args = self.build_parser().parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        logging.basicConfig(
            level=args.log_level,
            stream=stderr,
            format="%(levelname)s %(name)s: %(message)s",
            force=True,
        )
        args.settings = self.config

        try:
            handler, metadata = self.router.dispatch(args.command)
            handler = self.plugin_manager.before_handler(handler, metadata)
            if isinstance(handler, Report):
                report = handler
            else:
                report = handler(args)
            if not isinstance(report, Report):
                raise TypeError("Handler must return a Report object.")
        except Exception as e:
            report = self._handle_exception(stderr, e)

        envelope = ReportEnvelope(
            report,
            command=args.command,
            input_bytes=_input_bytes(args),
            seed=getattr(args, "seed", None),
        )
        status, text = envelope.render()
        stdout.write(text)
        stdout.flush()
        return status

    def _handle_exception(self, stream: IO[str], exc: Exception) -> Report:
        handler = next(
            (self.exceptions[cls] for cls in type(exc).__mro__ if cls in self.exceptions),
            self.exceptions[Exception],
        )
        report = handler(exc)

        if not isinstance(exc, GonilException):
            stream.write(traceback.format_exc())
            stream.flush()

        return report

    def _default_exception_handler(self, exc: Exception) -> Report:
        if isinstance(exc, GonilException):
            body: dict[str, Any] = {"details": exc.message}
            if exc.errors:
                body = {"details": exc.message, "errors": exc.errors}
            return JSONReport(body, status=exc.status)
        logger.error("unhandled %s", type(exc).__name__)
        return JSONReport({"details": "Internal Error"}, status=3)


def _input_bytes(args: argparse.Namespace) -> bytes | None:
    path = getattr(args, "input", None)
    if path is None:
        return None
    try:
        return Path(path).read_bytes()
    except OSError:
        return None
