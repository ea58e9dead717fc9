from __future__ import annotations

from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from collections.abc import Callable
    from typing import Any


def argument(*flags: str, **options: Any) -> dict[str, Any]:
    """Describes one command-line argument of a command.

    ``options`` are passed to ``argparse``; the extra option ``config``
    names a configuration attribute whose value becomes the default.
    """
    return {"flags": list(flags), "options": options}


def metadata(
    *,
    command: str,
    arguments: list[dict[str, Any]] = [],
    plugins: list[str] = [],
    aliases: list[str] = [],
    **options,
):
    """Decorator for adding metadata to a command handler.

    Args:
        command (str): The subcommand name the handler answers to.
        arguments (list[dict[str, Any]], optional): Arguments built with
            ``argument``. Defaults to [].
        plugins (list[str], optional): Plugins to run around the handler;
            ``"..."`` selects all, ``"-name"`` excludes one. Defaults to [].
        aliases (list[str], optional): Other names the subcommand answers to.
            Defaults to [].
        **options: Additional metadata, e.g. ``help``.

    Returns:
        Callable[..., Any]: The handler, unchanged apart from its metadata.
    """

    def inner(func: Callable[..., Any]) -> Callable[..., Any]:
        metadata = {
            "command": command,
            "arguments": arguments,
            "plugins": plugins,
            "aliases": aliases,
            **options,
        }
        setattr(func, "__metadata__", metadata)
        return func

    return inner
