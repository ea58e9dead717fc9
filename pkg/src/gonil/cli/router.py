from __future__ import annotations

from collections.abc import Callable
from typing import Any

from gonil.exceptions import CommandNotFound
from gonil.utils import extract_metadata


class Node:
    def __init__(self, command: str, handler: Callable[..., Any], metadata: dict[str, Any], view: Any):
        self.command = command
        self.handler = handler
        self.metadata = metadata
        self.view = view


class Router:
    """A router mapping subcommand names, and their aliases, to view handlers."""

    def __init__(self) -> None:
        self.nodes: dict[str, Node] = {}
        self.aliases: dict[str, str] = {}

    def _claim(self, name: str, owner: Any, action: str):
        taken = self.nodes.get(self.aliases.get(name, name))
        if taken is not None:
            raise RuntimeError(
                f"Conflicting commands during {action} of "
                f"{taken.view.__class__.__name__} "
                "and "
                f"{owner.__class__.__name__}"
            )

    def add_view(self, view: object | type):
        """Registers every decorated handler of a view.

        Args:
            view: The view object or class to register. Classes are
                instantiated without arguments.

        Raises:
            RuntimeError: If a command name or alias is already taken.
        """
        if type(view) is type:
            view = view()

        for metadata, handler in extract_metadata(view):
            command = metadata["command"]
            aliases = list(metadata.get("aliases", []))
            for name in (command, *aliases):
                self._claim(name, view, "registration")
            self.nodes[command] = Node(command, handler, metadata, view)
            for alias in aliases:
                self.aliases[alias] = command

    def dispatch(self, command: str) -> tuple[Callable[..., Any], dict[str, Any]]:
        """Finds the handler for a subcommand or one of its aliases.

        Args:
            command: The subcommand name.

        Returns:
            A tuple of the handler and its metadata.

        Raises:
            CommandNotFound: If no view registered the command.
        """
        node = self.nodes.get(self.aliases.get(command, command))
        if node is None:
            raise CommandNotFound(errors={"command": command, "known": self.commands})
        return node.handler, node.metadata

    @property
    def commands(self) -> list[str]:
        return sorted(self.nodes)

    def merge(self, other_router: Router):
        """Merges the commands and aliases of another router into this one.

        Raises:
            RuntimeError: If both routers define the same name.
        """
        for command, other in other_router.nodes.items():
            for name in (command, *other.metadata.get("aliases", [])):
                self._claim(name, other.view, "merge")
            self.nodes[command] = other
        self.aliases.update(other_router.aliases)
