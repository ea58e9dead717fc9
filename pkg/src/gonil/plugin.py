from __future__ import annotations

from typing import TYPE_CHECKING

from gonil.cli.report import Report
from gonil.exceptions import GonilException

if TYPE_CHECKING:
    from collections.abc import Callable
    from typing import Any

    from gonil.gonil import GoNil


class PluginException(GonilException):
    def __init__(self, message: str, *, status: int = 3, errors: dict[str, Any] = {}):
        super().__init__(message, status=status, errors=errors)


class Plugin:
    """Base class for all plugins.

    This class provides a default implementation for plugin methods.
    Plugins can extend this class and override the methods as needed.
    """

    name: str

    def setup(self, manager: PluginManager):
        """Sets up the plugin with the given manager.

        This method is called when the plugin is registered. It checks
        if a plugin of the same type is already installed.

        Args:
            manager (PluginManager): The manager responsible for plugin lifecycle.

        Raises:
            PluginException: If the plugin is already installed.
        """
        if any(isinstance(plugin, self.__class__) for plugin in manager.plugins):
            raise PluginException(f"Plugin {self.name} already installed.")

    def before_handler(
        self, handler: Callable[..., Report], metadata: dict[str, Any]
    ) -> Callable[..., Report] | Report:
        """Modifies or wraps the command handler.

        Args:
            handler (Callable[..., Report]): The handler function.
            metadata (dict[str, Any]): The command metadata.

        Returns:
            Callable[..., Report] | Report: The handler, or a Report to
            short-circuit the command.
        """
        return handler

    def close(self):
        """Releases resources held by the plugin when it is unregistered."""
        pass


class PluginManager:
    """Keeps the plugins of an application and runs their hooks in order."""

    def __init__(self, app: GoNil):
        self.app = app
        self.plugins: list[Plugin] = []

    def register(self, plugin: Plugin):
        """Calls the plugin's setup and registers it.

        Args:
            plugin (Plugin): The plugin to register.
        """

        plugin.setup(self)
        self.plugins.append(plugin)

    def unregister(self, plugin: Plugin | str):
        """Closes and removes a plugin, given the object or its name."""

        if isinstance(plugin, Plugin):
            if plugin in self.plugins:
                plugin.close()
                self.plugins.remove(plugin)
            return

        p = next((p for p in self.plugins if p.name == plugin), None)

        if p is not None:
            p.close()
            self.plugins.remove(p)

        return

    def before_handler(
        self, handler: Callable[..., Report], metadata: dict[str, Any]
    ) -> Callable[..., Report] | Report:
        """Passes the handler through the plugins the command opted into.

        A command selects plugins by name in its metadata ``plugins`` list;
        ``"..."`` selects every plugin and ``"-name"`` excludes one.

        Args:
            handler (Callable[..., Report]): The handler function.
            metadata (dict[str, Any]): The command metadata.

        Returns:
            Callable[..., Report] | Report: The wrapped handler, or the
            first Report a plugin returned.
        """

        _handler = handler
        _allowed = metadata.get("plugins", [])
        for plugin in self.plugins:
            if f"-{plugin.name}" in _allowed or (
                "..." not in _allowed and plugin.name not in _allowed
            ):
                continue

            _handler = plugin.before_handler(_handler, metadata)
            if isinstance(_handler, Report):
                return _handler

        return _handler
