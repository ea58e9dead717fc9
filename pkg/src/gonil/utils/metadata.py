from collections.abc import Generator
from copy import deepcopy
from inspect import getmembers, ismethod
from types import MethodType
from typing import Any


def _get_command_methods(view: object, attr: str = "__metadata__"):
    return (
        method
        for _, method in getmembers(view, predicate=ismethod)
        if hasattr(method, attr)
    )


def extract_metadata(
    view: object,
) -> Generator[tuple[dict[str, Any], MethodType], None, None]:
    """Yields ``(metadata, bound method)`` for every command of a view.

    Methods come in ``getmembers`` order, i.e. sorted by attribute name, so
    the command list built from a view is stable.
    """
    for method in _get_command_methods(view):
        metadata = getattr(method, "__metadata__")

        yield deepcopy(metadata), method
