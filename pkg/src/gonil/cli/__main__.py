from __future__ import annotations

import sys
from typing import TYPE_CHECKING

from gonil import config as default_config
from gonil.cli.commands import VIEWS
from gonil.cli.router import Router
from gonil.contrib.plugins import GoEvidencePlugin
from gonil.gonil import GoNil

if TYPE_CHECKING:
    from collections.abc import Sequence
    from typing import Any


def create_app(config: Any = default_config) -> GoNil:
    """The application with every command view and the GO evidence plugin."""
    app = GoNil(config)
    router = Router()
    for view in VIEWS:
        router.add_view(view)
    app.register_router(router)
    app.register_plugin(GoEvidencePlugin())
    return app


def main(argv: Sequence[str] | None = None) -> int:
    return create_app().run(argv)


if __name__ == "__main__":
    sys.exit(main())
