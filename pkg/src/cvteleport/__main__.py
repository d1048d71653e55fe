"""Allow ``python -m cvteleport`` as an alias for the console script."""

from .cli import run

run()
