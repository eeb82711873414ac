"""
Entry point for running the command-line tool from a source checkout.

Installed copies expose the same interface as ``regional-control`` and
``python -m regional_control``.
"""

import sys

from regional_control.cli import main

__all__ = ["main"]


if __name__ == "__main__":
    sys.exit(main())
