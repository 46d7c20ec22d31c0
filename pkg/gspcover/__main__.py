"""CLI entry point for gspcover."""

import sys
from gspcover.cli.dispatcher import main

if __name__ == "__main__":
    sys.exit(main())
