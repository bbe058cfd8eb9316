#!/usr/bin/env python3
"""Recompute the bundled twelve-row example table from degree data alone and
compare against the recorded shifts.  Equivalent to `gorenstein-kit table`."""

import sys

from gorenstein_kit.cli import main

if __name__ == "__main__":
    sys.exit(main(["table", *sys.argv[1:]]))
