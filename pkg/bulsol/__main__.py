#!/usr/bin/env python3
# -*- coding: utf-8 -*-

#  bulsol - Laboratory for p-random q-proportion Bulgarian solitaire
#  Copyright (C) 2026  The bulsol developers

#  This program is free software: you can redistribute it and/or modify
#  it under the terms of the GNU General Public License as published by
#  the Free Software Foundation, either version 3 of the License, or
#  (at your option) any later version.
#
#  This program is distributed in the hope that it will be useful,
#  but WITHOUT ANY WARRANTY; without even the implied warranty of
#  MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#  GNU General Public License for more details.
#
#  You should have received a copy of the GNU General Public License
#  along with this program.  If not, see <http://www.gnu.org/licenses/>.

""" Entry point of ``bulsol <command> ...``; the commands are the ``bs*`` scripts. """

import sys
from typing import Callable, Dict, Final, List, Optional

from .__version__ import __version__
from .scripts import bsexact, bsoracle, bsregimes, bssimulate

COMMANDS: Final[Dict[str, Callable[[Optional[List[str]]], None]]] = {
    "simulate": bssimulate.main,
    "exact": bsexact.main,
    "oracle": bsoracle.main,
    "regimes": bsregimes.main,
}

USAGE: Final = "usage: bulsol [--version] {{{}}} ...".format(",".join(COMMANDS))


# Main program
def main(argv: Optional[List[str]] = None) -> None:
    argv = sys.argv[1:] if argv is None else argv
    if not argv or argv[0] in ("-h", "--help"):
        print("[bulsol=={}]: Laboratory for p-random q-proportion Bulgarian solitaire.".format(__version__))
        print(USAGE)
        sys.exit(0)
    if argv[0] == "--version":
        print(__version__)
        sys.exit(0)
    command = COMMANDS.get(argv[0])
    if command is None:
        print(USAGE, file=sys.stderr)
        print("bulsol: error: unknown command {!r}".format(argv[0]), file=sys.stderr)
        sys.exit(2)
    command(argv[1:])


if __name__ == "__main__":
    main()
