# run_local.py

"""
Local launcher.

    python run_local.py                    # verify all suites on 2x2, text output
    python run_local.py enumerate --m 2 --n 2 --format dot
"""

import sys

from src.cli import main


if __name__ == "__main__":
    argv = sys.argv[1:] or ["verify", "--m", "2", "--n", "2", "--suite", "all", "--format", "text"]
    sys.exit(main(argv))
