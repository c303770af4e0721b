#!/usr/bin/env python3
"""Run the full theorem-check suite and the identity audit; exit non-zero if
any check produced a counterexample."""

import sys

from polydgamma.cli import main

code = main(["check", "--suite", "all"])
main(["audit"])
sys.exit(code)
