#!/usr/bin/env python3
"""
quantumorbits - Main Entry Point

Unified entry point for the quantum algebra toolkit. It can:
1. Print and normalize in the FRT, SL_q and reflection equation algebras
2. Compute Hilbert and weight tables of nilcone and orbit quotients
3. Run the verification suites (Hecke, braid, Hopf, centrality, flatness, ...)
4. Check constant reflection equation solutions and build the Podles spheres

All arguments are handled by src/Cli/main.py; run with --help for the list.
"""

import sys
from pathlib import Path
from dotenv import load_dotenv

# Ensure the src directory is in the path
sys.path.insert(0, str(Path(__file__).parent))

load_dotenv()

from src.Cli.main import run  # noqa: E402


def main() -> int:
    """
    Main entry point for quantumorbits.
    Hands the command line to the CLI dispatcher and returns its exit code.
    """
    return run(sys.argv[1:])


if __name__ == "__main__":
    sys.exit(main())
