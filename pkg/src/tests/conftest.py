"""
Pytest configuration file for providing fixtures used across multiple test files.
"""

import os
import sys
import pytest
from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Add the project root directory to sys.path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..')))

from src.BraidedMatrices import rea_presentation  # noqa: E402
from src.FreeAlgebra import GeneratorId, NcPolynomial  # noqa: E402
from src.QuantumMatrices import frt_presentation  # noqa: E402
from src.QuantumSL import sl_presentation  # noqa: E402


@pytest.fixture(scope="session")
def frt2():
    """F_q(M) for 2 x 2 matrices."""
    return frt_presentation(2)


@pytest.fixture(scope="session")
def rea2():
    """L_q(M) for 2 x 2 braided matrices."""
    return rea_presentation(2)


@pytest.fixture(scope="session")
def sl2():
    """F_q(SL(2))."""
    return sl_presentation(2)


@pytest.fixture
def gen():
    """
    Fixture returning a helper that builds the polynomial of a single generator.

    Returns:
        Callable taking (presentation, family, row, col)
    """
    def build(presentation, family: str, row: int, col: int = None) -> NcPolynomial:
        return presentation.generator(GeneratorId(family, row, col))

    return build
