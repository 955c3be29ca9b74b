"""Nonexistence criteria and verification tools for perfect Lee codes.

Submodules: ``modular`` (number theory), ``criterion`` (the 2n^2+2n+1 test and
scans), ``lee`` (metric and spheres), ``codes`` (code representations and
perfectness), ``witness`` (homomorphism search), ``symfun`` (power-sum algebra),
``plotting`` and ``cli``.
"""

from .criterion import CriterionReport, ScanTable, Verdict, check_n, check_n_fast, scan
from .codes import CodeSpec, VerificationResult, construct_gw, verify
from .lee import enumerate_sphere, sphere_size
from .witness import Witness, search

__version__ = "0.1.0"
