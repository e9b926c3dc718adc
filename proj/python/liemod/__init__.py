"""Exact O-operators, ON-structures, twilled Lie algebras and generalized complex structures."""

from ._liemod import *  # noqa: F401,F403
from ._liemod import LiemodError, run_cli, validate_text  # noqa: F401
