"""Exception types shared across the package.

Everything raised on purpose derives from HfgError so the CLI can map
library failures to exit code 2 (input / domain / budget problems) while
verification failures are reported through VerificationReport instead of
exceptions.
"""

from __future__ import annotations


class HfgError(Exception):
    """Base class for all deliberate errors."""


class ParseError(HfgError):
    """Malformed polynomial, point, ideal, or grid input."""


class BlockMismatchError(HfgError):
    """Operands live on different variable blocks."""


class DomainError(HfgError):
    """Operation applied outside its mathematical domain."""


class GridError(HfgError):
    """Point configuration does not form a valid grid."""


class BudgetExceededError(HfgError):
    """A computation was refused because it exceeds the configured budget."""
