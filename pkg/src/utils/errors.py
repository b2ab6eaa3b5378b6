"""
Error hierarchy for isoform
Every failure the library signals derives from IsoformError
"""

from typing import Optional


class IsoformError(Exception):
    """Base class for all library errors"""


class ConfigurationError(IsoformError):
    """Invalid configuration value"""


# Linear algebra

class ShapeMismatch(IsoformError):
    """Matrix or vector shapes are incompatible"""


class DimensionMismatch(IsoformError):
    """Ambient dimensions of two objects differ"""


# Root data

class InvalidTypeError(IsoformError):
    """Unknown family or rank out of bounds"""


class RootNotInSystem(IsoformError):
    """A supplied vector is not a root of the ambient root system"""


class CapExceeded(IsoformError):
    """Group order exceeds the enumeration cap"""

    def __init__(self, order: int, cap: int, label: str = ""):
        self.order = order
        self.cap = cap
        self.label = label
        what = f" for {label}" if label else ""
        super().__init__(f"group order {order}{what} exceeds enumeration cap {cap}")


# Pair construction

class PairResolutionError(IsoformError):
    """A pair recipe cannot be resolved"""


class NotDiagramAutomorphism(PairResolutionError):
    """Permutation does not preserve the Cartan matrix"""


class UnsupportedFold(PairResolutionError):
    """Diagram automorphism outside the supported fold table"""


class ZeroDirection(PairResolutionError):
    """Circle direction is the zero vector"""


class RankDeficient(PairResolutionError):
    """Equal-rank recipe does not fill the Cartan subalgebra"""


class NotClosedSubsystem(PairResolutionError):
    """Root set is not closed under addition inside G, so it spans no subalgebra"""


# Cohomology

class CohomologyError(IsoformError):
    """Degree bookkeeping failed"""


class UnsupportedPair(CohomologyError):
    """Pair is outside the supported constructions"""


class MultisetNotContained(CohomologyError):
    """A degree multiset is not contained in another"""


class NonIntegerProduct(CohomologyError):
    """Weil image product is not an integer"""


class SizeMismatch(CohomologyError):
    """Degree multiset sizes are inconsistent"""


class SubspaceMismatch(CohomologyError):
    """Two pairs do not share G or the Cartan subspace of K"""


# Formality

class FormalityError(IsoformError):
    """Verdict computation failed"""


class NonIntegralComponents(FormalityError):
    """|H| is not divisible by |W(K)|"""


class InternalInconsistency(FormalityError):
    """Two independent routes to the same fact disagree"""


# Documents

class SpecDocumentError(IsoformError):
    """Pair-spec document failed to parse or validate"""

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        self.line = line
        self.column = column
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)
