"""Exception types shared across the package."""


class GkzError(Exception):
    """Base class for all package errors."""


class NotFullRank(GkzError):
    """Matrix rows are linearly dependent."""


class LatticeNotSpanned(GkzError):
    """Columns generate a proper sublattice of the integer lattice."""


class NoXi(GkzError):
    """No rational row vector pairs to 1 with every column."""


class NoSuchBlockStructure(GkzError):
    """No 0/1 partition rows with the requested block count exist."""


class UnknownName(GkzError):
    """Catalog name not recognized."""


class DegenerateCone(GkzError):
    """Cone spanned by the columns has no facet description."""


class TooLarge(GkzError):
    """Enumeration refused because the instance exceeds the supported size."""


class ConfigMismatch(GkzError):
    """Operands belong to different point configurations."""


class DimensionMismatch(GkzError):
    """Vector or cycle length does not match the expected dimension."""


class LeavesConfiguration(GkzError):
    """A substitution produces a monomial outside the configuration."""


class NotNegativeInteger(GkzError):
    """Parameter slot is not a negative integer, so no finite expansion exists."""


class SingularOnCycle(GkzError):
    """Integrand vanishes or is ill-defined somewhere on the requested cycle."""


class NotConverged(GkzError):
    """Iterative evaluation failed to reach the requested tolerance."""


class PoleInC(GkzError):
    """Lower parameter of a hypergeometric series is a nonpositive integer."""


class OutOfDomain(GkzError):
    """Arguments fall outside every implemented convergence region."""


class PoleInGamma(GkzError):
    """log-gamma evaluated at a nonpositive integer."""


class UnsupportedParameters(GkzError):
    """Operation is only defined for a restricted parameter range."""


class FitUnstable(GkzError):
    """Fitted proportionality constant varies beyond tolerance across samples."""


class ParseError(GkzError):
    """Input file or literal could not be parsed."""


class UsageError(GkzError):
    """Command line invoked with inconsistent or missing arguments."""


class IoError(GkzError):
    """Report could not be written."""


class BranchAmbiguityWarning(UserWarning):
    """A power of a negative real base was taken on its principal branch."""
