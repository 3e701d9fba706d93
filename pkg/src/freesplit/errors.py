"""Exception types shared across the package."""


class FreesplitError(Exception):
    """Base class for all errors raised by freesplit."""


class FieldMismatch(FreesplitError, TypeError):
    """Two field elements from different coefficient fields were combined."""


class ArityMismatch(FreesplitError, ValueError):
    """Lengths of exponent vectors, points or module vectors disagree."""


class RingMismatch(FreesplitError, TypeError):
    """Objects living in different polynomial rings were combined."""


class ZeroPolynomial(FreesplitError, ValueError):
    """An operation that needs a nonzero polynomial received zero."""


class NotAField(FreesplitError, ArithmeticError):
    """A residue ring that was declared to be a field has a non-invertible element."""


class NotUnivariate(FreesplitError, ValueError):
    """A univariate-only routine was given a multivariate ring."""


class NotWellDefined(FreesplitError, ValueError):
    """A matrix does not define a homomorphism between the given modules."""


class NotAFunctional(FreesplitError, ValueError):
    """A row vector does not annihilate the relations of its module."""


class NotIso(FreesplitError, ValueError):
    """A morphism expected to be an isomorphism is not one."""


class NoFieldElementLeft(FreesplitError, ValueError):
    """Every element of a finite coefficient field was excluded."""


class Inconclusive(FreesplitError):
    """A randomized search exhausted its budget without a verified answer."""

    def __init__(self, message, stats=None):
        super().__init__(message)
        self.stats = dict(stats or {})


class CertificateError(FreesplitError, AssertionError):
    """A certificate failed to re-verify."""
