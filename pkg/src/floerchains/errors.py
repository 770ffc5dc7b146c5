"""Domain exceptions shared across the package.

Every exception carries a stable class name that the CLI reports verbatim,
so callers can dispatch on the name without parsing messages.
"""


class DomainError(Exception):
    """Base class for contract violations in the topology pipelines."""

    @property
    def name(self) -> str:
        return type(self).__name__


class NotCoprimeError(DomainError):
    """Two integers required to be coprime are not."""


class NotNormalizedError(DomainError):
    """A Laurent polynomial fails the p(1) = 1 or p(t) = p(1/t) normalization."""


class OddSignatureError(DomainError):
    """A signature argument that must be even is odd."""


class UnsupportedFiberCountError(DomainError):
    """Seifert data does not reduce to exactly three exceptional fibers."""


class InfiniteH1Error(DomainError):
    """First homology is infinite where a finite group is required."""


class EvenOrderError(DomainError):
    """First homology has even order where an odd order is required."""


class NotHomologyS1xS2Error(DomainError):
    """Seifert data does not describe a homology S^1 x S^2."""


class BadTwistMaskError(DomainError):
    """A relator sign mask is missing, multiple, or cohomologically trivial."""


class NeedsExplicitSignatureError(DomainError):
    """The knot family has no native signature routine; pass one explicitly."""


class FlatCobordismError(DomainError):
    """The product-equals-lcm-times-order divisibility condition fails."""


class InconsistentLkError(DomainError):
    """No admissible rank split is compatible with the given linking number."""


class NonIntegralAError(DomainError):
    """A torus signature is not divisible by 8; internal consistency failure."""
