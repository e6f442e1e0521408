"""Exception types shared across the package.

Every failure the library can signal deliberately (as opposed to a plain
bug) gets its own class so callers can match on meaning rather than on
message strings.
"""


class GslError(Exception):
    """Base class for all deliberate gsl failures."""


class DomainError(GslError, ValueError):
    """An input is outside the documented domain of an operation
    (zero polynomial, composite modulus, non-monic where monic is required,
    p = 2 where an odd prime is required, ...)."""


class NotSeparable(GslError):
    """A polynomial required to be squarefree/separable is not."""


class WildOrIrregular(GslError):
    """The p-adic oracle met wild ramification (p divides a candidate
    ramification index) or a configuration outside its certified scope
    (fractional-slope side with a repeated residual factor).  Callers must
    treat the local invariants as unknown, never guess."""


class PrecisionExhausted(GslError):
    """Internal: the working p-adic precision was insufficient to certify a
    step.  The oracle retries once at doubled precision before giving up."""


class NonUniform(GslError):
    """Local invariants that must be uniform across factors (for a Galois
    input) are not: the input is not Galois over Q, or a bug."""


class NonUniformRamification(NonUniform):
    """Distinct expansion cycles at one point of the line disagree on the
    ramification index: the cover is not Galois (or not regular)."""


class UnstableResidueField(GslError):
    """The coefficient field of a series expansion was still growing too
    close to the requested precision; recompute with higher precision."""


class HypothesisViolation(GslError):
    """A documented precondition of the prediction machinery fails for this
    input (e.g. the meeting prime divides the constant coefficient of a
    branch locus), so the prediction contract does not apply."""


class MeetingUniquenessError(GslError):
    """More than one branch point is met at the same (t0, p): p should have
    been in the conservative bad set; refusing to predict."""


class ChartMixing(GslError, ValueError):
    """Approximation targets mix the finite chart with the chart at
    infinity; no single rational point satisfies both."""


class SchemaError(GslError, ValueError):
    """A cover description file does not satisfy the documented schema."""
