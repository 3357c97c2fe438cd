"""Exception hierarchy shared by every module."""


class BottleneckTreeError(Exception):
    """Base class for all errors raised by this package."""


class DegenerateAngle(BottleneckTreeError, ValueError):
    pass


class DuplicatePoints(BottleneckTreeError, ValueError):
    pass


class BadParams(BottleneckTreeError, ValueError):
    pass


class NotALeaf(BottleneckTreeError, ValueError):
    pass


class NormalizationFailed(BottleneckTreeError):
    """No equal-weight swap could lower a vertex of degree >= 6."""


class PreconditionViolated(BottleneckTreeError):
    pass


class LemmaViolated(BottleneckTreeError):
    """No angle slot satisfies the bound that holds for every EMST vertex."""


class GuaranteeViolated(BottleneckTreeError):
    """An edge added by a transform is longer than the proven bound allows."""


class BudgetExceeded(BottleneckTreeError):
    pass
