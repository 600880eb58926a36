"""Exception types shared across the toolkit."""


class ToolkitError(Exception):
    """Base class for every toolkit-specific error."""


class InvalidSize(ToolkitError):
    """A part size is zero or negative."""


class CapacityExceeded(ToolkitError):
    """A part size or product exceeds a configured bit-capacity guard."""


class IndexOutOfRange(ToolkitError, IndexError):
    """A vertex or edge index is outside the graph's parts."""


class AllOfOnePartDeleted(ToolkitError):
    """A vertex deletion would leave one side of the bipartition empty."""


class HypothesisViolated(ToolkitError):
    """The input does not meet a lemma's or construction's hypotheses."""


class LemmaFalsified(ToolkitError):
    """A lemma's guaranteed object could not be produced.

    This is the counterexample channel: the offending graph travels with the
    error so callers can archive it.
    """

    def __init__(self, message, graph=None, details=None):
        super().__init__(message)
        self.graph = graph
        self.details = details or {}


class NotConnected(ToolkitError):
    """An operation that requires a connected graph got a disconnected one."""


class InvalidSeedPath(ToolkitError):
    """A seed path is not a simple root-starting path of the graph."""


class BaseCaseViolated(ToolkitError):
    """The residual k-by-k graph of a certificate exceeds its edge bound."""


class MalformedCertificate(ToolkitError):
    """A certificate's step structure is inconsistent."""


class ParseError(ToolkitError):
    """A graph or certificate document is malformed."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"{message}, line {line}"
        super().__init__(message)
        self.line = line


class SearchTimeout(ToolkitError):
    """A search exceeded its node-expansion budget or wall-clock limit."""

    def __init__(self, message, budget=None, best_so_far=None):
        super().__init__(message)
        self.budget = budget
        self.best_so_far = best_so_far
