"""Exception hierarchy shared by every module in the package."""


class DominionError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(DominionError):
    """Malformed edge-list text or family-spec string."""


class EmptyTreeError(DominionError):
    """Zero vertices were declared; trees must have at least one vertex."""


class NotATreeError(DominionError):
    """The input is a graph but not a tree (cycle, disconnection, duplicate
    edge, self-loop, duplicate label, or undeclared edge endpoint)."""


class UnknownVertexError(DominionError):
    """A vertex label does not occur in the tree."""


class InvalidParameterError(DominionError):
    """A family parameter is out of range or inconsistent with its kind."""


class NotALeafError(DominionError):
    """A vertex slated for deletion has degree greater than one."""


class WouldBeEmptyError(DominionError):
    """A deletion would remove every vertex."""


class NoClosedFormError(DominionError):
    """The requested family has no closed-form evaluation."""


class TooLargeError(DominionError):
    """The tree exceeds the exhaustive-search size cap."""


class NotALevelLeafError(DominionError):
    """A label is not a bottom-level leaf of the complete binary tree."""


class MismatchError(DominionError):
    """Two independent computation paths disagree; signals an implementation bug."""
