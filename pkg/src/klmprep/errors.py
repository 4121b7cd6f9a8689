"""Exception hierarchy shared by all modules."""


class KlmError(Exception):
    """Base class for every error raised by klmprep."""


class ValidationError(KlmError, ValueError):
    """An argument lies outside its documented domain."""


class SizeError(KlmError, ValueError):
    """Register or spec size is out of range or mismatched."""


class QubitIndexError(KlmError, IndexError):
    """A qubit or amplitude index is out of range."""


class DegenerateSpecError(KlmError, ValueError):
    """A target spec cannot be built or split (e.g. all amplitudes zero)."""


class FeasibilityError(KlmError, ValueError):
    """The requested amplitude ratio is unreachable at the given gate phase."""
