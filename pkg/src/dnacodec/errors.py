"""Exception types shared across the package."""

from __future__ import annotations


class DnaCodecError(Exception):
    """Base class for every error raised deliberately by this library."""


class ResourceLimitError(DnaCodecError):
    """A construction or search exceeded a configured cap.

    Raised instead of silently returning a wrong or partial answer whenever
    a worst-case-exponential step (subset construction, buffer-tracking
    search, path enumeration) outgrows its budget.  Callers can retry with a
    larger cap via the ``DNACODEC_STATE_CAP`` environment variable or the
    explicit ``state_cap``/``item_cap`` keyword arguments.
    """


class FormatError(DnaCodecError):
    """Malformed machine text, descriptor document, or regular expression.

    ``line`` is the 1-based line number of the offending input line when the
    source is a multi-line machine description, else ``None``.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ClassAssertionRefuted(DnaCodecError):
    """A caller-asserted transducer class was refuted by a bounded search.

    Deciders that rely on an undecidable side condition (input-altering /
    input-preserving) sanity-check the assertion on all short words first.
    Finding a refuting word means the requested algorithm would return
    garbage, so we stop hard rather than answer.  ``witness`` is the word
    that refutes the assertion.
    """

    def __init__(self, message: str, witness: str | None = None):
        super().__init__(message)
        self.witness = witness
