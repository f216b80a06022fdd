"""Shared exception types.

Two failure modes are distinguished throughout the package:

* ``PreconditionError`` — the caller violated a documented precondition
  (bad parameters, size caps, singular matrices ...).  The CLI maps these
  to exit code 3.
* ``IndeterminateError`` — a computation ran out of budget and refuses to
  guess.  Indeterminate results are a first-class outcome: they are
  reported, never silently resolved.
"""


class PreconditionError(ValueError):
    """A documented precondition of an operation was violated."""


class IndeterminateError(RuntimeError):
    """A bounded search ended without a provable answer."""
