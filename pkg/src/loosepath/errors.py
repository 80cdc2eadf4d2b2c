"""Exception hierarchy shared by all modules.

Two families matter for exit codes: InputError covers rejected or
malformed inputs, FalsificationWitness covers internal contradictions
that should be impossible on lawful inputs and are surfaced loudly
instead of being patched over.
"""

from __future__ import annotations


class InputError(ValueError):
    """Base class for rejected inputs and violated preconditions."""


class DuplicateVertex(InputError):
    pass


class SameVertex(InputError):
    pass


class OrderTooSmall(InputError):
    pass


class FormatError(InputError):
    pass


class InvalidColoring(InputError):
    pass


class NotPathFree(InputError):
    """Host was required to be free of the loose path of length three.

    Carries the offending embedding in ``witness``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NoGadgetPresent(InputError):
    pass


class PairDegreeTooLow(InputError):
    pass


class UncoloredTriple(InputError):
    pass


class ModelInvalid(InputError):
    pass


class FalsificationWitness(RuntimeError):
    """An internal consistency assertion failed.

    Raised when a quantity that is guaranteed by the library's invariants
    (component edge budgets, residual pattern-freeness, counting bounds)
    comes out wrong.  Never raised on lawful inputs in a correct build;
    carries enough detail to reconstruct the contradiction.
    """

    def __init__(self, message, detail=None):
        super().__init__(message)
        self.detail = detail


class MissingGadgetEdge(FalsificationWitness):
    pass
