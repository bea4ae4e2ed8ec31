"""Exception hierarchy.

Every error raised on purpose by the package derives from
:class:`MultistructError`.  The CLI maps the three families below onto
process exit codes (parse -> 2, math domain -> 3, falsification -> 4).
"""


class MultistructError(Exception):
    exit_code = 3


# -- arithmetic ---------------------------------------------------------------

class DivisionByZero(MultistructError, ZeroDivisionError):
    pass


class FieldMismatch(MultistructError, ValueError):
    pass


class VarSetMismatch(MultistructError, ValueError):
    pass


class ZeroPolynomial(MultistructError, ValueError):
    pass


class AmbientMismatch(MultistructError, ValueError):
    pass


class AlgebraMismatch(MultistructError, ValueError):
    pass


# -- math domain (exit code 3) --------------------------------------------------

class MathDomainError(MultistructError):
    """The input does not describe a multiple structure on a point."""

    exit_code = 3


class NotZeroDimensional(MathDomainError):
    pass


class NotLocal(MathDomainError):
    pass


class ZeroRing(MathDomainError):
    pass


class GenerationExhausted(MultistructError):
    exit_code = 3


# -- bug traps -------------------------------------------------------------------

class NotWellDefined(MultistructError):
    """An induced map does not respect the given submodules."""


class InternalInvariantViolation(MultistructError):
    pass


class DegenerateTarget(MultistructError):
    pass


# -- input (exit code 2) ----------------------------------------------------------

class InputError(MultistructError):
    exit_code = 2


class ParseError(InputError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class UnknownVariable(ParseError):
    pass


class InvalidField(ParseError):
    pass


# -- falsification (exit code 4) ---------------------------------------------------

class FalsificationEvent(MultistructError):
    """A claim that must hold under its hypotheses failed on some input."""

    exit_code = 4

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness or {}
