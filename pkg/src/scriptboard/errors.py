"""Exception types shared across the pipeline.

InputError maps to CLI exit code 1 (bad user input), ContractViolation to
exit code 2 (an internal invariant or caller contract was broken).
"""


class ScriptboardError(Exception):
    pass


class InputError(ScriptboardError):
    pass


class ContractViolation(ScriptboardError):
    pass


class ParseFileError(InputError):
    """Malformed interchange file; carries 1-based line number."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        loc = ""
        if line is not None:
            loc = f" (line {line}" + (f", column {column}" if column is not None else "") + ")"
        super().__init__(message + loc)


class TreeError(ContractViolation):
    """Illegal dependency-tree surgery (cut root, cycle, unknown id)."""
