"""Error types carrying stable diagnostic codes.

Every error raised by the pipeline is a PneufabError with a code such as
E_SYNTAX or E_BED_EXCEEDED. The CLI prints ``str(err)`` as its single
diagnostic line.
"""

from typing import Optional


class PneufabError(ValueError):
    """Base error with a diagnostic code and optional source position."""

    def __init__(
        self,
        code: str,
        message: str,
        line: Optional[int] = None,
        column: Optional[int] = None,
    ):
        self.code = code
        self.message = message
        self.line = line
        self.column = column
        super().__init__(self._format())

    def _format(self) -> str:
        text = f"{self.code}: {self.message}"
        if self.line is not None:
            text += f" (line {self.line}"
            if self.column is not None:
                text += f", column {self.column}"
            text += ")"
        return text


class DesignError(PneufabError):
    """Design DSL parse or typing failure."""


class MaterialError(PneufabError):
    """Unknown or malformed material."""


class GeometryError(PneufabError):
    """Degenerate geometry handed to the kernel."""


class PatternError(PneufabError):
    """Pattern generation failure."""


class PatternInfeasible(PatternError):
    """Generator cannot satisfy the clearance rules.

    ``finding_code`` names the validation check the parameters would violate;
    it is part of the diagnostic, and the CLI reports the same failure as a
    finding under that code.
    """

    def __init__(self, message: str, finding_code: str = "PARAMS"):
        self.finding_code = finding_code
        super().__init__("E_PARAMS_INFEASIBLE", message)

    def _format(self) -> str:
        return f"{super()._format()} [{self.finding_code}]"


class ToolpathError(PneufabError):
    """Planning failure (bed size, unvalidated sheet, pulse timing)."""


class GCodeError(PneufabError):
    """G-code syntax, dialect or simulation failure."""


class EstimateError(PneufabError):
    """Estimator called for an unsupported family."""


class CliError(PneufabError):
    """File I/O or usage failure in the command-line frontend."""
