"""Exception hierarchy shared by all gropenorm modules.

Domain errors (bad mathematical input, violated preconditions) are kept
separate from parse errors so the command line tool can map them to
distinct exit codes.
"""


class DomainError(ValueError):
    """A mathematically invalid input or violated precondition."""


class GropeValidationError(DomainError):
    """An operation was handed a grope that fails structural validation."""

    def __init__(self, report):
        self.report = report
        super().__init__("invalid grope: " + "; ".join(str(v) for v in report.violations))


class AlexanderRootError(DomainError):
    """A signature was requested at a root of the Alexander polynomial."""


class InconsistentEvidenceError(DomainError):
    """Bound evidence produced a lower bound exceeding an upper bound."""

    def __init__(self, lower_value, lower_evidence, upper_value, upper_evidence):
        self.lower_value = lower_value
        self.lower_evidence = lower_evidence
        self.upper_value = upper_value
        self.upper_evidence = upper_evidence
        super().__init__(
            f"inconsistent evidence: lower bound {lower_value} from "
            f"[{lower_evidence.describe()}] exceeds upper bound {upper_value} "
            f"from [{upper_evidence.describe()}]"
        )


class ParseError(Exception):
    """A text input file could not be parsed; carries file and line info."""

    def __init__(self, message, filename=None, line=None):
        self.filename = filename
        self.line = line
        where = ""
        if filename is not None:
            where = f"{filename}:"
        if line is not None:
            where += f"{line}:"
        if where:
            where += " "
        super().__init__(where + message)
