class ListColoringError(Exception):
    """Base class for every error raised by the solver library"""


class GraphError(ListColoringError):
    """Raised when a graph is built from invalid vertices or edges"""


class InstanceError(ListColoringError):
    """Raised when a list assignment does not fit its graph or color universe"""


class InstanceParseError(ListColoringError):
    """Raised when an instance file does not follow the lkc grammar"""

    def __init__(self, message, line_number=None):
        self.message = message
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class PreconditionViolation(ListColoringError):
    """A color class has a component that is not a clique"""

    def __init__(self, color, component):
        self.color = color
        self.component = tuple(component)
        super().__init__(
            f"color {color}: component {list(self.component)} is not a clique "
            f"(instance still has a common-color induced P3)"
        )


class ValidationSkipped(ListColoringError):
    """The exact packing search refused to run on a graph above the cap"""

    def __init__(self, n, cap):
        self.n = n
        self.cap = cap
        super().__init__(f"validation skipped: n={n} exceeds cap {cap}")


class RejectionBudgetExceeded(ListColoringError):
    """Rejection sampling gave up before finding an acceptable graph"""

    def __init__(self, draws):
        self.draws = draws
        super().__init__(
            f"no rP3-free graph found in {draws} draws; lower --density or raise --budget"
        )


class CertificateError(ListColoringError):
    """An extracted coloring failed re-verification"""


class OracleDisagreement(ListColoringError):
    """The solver and the backtracking oracle returned different verdicts"""

    def __init__(self, solver_admissible, oracle_admissible):
        self.solver_admissible = solver_admissible
        self.oracle_admissible = oracle_admissible
        super().__init__(
            f"solver says admissible={solver_admissible}, "
            f"oracle says admissible={oracle_admissible}"
        )
