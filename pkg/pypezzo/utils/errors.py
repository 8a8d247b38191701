class pezzoError(Exception):
    """
    Just making it more clear where the error comes from
    """

    pass


class invalidModulus(pezzoError):
    """
    Raised when a modulus is outside the domain of an operation.
    The Jacobi symbol only exists for odd positive moduli.
    """

    def __init__(self, modulus: int, reason: str = "must be odd and positive"):
        self.modulus = modulus
        self.reason = reason
        super().__init__("Invalid modulus {}: {}".format(modulus, reason))

    def __repr__(self):
        return "Invalid modulus encountered.\nModulus: {}\nReason: {}".format(
            self.modulus, self.reason
        )


class nonCoprime(pezzoError):
    """
    Raised when two moduli that must be coprime share a factor.
    """

    def __init__(self, m: int, n: int):
        self.m = m
        self.n = n
        super().__init__("Moduli {} and {} are not coprime.".format(m, n))

    def __repr__(self):
        return "Moduli {} and {} share a common factor.".format(self.m, self.n)


class domainError(pezzoError):
    """
    Raised when an input lies outside the domain of an operation, e.g. the square root of a negative integer.
    """

    def __init__(self, value, operation: str):
        self.value = value
        self.operation = operation
        super().__init__("{} is outside the domain of {}.".format(value, operation))

    def __repr__(self):
        return "Domain error in {}.\nValue: {}".format(self.operation, self.value)


class malformedForm(pezzoError):
    """
    Raised when a quartic form description cannot be turned into a form.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)

    def __repr__(self):
        return "Malformed form description.\nMessage: {}".format(self.message)


class overflowError(pezzoError):
    """
    Raised when a value exceeds the integer width declared for a computation.
    """

    def __init__(self, value: int, bits: int):
        self.value = value
        self.bits = bits
        super().__init__("|{}| does not fit in {} signed bits.".format(value, bits))

    def __repr__(self):
        return "Overflow beyond the declared width.\nBits: {}\nValue: {}".format(
            self.bits, self.value
        )


class budgetExceeded(pezzoError):
    """
    Raised when an exhaustive computation is requested beyond its configured budget.
    Budgets live in the settings dictionary of each subpackage and can be raised by the caller.
    """

    def __init__(self, operation: str, size: int, budget: int):
        self.operation = operation
        self.size = size
        self.budget = budget
        super().__init__(
            "{} requested at size {} but the budget is {}.".format(operation, size, budget)
        )

    def __repr__(self):
        return "Budget exceeded in {}.\nRequested: {}\nBudget: {}".format(
            self.operation, self.size, self.budget
        )


class degeneratePlan(pezzoError):
    """
    Raised when a sieve plan ends up with an empty prime window.
    """

    def __init__(self, message: str):
        self.message = message
        super().__init__(message)

    def __repr__(self):
        return "Degenerate sieve plan.\nMessage: {}".format(self.message)


class inadmissiblePlan(pezzoError):
    """
    Raised when a bound is requested from a plan that fails P2 >= C log B or 10 P2 <= P1.
    """

    def __init__(self, B: int, P1: float, P2: float, reasons: list):
        self.B = B
        self.P1 = P1
        self.P2 = P2
        self.reasons = reasons
        super().__init__(
            "Plan for B={} (P1={:.4g}, P2={:.4g}) is inadmissible: {}. Use --force to run it anyway.".format(
                B, P1, P2, "; ".join(reasons)
            )
        )

    def __repr__(self):
        return "Inadmissible plan.\nB: {}\nReasons: {}".format(self.B, self.reasons)


class quadratureError(pezzoError):
    """
    Raised when adaptive quadrature cannot reach the requested tolerance.
    The achieved error estimate is kept so callers can decide to relax the tolerance.
    """

    def __init__(self, achieved: float, target: float, frequency: float = None):
        self.achieved = achieved
        self.target = target
        self.frequency = frequency
        super().__init__(
            "Quadrature reached {:.3e} but {:.3e} was requested (frequency {}).".format(
                achieved, target, frequency
            )
        )

    def __repr__(self):
        return "Quadrature did not converge.\nAchieved: {}\nTarget: {}".format(
            self.achieved, self.target
        )


class truncationError(pezzoError):
    """
    Raised when the outermost frequency shell of a Poisson dual sum is not negligible.
    """

    def __init__(self, truncation: int, tail: float, rhs: float):
        self.truncation = truncation
        self.tail = tail
        self.rhs = rhs
        super().__init__(
            "Truncation {} leaves a tail term of {:.3e} against a dual sum of {:.3e}.".format(
                truncation, tail, rhs
            )
        )

    def __repr__(self):
        return "Frequency truncation too small.\nTruncation: {}\nTail: {}".format(
            self.truncation, self.tail
        )


class configError(pezzoError):
    """
    Raised when a run configuration fails validation.
    """

    def __init__(self, field: str, message: str):
        self.field = field
        self.message = message
        super().__init__("{}: {}".format(field, message))

    def __repr__(self):
        return "Configuration error.\nField: {}\nMessage: {}".format(
            self.field, self.message
        )
