class DomainError(ValueError):
    """Input outside the domain of an operation (bad rank, non-dominant weight, ...)."""


class NotPolynomialError(DomainError):
    """A gamma ratio that does not expand to a polynomial."""
