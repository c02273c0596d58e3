"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so the split matters:
parse problems, domain violations (including poles and indefinite
forms), and resource-budget refusals are different failure modes.
"""


class ParseError(ValueError):
    """A form or number literal could not be parsed."""


class FormError(ValueError):
    """Coefficients do not define a positive definite form."""


class DomainError(ValueError):
    """Argument lies outside the operation's domain."""


class PoleError(DomainError):
    """Evaluation requested at a pole."""


class BudgetError(RuntimeError):
    """The computation would exceed the configured point budget."""


class VerificationError(RuntimeError):
    """An internal cross-check (quadrature vs. closed form) failed."""
