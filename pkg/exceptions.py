class UnrefError(Exception):
    """Base error. Carries a human ``detail``, a machine ``code`` and the CLI exit code."""

    code: str = "internal"
    exit_code: int = 3

    def __init__(self, detail: str, code: str | None = None) -> None:
        super().__init__(detail)
        self.detail = detail
        if code is not None:
            self.code = code


# ################################################
# -- Invalid input (exit 2)

class InvalidInputError(UnrefError):
    code = "invalid_input"
    exit_code = 2


class InvalidPartitionError(InvalidInputError):
    code = "invalid_partition"


class NoGapsError(InvalidInputError):
    code = "no_gaps"


class NotCofiniteError(InvalidInputError):
    code = "not_cofinite"


class NotASemigroupError(InvalidInputError):
    code = "not_semigroup"


class UndefinedVectorError(InvalidInputError):
    code = "mex_zero"


class CapExceededError(InvalidInputError):
    code = "cap_exceeded"


class NotPrimeError(InvalidInputError):
    code = "not_prime"


class RefinablePartitionError(InvalidInputError):
    code = "refinable"


# ################################################
# -- Verdicts

class AssertionFailedError(UnrefError):
    code = "assertion_failed"
    exit_code = 1


class OracleDisagreementError(UnrefError):
    code = "oracle_disagreement"
    exit_code = 3
