"""Exception hierarchy; ``exit_code`` is what the CLI returns for each family."""


class SeqCMError(Exception):
    exit_code = 1


class InputError(SeqCMError, ValueError):
    exit_code = 1


class NotHomogeneousError(InputError):
    pass


class InfiniteLengthError(InputError):
    """The subquotient is not of finite length (not m-primary on it)."""


class NotParameterSystemError(InputError):
    pass


class FiltrationError(InputError):
    def __init__(self, failures):
        self.failures = list(failures)
        lines = "; ".join(f"index {i}: {msg}" for i, msg in self.failures)
        super().__init__(f"filtration check failed: {lines}")


class UnsupportedConstructionError(SeqCMError):
    exit_code = 2


class SearchFailureError(SeqCMError):
    exit_code = 3

    def __init__(self, message, prefix=(), last_check=None):
        super().__init__(message)
        self.prefix = tuple(prefix)
        self.last_check = last_check


class InternalInconsistencyError(SeqCMError):
    exit_code = 4


class UnstableMultiplicityError(InternalInconsistencyError):
    pass
