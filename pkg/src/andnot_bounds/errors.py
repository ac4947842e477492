"""Exception hierarchy shared by all modules."""


class AndNotError(Exception):
    """Base class for every error raised by this package."""


class NetworkFormatError(AndNotError, ValueError):
    """The network text could not be turned into a valid AND-NOT network."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class NetworkSyntaxError(NetworkFormatError):
    pass


class DuplicateTargetError(NetworkFormatError):
    pass


class UnknownVariableError(NetworkFormatError):
    pass


class DuplicateLiteralError(NetworkFormatError):
    pass


class EmptyNetworkError(NetworkFormatError):
    pass


class StateSpaceTooLarge(AndNotError):
    def __init__(self, n_vars, max_states):
        super().__init__(
            f"2^{n_vars} states exceed the brute-force cap of {max_states} states"
        )
        self.n_vars = n_vars
        self.max_states = max_states


class CycleBudgetExceeded(AndNotError):
    """Raised in strict mode; ``partial`` holds the cycles found so far."""

    def __init__(self, partial, max_cycles):
        super().__init__(f"more than {max_cycles} simple cycles")
        self.partial = partial
        self.max_cycles = max_cycles


class PathBudgetExceeded(AndNotError):
    def __init__(self, partial, max_path_len):
        super().__init__(f"witness paths longer than {max_path_len} were not explored")
        self.partial = partial
        self.max_path_len = max_path_len


class ExactBudgetExceeded(AndNotError):
    def __init__(self, max_nodes):
        super().__init__(f"exact hitting-set search exceeded {max_nodes} branch nodes")
        self.max_nodes = max_nodes


class InvalidConfig(AndNotError, ValueError):
    pass
