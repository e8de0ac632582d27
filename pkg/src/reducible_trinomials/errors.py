"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Invalid family parameters, e.g. an even or nonpositive p."""


class ConsistencyError(RuntimeError):
    """Two computations that must agree did not. Always a bug, never bad input."""


def check_odd_p(p: int) -> None:
    if not isinstance(p, int) or p < 1 or p % 2 == 0:
        raise ParameterError(f"p must be an odd positive integer, got {p!r}")
