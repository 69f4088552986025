"""Exception types shared across the package."""


class ColorAvoidError(Exception):
    """Base class for all package-specific errors."""


class GraphValidationError(ColorAvoidError, ValueError):
    """A graph (or an argument referring into one) violates an invariant."""


class CagParseError(ColorAvoidError, ValueError):
    """Syntax or semantic error in a CAG text stream, with position info."""

    def __init__(self, message: str, line: int, column: int = 1):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class BudgetExceededError(ColorAvoidError):
    """An exponential-time enumeration ran past its recursion-node budget.

    The enumeration is all-or-nothing: no partial clique list is returned.
    """

    def __init__(self, budget: int):
        self.budget = budget
        super().__init__(f"enumeration budget of {budget} recursion nodes exceeded")


class InvalidEliminationOrderError(ColorAvoidError, ValueError):
    """A supplied vertex order is not a perfect elimination order.

    ``triple`` is (v, u, w): u and w come after v in the order, both are
    neighbors of v, but u and w are not adjacent to each other.
    """

    def __init__(self, triple: tuple[int, int, int]):
        self.triple = triple
        v, u, w = triple
        super().__init__(
            f"not a perfect elimination order: later neighbors {u} and {w} "
            f"of vertex {v} are non-adjacent"
        )


class LocalChordalityError(ColorAvoidError):
    """A graph expected to be locally chordal is not.

    ``vertex`` is the hub whose open neighborhood fails the chordality test
    and ``triple`` certifies the failure inside that neighborhood.
    """

    def __init__(self, vertex: int, triple: tuple[int, int, int]):
        self.vertex = vertex
        self.triple = triple
        super().__init__(
            f"neighborhood of vertex {vertex} is not chordal "
            f"(violating triple {triple})"
        )
