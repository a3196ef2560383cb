class ArrowgraphError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameter(ArrowgraphError, ValueError):
    pass


class BudgetExceeded(ArrowgraphError):
    pass


class Unsupported(ArrowgraphError):
    pass


class IllDefinedColouring(ArrowgraphError):
    """An edge would receive colours from two different hyperedges."""


class ColouringRejected(ArrowgraphError):
    """A supposedly critical colouring contains a monochromatic clique.

    ``witness`` holds the offending clique and ``colour`` its colour name.
    """

    def __init__(self, message, witness=None, colour=None):
        super().__init__(message)
        self.witness = witness
        self.colour = colour
