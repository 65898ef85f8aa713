# topology/exceptions.py


class TopologyError(Exception):
    """Base class for every error raised by the curve and manifold calculus."""


class WordSyntaxError(TopologyError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class GenusError(TopologyError):
    """Genus below 1, generator index outside 1..k, or mixing words of different genus."""


class ExponentError(TopologyError):
    """Zero exponent in written input, or an exponent beyond the configured limit."""


class DiagramError(TopologyError):
    pass


class HeegaardError(TopologyError):
    pass


class ChainError(TopologyError):
    pass
