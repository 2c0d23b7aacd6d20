class ResourceExhausted(RuntimeError):
    """A search hit its node budget before it could certify an answer."""

    def __init__(self, message: str, nodes: int, partial=None):
        super().__init__(message)
        self.nodes = nodes
        self.partial = partial
