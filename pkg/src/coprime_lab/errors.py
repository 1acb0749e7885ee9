class CapExceededError(ValueError):
    """A configured resource cap refuses the computation."""
