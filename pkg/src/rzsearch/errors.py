"""Exception types raised across the package."""


class RzError(Exception):
    """Base class for all solver errors."""


class IllegalMove(RzError):
    pass


class OccupiedGrid(IllegalMove):
    pass


class SuicideMove(IllegalMove):
    pass


class SizeMismatch(RzError):
    pass


class EmptyUcaSet(RzError):
    pass


class MoveNotInRegion(RzError):
    pass


class PatternMismatch(RzError):
    pass


class MalformedSgf(RzError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class InconsistentSetup(RzError):
    pass
