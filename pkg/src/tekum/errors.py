"""Exception types raised by the tekum package."""


class TekumError(ValueError):
    """Base class for all errors raised by this package."""


class InvalidCharacter(TekumError):
    def __init__(self, position: int, char: str):
        super().__init__(f"invalid trit character {char!r} at position {position}")
        self.position = position
        self.char = char


class OutOfRange(TekumError):
    pass


class LengthMismatch(TekumError):
    pass


class OddLength(TekumError):
    pass


class UnsupportedLength(TekumError):
    pass


class NotRepresentable(TekumError):
    pass


class SpecialInput(TekumError):
    pass


class SpecialOnly(TekumError):
    pass


class BadWidth(TekumError):
    pass


class WidthTooLarge(TekumError):
    pass


class DomainError(TekumError):
    pass
