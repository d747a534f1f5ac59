from __future__ import annotations


class AlgebraError(RuntimeError):
    pass


class DivisionByZeroError(AlgebraError):
    pass


class NotAUnitError(AlgebraError):
    pass


class PrecisionError(AlgebraError):
    pass


class PoleError(AlgebraError):
    pass


class RingMismatchError(AlgebraError):
    pass


class ShapeError(AlgebraError):
    pass


class MorphismError(AlgebraError):
    pass


class RegistryError(AlgebraError):
    def __init__(self, kind: str, name: str, known: list[str] | tuple[str, ...]) -> None:
        self.kind = kind
        self.name = name
        self.known = tuple(known)
        super().__init__(f"Unknown {kind} '{name}'. Registered: {', '.join(self.known)}")


class ParseError(AlgebraError):
    def __init__(self, message: str, position: int) -> None:
        self.message = message
        self.position = position
        super().__init__(f"{message} (at position {position})")


class ConfigError(AlgebraError):
    pass
