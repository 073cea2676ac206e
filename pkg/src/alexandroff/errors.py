"""Exception hierarchy. Every error carries its witness fields so the CLI can
serialize it as ``{"error": {...}}``."""


class TopologyError(Exception):
    fields: tuple = ()

    def __init__(self, *args):
        super().__init__(*args)
        for name, value in zip(self.fields, args):
            setattr(self, name, value)

    def to_json(self):
        out = {"type": type(self).__name__}
        for name in self.fields:
            value = getattr(self, name)
            if name in ("size", "limit", "lo", "hi"):
                out[name] = value
            elif name == "count":
                out[name] = str(value)
            elif name == "reason":
                out[name] = value
            else:
                out[name] = _jsonable(value)
        return out

    def __str__(self):
        parts = ", ".join(f"{n}={getattr(self, n)!r}" for n in self.fields)
        return f"{type(self).__name__}({parts})"


def _jsonable(value):
    from .space import format_label

    if isinstance(value, (list, set, frozenset)):
        return [_jsonable(v) for v in value]
    return format_label(value)


class ValidationError(TopologyError):
    pass


class ReflexivityViolation(ValidationError):
    fields = ("x",)


class InteriorityViolation(ValidationError):
    """``y`` lies in V_x but V_y is not contained in V_x."""
    fields = ("x", "y")


class UnknownPoint(ValidationError):
    fields = ("id",)


class DuplicatePoint(ValidationError):
    fields = ("id",)


class MissingNeighborhood(ValidationError):
    fields = ("x",)


class OracleTooLarge(TopologyError):
    fields = ("size", "limit")


class MapSpaceMismatch(TopologyError):
    fields = ("reason",)


class EnumerationTooLarge(TopologyError):
    fields = ("count", "limit")


class EmptyWindow(TopologyError):
    fields = ("lo", "hi")


class SizeLimit(TopologyError):
    fields = ("size", "limit")


class EmptyCodomain(TopologyError):
    fields = ()
