
from collections import OrderedDict
from typing import Any, Dict

"""
immutable value objects without the boilerplate
"""

# sentinel for a Var without a default (mandatory)
REQUIRED = object()


# raised when trying to set or delete an attribute of a frozen instance
class FrozenError(AttributeError): pass


class Var():
    """ Used to declare fields for @freeze

    When a class member is set to an instance of Var, the freeze wrapper turns it into a
    constructor field of every instance. Fields are filled from positional parameters first (in
    declaration order), then from keyword parameters, then from `default`. A field without a
    default that is not passed raises a TypeError.
    """
    def __init__(self, default: Any = REQUIRED) -> None:
        self.default = default


def frozen_setattr(self, name, val):
    if not self.__dict__.get("_thawed", False):
        raise FrozenError(f"cannot set {name!r} for frozen instance {self.__class__.__name__}")
    object.__setattr__(self, name, val)


def frozen_delattr(self, name):
    raise FrozenError(f"cannot delete {name!r} for frozen instance {self.__class__.__name__}")


def freeze(cls):
    """ decorator to freeze a class s.t. its instances are immutable after construction

        The class lists its fields as `Var`s. The generated constructor consumes the parameters
        that belong to fields, sets them, and passes whatever is left to the class's own
        __init__, which may validate and set derived members. Once __init__ returns, the
        instance is sealed.

        __eq__, __hash__ and __repr__ are generated from the fields unless the class defines
        them itself.

        >>> from cyclac.meta import freeze, Var
        >>>
        >>> @freeze
        ... class Point:
        ...     x = Var()
        ...     y = Var(0)
        ...     def __init__(self):
        ...         self.norm = abs(self.x) + abs(self.y)
        ...
        >>> Point(3, -4).norm
        7
        >>> Point(3).x = 1
        Traceback (most recent call last):
            ...
        cyclac.meta.FrozenError: cannot set 'x' for frozen instance Point
    """
    fields: Dict[str, Var] = OrderedDict()
    # inherit fields from frozen bases first
    for base in reversed(cls.__mro__[1:]):
        fields.update(getattr(base, "__frozen_fields__", {}))
    for key, val in list(vars(cls).items()):
        if isinstance(val, Var):
            fields[key] = val
            delattr(cls, key)
    names = tuple(fields)
    own = vars(cls)
    clsinit = own.get("__init__")
    if clsinit is None:
        # inherited __init__; for a frozen base that is its own, not the generated constructor
        for base in cls.__mro__[1:-1]:
            if "__frozen_init__" in vars(base):
                clsinit = vars(base)["__frozen_init__"]
                break
            if "__init__" in vars(base):
                clsinit = vars(base)["__init__"]
                break

    def init(obj, *args, **kwargs):
        object.__setattr__(obj, "_thawed", True)
        for key, arg in zip(names, args):
            if key in kwargs:
                raise TypeError(f"{cls.__name__}() got multiple values for argument {key!r}")
            object.__setattr__(obj, key, arg)
        missing = []
        for key in names[len(args):]:
            if key in kwargs:
                object.__setattr__(obj, key, kwargs.pop(key))
            elif fields[key].default is not REQUIRED:
                object.__setattr__(obj, key, fields[key].default)
            else:
                missing.append(key)
        if missing:
            out = ", ".join(repr(key) for key in missing)
            raise TypeError(f"{cls.__name__}() missing required argument{'s' if len(missing) > 1 else ''}: {out}")
        try:
            if clsinit is not None:
                clsinit(obj, *args[len(names):], **kwargs)
            elif args[len(names):] or kwargs:
                raise TypeError(f"{cls.__name__}() got unexpected arguments")
        finally:
            object.__setattr__(obj, "_thawed", False)

    def eq(self, other):
        if other.__class__ is not self.__class__:
            return NotImplemented
        return all(getattr(self, key) == getattr(other, key) for key in names)

    def hash_(self):
        return hash((self.__class__.__name__, *(getattr(self, key) for key in names)))

    def repr_(self):
        params = ", ".join(f"{key}={getattr(self, key)!r}" for key in names)
        return f"{cls.__name__}({params})"

    init.__doc__ = clsinit.__doc__ if clsinit is not None else None
    cls.__init__ = init
    cls.__setattr__ = frozen_setattr
    cls.__delattr__ = frozen_delattr
    cls.__frozen_fields__ = fields
    cls.__frozen_init__ = clsinit
    if "__eq__" not in own:
        cls.__eq__ = eq
    if "__hash__" not in own or own["__hash__"] is None:
        cls.__hash__ = hash_
    if "__repr__" not in own:
        cls.__repr__ = repr_
    return cls
