import dataclasses
from dataclasses import dataclass
from operator import attrgetter


@dataclass
class DataRecord:
    """
    Base for the dataclasses of the project. Fields can be read with both dot notation and dictionary-like key access
    and the representation omits fields that still hold their default value, which keeps the log lines short.
    """
    def __getitem__(self, key):
        return getattr(self, key)

    def __setitem__(self, key, value):
        setattr(self, key, value)

    def __repr__(self):
        """Omit default fields in object representation."""
        nodef_f_vals = (
            (f.name, attrgetter(f.name)(self))
            for f in dataclasses.fields(self)
            if f.repr and not _isDefault(f, attrgetter(f.name)(self))
        )

        nodef_f_repr = ", ".join(f"{name}={value}" for name, value in nodef_f_vals)
        return f"{self.__class__.__name__}({nodef_f_repr})"

    def asdict(self):
        """
        Recursive method that checks the fields of each dataclass and calls asdict if we have another dataclass referenced
        otherwise it just builds a dictionary and assigns the values and keys.
        """
        result = {}
        for f in dataclasses.fields(self):
            fieldValue = attrgetter(f.name)(self)
            if isinstance(fieldValue, dict):
                result[f.name] = {}
                for k, v in fieldValue.items():
                    if hasattr(type(v), "__dataclass_fields__"):
                        result[f.name][k] = v.asdict()
                    else:
                        result[f.name][k] = v
            elif isinstance(fieldValue, list):
                result[f.name] = [v.asdict() if hasattr(type(v), "__dataclass_fields__") else v for v in fieldValue]
            elif hasattr(type(fieldValue), "__dataclass_fields__"):
                result[f.name] = fieldValue.asdict()
            else:
                result[f.name] = fieldValue
        return result


def _isDefault(f, value):
    if f.default is not dataclasses.MISSING:
        return value == f.default
    if f.default_factory is not dataclasses.MISSING:
        return value == f.default_factory()
    return False
