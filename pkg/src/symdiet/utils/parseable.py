"""Base Parseable class."""
from enum import Enum

from pydantic import BaseModel


class Parseable(BaseModel):
    """Base class for all objects that can be parsed easily from, and serialized to,
    JSON compliant python dictionaries. Don't directly use this. Rather inherit from
    it and implement a data model.

    All symdiet value objects are immutable, so the models are frozen and hashable.
    """

    class Config:
        extra = "forbid"
        frozen = True

    @classmethod
    def parse(cls, py_dict: dict):
        """Parse a dictionary to the class object.

        Args:
            dict py_dict: A required python dict object.
        """
        return cls(**py_dict)

    def json(self, exclude={}) -> dict:
        """Parse the class object to a JSON compliant python dictionary object.

        Args:
            exclude: Set of keys that will be excluded from the result.

        Returns: dict
        """
        temp_dict = {}
        for k in self.__fields__:
            if k in exclude:
                continue
            val = _to_json(getattr(self, k))
            if val is not None:
                temp_dict[k] = val
        return temp_dict


def _to_json(value):
    """Recursively convert model attributes to JSON compliant values."""
    if isinstance(value, Parseable):
        return value.json()
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, (list, tuple)):
        return [_to_json(item) for item in value]
    if isinstance(value, dict):
        return {k: _to_json(v) for k, v in value.items()}
    return value
