from abc import ABC, abstractmethod
from typing import Any, Dict


class Deserializable(ABC):
    """ A tiny interface with a from_json() named constructor and its inverse to_json(). """

    @classmethod
    @abstractmethod
    def from_json(cls, data: Dict[str, Any]) -> 'Deserializable':
        """ A named constructor which creates an object from JSON. """

    @abstractmethod
    def to_json(self) -> Dict[str, Any]:
        """ The JSON document from_json() accepts. """
