from dataclasses import dataclass, fields, replace
from typing import Type, TypeVar, Any, Union, Callable

import numpy as np

T = TypeVar('T')

_ARRAY_ANNOTATIONS = (np.ndarray, 'np.ndarray', 'numpy.ndarray', 'ndarray')


def frozen_dataclass(
        cls: Type[T] = None,
        order: bool = False,
        kw_only: bool = True,
        slots: bool = False,
) -> Union[Type[T], Callable[[Type[T]], Type[T]]]:
    """
        Makes the decorated class an immutable value type by adding the [@dataclass(frozen=True)]
        decorator. Geometry values carry numpy arrays, so in addition:
        - every field holding an np.ndarray (or annotated as one) is stored as a read-only float64 copy
        - __eq__() compares arrays element-wise instead of returning arrays
        - __hash__() hashes array contents, so values can be used as cache keys
        - copy_with() creates new similar frozen instances. Use this instead of setters.

        If the [order] parameter is True (default is False), the comparison methods are added as well.

        Example:

        >>> import numpy as np
        >>> @frozen_dataclass
        ... class Vertex:
        ...     v: np.ndarray
        ...     label: str
        >>> a = Vertex(v=[0.0, 1.0], label='a')
        >>> a
        Vertex(v=array([0., 1.]), label='a')
        >>> a == Vertex(v=np.array([0.0, 1.0]), label='a')
        True
        >>> a == Vertex(v=np.array([0.0, 1.5]), label='a')
        False
        >>> a.v.flags.writeable
        False
        >>> hash(a) == hash(a.copy_with())
        True
        >>> a.copy_with(label='b')
        Vertex(v=array([0., 1.]), label='b')
    """

    def decorator(cls_: Type[T]) -> Type[T]:
        old_post_init = getattr(cls_, '__post_init__', None)

        def new_post_init(self) -> None:
            for field in fields(self):
                value = getattr(self, field.name)

                if value is not None and (isinstance(value, np.ndarray) or field.type in _ARRAY_ANNOTATIONS):
                    object.__setattr__(self, field.name, _frozen_array(value))

            if old_post_init is not None:
                old_post_init(self)

        setattr(cls_, '__post_init__', new_post_init)  # must be done before applying dataclass()
        new_class = dataclass(frozen=True, order=order, kw_only=kw_only, slots=slots)(cls_)

        def __eq__(self, other: Any) -> bool:
            if other.__class__ is not self.__class__:
                return NotImplemented

            return all(_values_equal(getattr(self, f.name), getattr(other, f.name)) for f in fields(self))

        def __hash__(self) -> int:
            return hash(tuple(_hashable(getattr(self, f.name)) for f in fields(self)))

        def copy_with(self, **kwargs: Any) -> T:
            """
                Creates a new immutable instance by copying all fields of this instance replaced by the new values.
                Keep in mind that this is a shallow copy!
            """

            return replace(self, **kwargs)

        for method in [__eq__, __hash__, copy_with]:
            setattr(new_class, method.__name__, method)

        return new_class

    if cls is None:
        return decorator

    return decorator(cls_=cls)


def _frozen_array(value: Any) -> np.ndarray:
    array = np.array(value, dtype=float) + 0.0  # folds -0.0 into 0.0 so equal arrays hash equally
    array.setflags(write=False)
    return array


def _values_equal(a: Any, b: Any) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        if not (isinstance(a, np.ndarray) and isinstance(b, np.ndarray)):
            return False

        return a.shape == b.shape and bool(np.array_equal(a, b))

    if isinstance(a, (tuple, list)) and isinstance(b, (tuple, list)):
        return len(a) == len(b) and all(_values_equal(x, y) for x, y in zip(a, b))

    return bool(a == b)


def _hashable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.shape, value.tobytes()

    if isinstance(value, (tuple, list)):
        return tuple(_hashable(item) for item in value)

    if isinstance(value, dict):
        return tuple(sorted((key, _hashable(item)) for key, item in value.items()))

    return value


if __name__ == '__main__':
    import doctest
    doctest.testmod(verbose=False, optionflags=doctest.ELLIPSIS)
