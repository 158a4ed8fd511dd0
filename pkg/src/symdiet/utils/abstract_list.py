from collections.abc import MutableSequence


class AbstractList(MutableSequence):
    """A mutable list of symdiet model objects of a single type.

    Subclasses set ``item_class``. Items given as python dicts are parsed to the item
    class, any other type raises a ValueError.
    """

    item_class = None

    def __init__(self, data=[]):
        super().__init__()
        self._list = [self._check_item(item) for item in data]

    @classmethod
    def _check_item(cls, item):
        if cls.item_class is None:
            return item
        if isinstance(item, dict):
            return cls.item_class.parse(item)
        if not isinstance(item, cls.item_class):
            raise ValueError(
                f"Expecting a {cls.item_class.__name__} object or an equivalent python "
                f"dict object, instead found {item.__class__.__name__}."
            )
        return item

    def __repr__(self):
        """String representation"""
        return self.__str__()

    def __str__(self):
        """String representation"""
        string = ",\n".join([item.__repr__() for item in self._list])
        return f"[{string}]"

    def __len__(self):
        """List length"""
        return len(self._list)

    def __getitem__(self, index):
        """Get a list item"""
        return self._list[index]

    def __setitem__(self, index, item):
        """Set a list item"""
        self._list[index] = self._check_item(item)

    def __delitem__(self, index):
        """Delete an item from the list."""
        del self._list[index]

    def insert(self, index, item):
        """Insert a list item"""
        self._list.insert(index, self._check_item(item))

    def __eq__(self, other):
        """Check equality of two lists of the same class."""
        if not isinstance(other, self.__class__):
            return False
        return self._list == other._list

    def json(self) -> list:
        """Serialize the list to a JSON compliant python list."""
        return [item.json() for item in self._list]
