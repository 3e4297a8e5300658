from basicco import basic_data
from tippo import Any, TypeVar

__all__ = ["BaseRecord"]


BR = TypeVar("BR", bound="BaseRecord")


# noinspection PyAbstractClass
class BaseRecord(basic_data.ImmutableBasicData):
    """
    Immutable record whose :meth:`to_items` names match its initializer's parameters.
    """

    __slots__ = ()

    def update(self, **kwargs):
        # type: (BR, **Any) -> BR
        """
        Make a new record with some fields changed.

        :param kwargs: Keyword arguments.
        :return: Updated record.
        """
        init_args = self.to_dict(usecase=basic_data.ItemUsecase.INIT)
        init_args.update(kwargs)
        return type(self)(**init_args)
