import typing

import msgspec

from sns2.msgspec_utils import decoder, encoder


def loads(s: str | bytes, *, type: typing.Any = object) -> typing.Any:
    return decoder.decode(s, type=type)


def dumps(o: typing.Any, *, indent: int | None = None) -> str:
    """Sorted-key JSON. With `indent`, the compact output is re-formatted, keeping byte stability."""
    raw = encoder.encode(o)
    if indent is None:
        return raw
    return msgspec.json.format(raw, indent=indent)


__all__ = ("dumps", "loads")
