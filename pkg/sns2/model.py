import typing
from fractions import Fraction

import fntypes.result
import msgspec

from sns2.msgspec_utils import decoder, encoder, msgspec_decode

MODEL_CONFIG: typing.Final[dict[str, typing.Any]] = {
    "kw_only": True,
    "forbid_unknown_fields": True,
}

type IntTerm = tuple[int, list[int]]
"""One polynomial term in file form: `[coeff, [e1, ..., ek]]`."""

type RationalTerm = tuple[Fraction, list[int]]
"""Like `IntTerm`, but the coefficient may be a `"p/q"` string."""


class Model(msgspec.Struct, **MODEL_CONFIG):
    @classmethod
    def from_dict(cls, obj: dict[str, typing.Any], /) -> typing.Self:
        return decoder.convert(obj, type=cls)

    @classmethod
    def from_raw(cls, raw: str | bytes, /) -> typing.Self:
        return decoder.decode(raw, type=cls)

    @classmethod
    def try_from_raw(cls, raw: str | bytes, /) -> fntypes.result.Result[typing.Self, str]:
        return msgspec_decode(raw, cls)

    def to_raw(self) -> str:
        return encoder.encode(self)


__all__ = ("MODEL_CONFIG", "IntTerm", "Model", "RationalTerm")
