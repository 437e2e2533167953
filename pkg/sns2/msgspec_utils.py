import typing
from contextlib import contextmanager
from fractions import Fraction

import fntypes.result
import msgspec
from fntypes.co import Error, Ok

type DecHook[T] = typing.Callable[[type[T], typing.Any], typing.Any]
type EncHook[T] = typing.Callable[[T], typing.Any]


def get_origin[T](t: type[T]) -> type[T]:
    return typing.cast(type[T], typing.get_origin(t)) or t


def repr_type(t: typing.Any) -> str:
    return getattr(t, "__name__", repr(get_origin(t)))


def fraction_dec_hook(tp: type[Fraction], obj: typing.Any) -> Fraction:
    if isinstance(obj, bool) or not isinstance(obj, int | str):
        raise TypeError(f"Expected `int` or `str` rational, got `{repr_type(type(obj))}`.")
    try:
        return Fraction(obj)
    except (ValueError, ZeroDivisionError) as exc:
        raise TypeError(f"Invalid rational literal {obj!r}.") from exc


def fraction_enc_hook(value: Fraction) -> int | str:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def msgspec_decode[T](buf: str | bytes, t: type[T]) -> fntypes.result.Result[T, str]:
    try:
        return Ok(decoder.decode(buf, type=t))
    except (msgspec.ValidationError, msgspec.DecodeError) as exc:
        return Error("Cannot decode `{}`: {}".format(repr_type(t), exc))


class Decoder:
    """Class `Decoder` for `msgspec` module with decode hooks
    for the exact-arithmetic types used in `sns2` files.

    ```
    decoder = Decoder()
    decoder.convert("3/4", type=Fraction)  #> Fraction(3, 4)
    decoder.decode(b'{"x": "-1/2"}', type=dict[str, Fraction])  #> {'x': Fraction(-1, 2)}
    ```
    """

    def __init__(self) -> None:
        self.dec_hooks: dict[typing.Any, DecHook[typing.Any]] = {
            Fraction: fraction_dec_hook,
        }

    def __repr__(self) -> str:
        return "<{}: dec_hooks={!r}>".format(
            self.__class__.__name__,
            self.dec_hooks,
        )

    def dec_hook(self, tp: type[typing.Any], obj: object) -> typing.Any:
        origin_type = t if isinstance((t := get_origin(tp)), type) else type(t)
        if origin_type not in self.dec_hooks:
            raise TypeError(
                f"Unknown type `{repr_type(origin_type)}`. You can implement decode hook for this type."
            )
        return self.dec_hooks[origin_type](tp, obj)

    def convert[T](self, obj: object, *, type: type[T] = dict, strict: bool = True) -> T:
        return msgspec.convert(obj, type, strict=strict, dec_hook=self.dec_hook)

    def decode(self, buf: str | bytes, *, type: typing.Any = object, strict: bool = True) -> typing.Any:
        return msgspec.json.decode(
            buf,
            type=typing.Any if type is object else type,
            strict=strict,
            dec_hook=self.dec_hook,
        )


class Encoder:
    """Class `Encoder` for `msgspec` module with encode hooks for objects.
    Output is deterministic: mapping keys are sorted.

    ```
    encoder = Encoder()
    encoder.encode({"b": Fraction(1, 3), "a": 2})  #> '{"a":2,"b":"1/3"}'
    ```
    """

    def __init__(self) -> None:
        self.enc_hooks: dict[typing.Any, EncHook[typing.Any]] = {
            Fraction: fraction_enc_hook,
        }

    def __repr__(self) -> str:
        return "<{}: enc_hooks={!r}>".format(
            self.__class__.__name__,
            self.enc_hooks,
        )

    @contextmanager
    def __call__(self) -> typing.Generator[msgspec.json.Encoder, typing.Any, None]:
        """Context manager returns an `msgspec.json.Encoder` object with the `enc_hook`."""
        yield msgspec.json.Encoder(enc_hook=self.enc_hook, order="sorted")

    def add_enc_hook[T](self, t: type[T], /):
        def decorator(func: EncHook[T]) -> EncHook[T]:
            encode_hook = self.enc_hooks.setdefault(get_origin(t), func)
            return func if encode_hook is not func else encode_hook

        return decorator

    def enc_hook(self, obj: typing.Any) -> typing.Any:
        origin_type = get_origin(obj.__class__)
        for hook_type, hook in self.enc_hooks.items():
            if origin_type is hook_type or (isinstance(hook_type, type) and isinstance(obj, hook_type)):
                return hook(obj)
        raise NotImplementedError(f"Not implemented encode hook for object of type `{repr_type(origin_type)}`.")

    def encode(self, obj: typing.Any) -> str:
        with self() as enc_obj:
            return enc_obj.encode(obj).decode("utf-8")


decoder: typing.Final[Decoder] = Decoder()
encoder: typing.Final[Encoder] = Encoder()


__all__ = (
    "Decoder",
    "Encoder",
    "decoder",
    "encoder",
    "fraction_dec_hook",
    "fraction_enc_hook",
    "get_origin",
    "msgspec_decode",
    "repr_type",
)
