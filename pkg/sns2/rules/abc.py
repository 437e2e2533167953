import typing
from abc import ABC, abstractmethod

from sns2.rules.context import PatternContext


class ABCRule(ABC):
    """Structural predicate over a `PatternContext`."""

    @abstractmethod
    def check(self, ctx: PatternContext) -> bool:
        pass

    def __and__(self, other: "ABCRule") -> "AndRule":
        """And Rule.

        ```python
        rule = HasOrder(4) & HasCycle(3)
        rule #> AndRule(HasOrder(4), HasCycle(3)) -> True if all rules in an AndRule are True, otherwise False.
        ```
        """
        return AndRule(self, other)

    def __or__(self, other: "ABCRule") -> "OrRule":
        """Or Rule.

        ```python
        rule = HasCycle(1) | HasCycle(3)
        rule #> OrRule(HasCycle(1), HasCycle(3)) -> True if any rule in an OrRule is True, otherwise False.
        ```
        """
        return OrRule(self, other)

    def __invert__(self) -> "NotRule":
        """Not Rule.

        ```python
        rule = ~HasCycle(3)
        rule #> NotRule(HasCycle(3)) -> True if rule returned False, otherwise False.
        ```
        """
        return NotRule(self)

    def __repr__(self) -> str:
        return "<{}>".format(self.__class__.__name__)


class AndRule(ABCRule):
    def __init__(self, *rules: ABCRule) -> None:
        self.rules = rules

    def __repr__(self) -> str:
        return "<AndRule: {}>".format(", ".join(map(repr, self.rules)))

    def check(self, ctx: PatternContext) -> bool:
        return all(rule.check(ctx) for rule in self.rules)


class OrRule(ABCRule):
    def __init__(self, *rules: ABCRule) -> None:
        self.rules = rules

    def __repr__(self) -> str:
        return "<OrRule: {}>".format(", ".join(map(repr, self.rules)))

    def check(self, ctx: PatternContext) -> bool:
        return any(rule.check(ctx) for rule in self.rules)


class NotRule(ABCRule):
    def __init__(self, rule: ABCRule) -> None:
        self.rule = rule

    def __repr__(self) -> str:
        return "<NotRule: {!r}>".format(self.rule)

    def check(self, ctx: PatternContext) -> bool:
        return not self.rule.check(ctx)


class FuncRule(ABCRule):
    def __init__(self, func: typing.Callable[[PatternContext], bool], name: str | None = None) -> None:
        self.func = func
        self.name = name or getattr(func, "__name__", "func")

    def __repr__(self) -> str:
        return "<FuncRule: {}>".format(self.name)

    def check(self, ctx: PatternContext) -> bool:
        return self.func(ctx)


__all__ = ("ABCRule", "AndRule", "FuncRule", "NotRule", "OrRule")
