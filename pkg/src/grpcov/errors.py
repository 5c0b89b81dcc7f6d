"""Exception types shared across the package."""

from __future__ import annotations


class CapExceeded(RuntimeError):
    """A configured cap (element, subgroup, or oracle) was exceeded.

    The message always names the cap and its value, so callers can report
    an explicit refusal instead of a silent partial answer.
    """

    def __init__(self, cap_name: str, cap_value: int, detail: str = ""):
        self.cap_name = cap_name
        self.cap_value = cap_value
        msg = f"{cap_name} cap of {cap_value} exceeded"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)


class NotNormalError(ValueError):
    """A subgroup required to be normal is not; carries a conjugation witness."""

    def __init__(self, g: int, x: int, conjugate: int):
        self.witness = (g, x, conjugate)
        super().__init__(
            f"subgroup is not normal: element {x} conjugated by {g} gives {conjugate}, "
            "which lies outside the subgroup"
        )


class SpecParseError(ValueError):
    """A group-spec string failed to parse or violated a parameter range."""


class CorpusError(ValueError):
    """The corpus file is malformed or fails its declared-count verification."""


class SigmaUndefinedError(ValueError):
    """sigma(G) requested for a cyclic group, where no proper-subgroup cover exists."""


class Lambda6Unmatched(RuntimeError):
    """A group with lambda = 6 matched no classification family.

    This is a falsification signal for the classification theorems and is
    never expected to fire.
    """
