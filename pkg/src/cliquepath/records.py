"""Theorem identifiers and the verdict record shared by the checking modules."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from .errors import DomainError


class Theorem(enum.Enum):
    EG_CYCLE = "T1"
    EG_PATH = "T2"
    EXT_EG = "T3"
    WHEEL = "T4"
    LUO_CYCLE = "T5"
    LUO_PATH = "T6"
    KOPYLOV = "T7"
    LUO_2CONN = "T8"
    MINDEG_CYCLE = "T9"
    MINDEG_PATH = "T11"
    FACT1 = "FACT1"
    KOPYLOV_LEMMA = "L1"
    WOODALL = "C1"

    @classmethod
    def parse(cls, text: str) -> Theorem:
        """Accept either the name (``MINDEG_CYCLE``) or the short tag (``T9``)."""
        key = text.strip().upper()
        if key in cls.__members__:
            return cls[key]
        for member in cls:
            if member.value == key:
                return member
        raise DomainError(f"unknown theorem {text!r}")


def format_fraction(x: Fraction | None) -> str | None:
    return None if x is None else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one theorem check on one graph.

    ``holds`` and ``tight`` are ``None`` unless ``premise_met``.
    """

    theorem: Theorem
    params: dict[str, Any]
    premise_met: bool
    bound: Fraction | None = None
    observed: int | None = None
    holds: bool | None = None
    tight: bool | None = None
    witness: Any = None
    reason: str = ""
    relaxed: frozenset[str] = field(default_factory=frozenset)

    @property
    def violated(self) -> bool:
        return self.premise_met and self.holds is False

    def to_json(self) -> dict:
        out = {
            "theorem_id": self.theorem.name,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "premise_met": self.premise_met,
            "bound": format_fraction(self.bound),
            "observed": None if self.observed is None else str(self.observed),
            "holds": self.holds,
            "tight": self.tight,
            "witness": self.witness,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.relaxed:
            out["relaxed"] = sorted(self.relaxed)
        return out
