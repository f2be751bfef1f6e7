"""Inclusion verdicts between two set-valued results."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import TheoremViolation


class Relation(str, enum.Enum):
    EQUAL = "Equal"
    STRICT_SUBSET = "StrictSubset"
    STRICT_SUPERSET = "StrictSuperset"
    INCOMPARABLE = "Incomparable"

    # names used when comparing two parenthesizations or expansions
    LEFT_IN_RIGHT = "StrictSubset"
    RIGHT_IN_LEFT = "StrictSuperset"

    def __str__(self):
        return self.value

    @property
    def left_in_right(self) -> bool:
        """True when the left side is included in the right side."""
        return self in (Relation.EQUAL, Relation.STRICT_SUBSET)


def relate(left, right, subset) -> Relation:
    """Classify two values given an inclusion predicate ``subset(x, y)``."""
    lr = subset(left, right)
    rl = subset(right, left)
    if lr and rl:
        return Relation.EQUAL
    if lr:
        return Relation.STRICT_SUBSET
    if rl:
        return Relation.STRICT_SUPERSET
    return Relation.INCOMPARABLE


@dataclass(frozen=True)
class RelationReport:
    """Two computed sides, their relation and the conditions that were checked.

    ``conditions`` maps a condition name to whether it holds.  ``guaranteed``
    is what a proven law promises under the conditions that hold: one of
    ``"subset"``, ``"equal"`` or ``"superset"``.
    """

    left: object
    right: object
    relation: Relation
    conditions: dict = field(default_factory=dict)
    guaranteed: str | None = None

    def lines(self) -> list[str]:
        out = [f"left: {self.left}", f"right: {self.right}", f"relation: {self.relation.value}"]
        for name, ok in self.conditions.items():
            out.append(f"condition {name}: {'holds' if ok else 'unmet'}")
        return out


def enforce(relation: Relation, guaranteed: str | None, what: str) -> None:
    """Raise :class:`TheoremViolation` if ``relation`` contradicts ``guaranteed``."""
    if guaranteed is None:
        return
    allowed = {
        "equal": (Relation.EQUAL,),
        "subset": (Relation.EQUAL, Relation.STRICT_SUBSET),
        "superset": (Relation.EQUAL, Relation.STRICT_SUPERSET),
    }[guaranteed]
    if relation not in allowed:
        raise TheoremViolation(f"{what}: expected {guaranteed}, got {relation.value}")
