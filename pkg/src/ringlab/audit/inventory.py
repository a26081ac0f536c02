"""The fixed ring inventory the claim audits quantify over."""

from __future__ import annotations

from ..dsl import ring_from_text

# Every entry is DSL text, so a report's ring names rebuild the same rings.
DEFAULT_RINGS = (
    *(f"Z{n}" for n in range(2, 14)),
    "Z16",
    "Z27",
    "Z35",
    "Z39",
    "Z3[x]/(x^2)",
    "Z3[x]/(x^2+1)",
    "Z3 x Z3",
    "Z3 x Z3[x]/(x^2+1)",  # von Neumann regular, characteristic 3
    "Z9 x Z9",
    "bool(3)",
    "Z4 x Z4",
    "idealize(Z8; zero)",
    "idealize(Z8; gen(4))",
    "amalg(Z8; gen(1))",
    "amalg(Z8; gen(4))",
    "loc(Z6; 3)",
)


def default_inventory():
    """Fresh ring objects for the default inventory, in a fixed order."""
    return [ring_from_text(text) for text in DEFAULT_RINGS]
