from __future__ import annotations

from typing import Literal

import narwhals as nw
from narwhals.typing import Frame

Closed = Literal["both", "left", "right", "none"]


def min_max_filter(
    frame: Frame,
    column: str,
    min_: float | None,
    max_: float | None,
    closed: Closed = "both",
) -> Frame:
    """Keep the rows of ``frame`` whose ``column`` lies outside the bounds.

    ``closed`` states which bounds are inclusive, as in ``Expr.is_between``.
    """
    col = nw.col(column)
    if min_ is not None and max_ is not None:
        return frame.filter(col.is_between(min_, max_, closed=closed) == False)
    if min_ is not None:
        inside = col >= min_ if closed in ("both", "left") else col > min_
        return frame.filter(inside == False)
    if max_ is not None:
        inside = col <= max_ if closed in ("both", "right") else col < max_
        return frame.filter(inside == False)
    return frame
