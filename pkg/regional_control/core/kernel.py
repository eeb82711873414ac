"""
Vectorised evolution kernel over integer-encoded words.

A word of ``width`` cells is stored as an ``int64`` whose most significant
of the ``width`` bits is the leftmost cell. One step of a radius-``r`` rule
maps a word of width ``w`` to the word of width ``w - 2r`` made of every
full neighborhood, which is exactly the controlled step when the input is
``left · region · right`` and exactly interior evolution otherwise.
"""

from __future__ import annotations

from typing import Final

import numpy as np
import numpy.typing as npt

from ..exceptions import ResourceLimitError

CodeArray = npt.NDArray[np.int64]

MAX_CODE_WIDTH: Final[int] = 62


def image_codes(
    table: npt.NDArray[np.uint8],
    radius: int,
    codes: CodeArray,
    width: int,
) -> CodeArray:
    """
    Apply one step of the local rule to every word in ``codes``.

    :param table: Rule table indexed by the neighborhood encoding.
    :param radius: Rule radius ``r``.
    :param codes: Words of ``width`` cells.
    :param width: Input width; the output has ``width - 2r`` cells.
    :raises ResourceLimitError: If ``width`` does not fit the int64 encoding.
    """
    if width > MAX_CODE_WIDTH:
        raise ResourceLimitError("code_width", width, MAX_CODE_WIDTH)
    out_width = width - 2 * radius
    if out_width < 0:
        raise ValueError(f"width {width} is narrower than a neighborhood of radius {radius}")
    mask = np.int64((1 << (2 * radius + 1)) - 1)
    codes = np.asarray(codes, dtype=np.int64)
    result = np.zeros(codes.shape, dtype=np.int64)
    for position in range(out_width):
        shift = out_width - 1 - position
        neighborhoods = (codes >> np.int64(shift)) & mask
        result |= table[neighborhoods].astype(np.int64) << np.int64(shift)
    return result


def evolve_codes(
    table: npt.NDArray[np.uint8],
    radius: int,
    codes: CodeArray,
    width: int,
    steps: int,
) -> CodeArray:
    """Apply ``steps`` uncontrolled steps; the result has ``width - 2 * radius * steps`` cells."""
    current = np.asarray(codes, dtype=np.int64)
    for _ in range(steps):
        current = image_codes(table, radius, current, width)
        width -= 2 * radius
    return current


def window_codes(codes: CodeArray, *, right_margin: int, width: int) -> CodeArray:
    """Extract the ``width`` cells that sit ``right_margin`` cells from the right end."""
    return (np.asarray(codes, dtype=np.int64) >> np.int64(right_margin)) & np.int64(
        (1 << width) - 1
    )


__all__ = ["CodeArray", "MAX_CODE_WIDTH", "image_codes", "evolve_codes", "window_codes"]
