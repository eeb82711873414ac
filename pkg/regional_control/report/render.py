"""Space-time diagrams as text art or portable bitmap/pixmap images."""

from __future__ import annotations

from pathlib import Path
from typing import Final

from PySide6.QtCore import Qt
from PySide6.QtGui import QColor, QImage

from ..core import Trajectory
from ..exceptions import InvalidConfigurationError
from ..utils import get_logger

LOGGER = get_logger(__name__)

ONE_CHAR: Final[str] = "█"
ZERO_CHAR: Final[str] = "·"
BLANK_CHAR: Final[str] = " "

_IMAGE_FORMATS: Final[dict[str, str]] = {".pbm": "PBM", ".ppm": "PPM"}

# Cell values per row: 1, 0 or None for a boundary cell without a control.
Cells = list[int | None]


def diagram_cells(trajectory: Trajectory, radius: int, *, boundary: bool = True) -> list[Cells]:
    """
    Lay out one row per time step, top row first.

    With ``boundary`` each row carries the ``radius`` left control cells, the
    region and the right control cells; the final row has no control applied
    and leaves its boundary cells blank.
    """
    rows: list[Cells] = []
    for row in trajectory.rows:
        region: Cells = list(row.word.symbols)
        if not boundary:
            rows.append(region)
            continue
        if row.control is None:
            blank: Cells = [None] * radius
            rows.append(blank + region + blank)
        else:
            rows.append(list(row.control.left) + region + list(row.control.right))
    return rows


def _char(cell: int | None) -> str:
    if cell is None:
        return BLANK_CHAR
    return ONE_CHAR if cell else ZERO_CHAR


def render_text(trajectory: Trajectory, radius: int, *, boundary: bool = True) -> str:
    """Render ``█`` for 1 and ``·`` for 0, one line per step."""
    rows = diagram_cells(trajectory, radius, boundary=boundary)
    return "".join("".join(_char(cell) for cell in row) + "\n" for row in rows)


def render_side_by_side(
    left: Trajectory,
    right: Trajectory,
    radius: int,
    *,
    boundary: bool = True,
    gap: str = "   ",
) -> str:
    """Two diagrams of equal height next to each other (controlled run, free run)."""
    first = render_text(left, radius, boundary=boundary).splitlines()
    second = render_text(right, radius, boundary=boundary).splitlines()
    if len(first) != len(second):
        raise InvalidConfigurationError("side-by-side diagrams need the same number of rows")
    return "\n".join(a + gap + b for a, b in zip(first, second)) + "\n"


def render_image(trajectory: Trajectory, radius: int, *, boundary: bool = True) -> QImage:
    """One pixel per cell: black for 1, white for 0 and for blank boundary cells."""
    cells = diagram_cells(trajectory, radius, boundary=boundary)
    width = len(cells[0])
    image = QImage(width, len(cells), QImage.Format.Format_RGB32)
    image.fill(Qt.GlobalColor.white)
    black = QColor(Qt.GlobalColor.black).rgb()
    for y, row in enumerate(cells):
        for x, cell in enumerate(row):
            if cell:
                image.setPixel(x, y, black)
    return image


def save_image(image: QImage, path: str | Path) -> Path:
    """
    Write ``image`` as PBM or PPM, chosen by the file suffix.

    :raises InvalidConfigurationError: For any other suffix.
    :raises OSError: If Qt cannot write the file.
    """
    target = Path(path)
    image_format = _IMAGE_FORMATS.get(target.suffix.lower())
    if image_format is None:
        raise InvalidConfigurationError(
            f"image output must end in .pbm or .ppm, got {target.name!r}"
        )
    if not image.save(str(target), image_format):
        raise OSError(f"could not write {image_format} image to {target}")
    LOGGER.debug("Wrote %s diagram to %s", image_format, target)
    return target


__all__ = [
    "ONE_CHAR",
    "ZERO_CHAR",
    "BLANK_CHAR",
    "diagram_cells",
    "render_text",
    "render_side_by_side",
    "render_image",
    "save_image",
]
