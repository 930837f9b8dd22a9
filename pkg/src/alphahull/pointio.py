"""Point and polygon text files.

One point per line as two whitespace-separated decimals; ``#`` lines are
comments.  Polygon files list vertices in boundary order.  A blank line
separates polygons when a file holds several.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, List, Sequence, TextIO, Tuple, Union

from .geom import InvalidInput, Point

PathLike = Union[str, Path]


def parse_points(text: str, source: str = "<text>") -> List[Point]:
    return [p for block in parse_blocks(text, source) for p in block]


def parse_blocks(text: str, source: str = "<text>") -> List[List[Point]]:
    blocks: List[List[Point]] = [[]]
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if blocks[-1]:
                blocks.append([])
            continue
        fields = line.split()
        if len(fields) != 2:
            raise InvalidInput(f"{source}:{lineno}: expected two numbers, got {raw!r}")
        try:
            blocks[-1].append((float(fields[0]), float(fields[1])))
        except ValueError:
            raise InvalidInput(f"{source}:{lineno}: not a number in {raw!r}") from None
    return [b for b in blocks if b]


def read_points(path: PathLike) -> List[Point]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_points(text, str(path))


def read_polygons(path: PathLike) -> List[List[Point]]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    return parse_blocks(text, str(path))


def format_points(points: Iterable[Sequence[float]], comments: Sequence[str] = ()) -> str:
    lines = [f"# {c}" for c in comments]
    lines += [f"{float(x)!r} {float(y)!r}" for x, y in points]
    return "\n".join(lines) + "\n"


def format_polygons(polys: Sequence[Sequence[Point]], comments: Sequence[Sequence[str]] = ()) -> str:
    parts = []
    for k, poly in enumerate(polys):
        parts.append(format_points(poly, comments[k] if k < len(comments) else ()))
    return "\n".join(parts)


def write_text(path: PathLike, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")
