import os
import re
import tempfile
from contextlib import contextmanager
from pathlib import Path
from typing import IO, Iterator, List, Tuple, Union

from delaylab.exceptions import ExportError

PathLike = Union[str, Path]

TOKEN = re.compile(r"\S+")


def tokens(line: str) -> List[Tuple[str, int]]:
    """Whitespace-separated tokens of a line, each with its 1-based column."""
    return [(m.group(0), m.start() + 1) for m in TOKEN.finditer(line)]


def strip_comment(line: str) -> str:
    return line.split("#", 1)[0]


@contextmanager
def atomic_open(path: PathLike) -> Iterator[IO[str]]:
    """Write to a sibling temp file and rename it over ``path`` on success."""
    path = Path(path)
    try:
        fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent or ".")
    except OSError as e:
        raise ExportError(f"cannot write {path}: {e}") from e
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            yield handle
        os.replace(tmp, path)
    except OSError as e:
        raise ExportError(f"cannot write {path}: {e}") from e
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def atomic_write(path: PathLike, text: str) -> None:
    with atomic_open(path) as handle:
        handle.write(text)
