"""Content-addressed on-disk store for computed series.

One file per key ``"kind:spec:L"``.  The file holds a format line ``HSER1``
followed by the numerator and denominator coefficients as space-separated
decimal integers, one polynomial per line.  Writes go to a temporary file
in the same directory and are renamed into place, so concurrent writers
never expose a partial entry.
"""

from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from pathlib import Path

from .arith import Poly, RationalFunction
from .reps import as_spec

FORMAT = "HSER1"
ENV_VAR = "HSER_CACHE_DIR"

log = logging.getLogger(__name__)


class CacheFormatError(ValueError):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "su2hilbert"


def cache_key(kind: str, spec, L: int) -> str:
    return f"{kind}:{as_spec(spec)}:{L}"


def serialize(f: RationalFunction) -> str:
    num = " ".join(str(int(c)) for c in f.num.coeffs)
    den = " ".join(str(int(c)) for c in f.den.coeffs)
    return f"{FORMAT}\n{num}\n{den}\n"


def deserialize(text: str) -> RationalFunction:
    lines = text.split("\n")
    if len(lines) < 3 or lines[0] != FORMAT:
        raise CacheFormatError("missing or unknown format line")
    try:
        num = Poly([int(x) for x in lines[1].split()])
        den = Poly([int(x) for x in lines[2].split()])
    except ValueError as exc:
        raise CacheFormatError(f"bad coefficient: {exc}") from None
    return RationalFunction(num, den)


class SeriesCache:
    def __init__(self, root: str | os.PathLike | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def path_for(self, kind: str, spec, L: int) -> Path:
        digest = hashlib.sha256(cache_key(kind, spec, L).encode()).hexdigest()
        return self.root / digest[:2] / f"{digest}.hser"

    def get(self, kind: str, spec, L: int) -> RationalFunction | None:
        path = self.path_for(kind, spec, L)
        try:
            text = path.read_text(encoding="ascii")
        except FileNotFoundError:
            return None
        try:
            return deserialize(text)
        except (CacheFormatError, ZeroDivisionError) as exc:
            log.warning("ignoring unreadable cache entry %s (%s)", path, exc)
            return None

    def put(self, kind: str, spec, L: int, f: RationalFunction) -> None:
        path = self.path_for(kind, spec, L)
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-")
        try:
            with os.fdopen(fd, "w", encoding="ascii") as fh:
                fh.write(serialize(f))
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise
