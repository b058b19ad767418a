"""On-disk cache of enumerated families as graph6 files.

Layout: ``<root>/<key>/graphs.g6`` next to ``manifest.json``, where ``key``
is a short digest of ``(generator version, d, n)``.  The manifest records
the SHA-256 of the graph6 file and the expected count; any mismatch is
reported as corruption and the caller recomputes.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path

from ..errors import CacheCorrupt, MalformedGraph6, InvalidGraph
from ..graph_core import (
    GraphFamily,
    Provenance,
    check_parameters,
    enumerate_regular,
    graph6_decode,
    graph6_encode,
)

log = logging.getLogger(__name__)

GENERATOR_VERSION = "orderly-bfs-1"


def cache_key(n: int, d: int) -> str:
    digest = hashlib.sha256(f"{GENERATOR_VERSION}:d={d}:n={n}".encode()).hexdigest()[:12]
    return f"regular-d{d}-n{n}-{digest}"


def _paths(root: Path, n: int, d: int) -> tuple[Path, Path]:
    base = Path(root) / cache_key(n, d)
    return base / "graphs.g6", base / "manifest.json"


def load_family(root: Path, n: int, d: int) -> GraphFamily | None:
    """Return the cached family, ``None`` if absent; raise :class:`CacheCorrupt` if damaged."""
    g6, manifest = _paths(root, n, d)
    if not g6.exists() or not manifest.exists():
        return None
    try:
        meta = json.loads(manifest.read_text())
        data = g6.read_bytes()
        if hashlib.sha256(data).hexdigest() != meta["sha256"]:
            raise CacheCorrupt(f"checksum mismatch in {g6}")
        lines = data.decode("ascii").splitlines()
        graphs = tuple(graph6_decode(line, d) for line in lines if line)
    except (KeyError, ValueError, UnicodeDecodeError, MalformedGraph6, InvalidGraph) as exc:
        raise CacheCorrupt(f"unreadable cache entry {g6.parent}: {exc}") from exc
    if len(graphs) != meta.get("count") or any(g.n != n for g in graphs):
        raise CacheCorrupt(f"cache entry {g6.parent} has the wrong contents")
    return GraphFamily(d=d, n=n, graphs=graphs, provenance=Provenance.ENUMERATED)


def store_family(root: Path, family: GraphFamily) -> Path:
    g6, manifest = _paths(root, family.n, family.d)
    g6.parent.mkdir(parents=True, exist_ok=True)
    data = "".join(graph6_encode(g) + "\n" for g in family).encode("ascii")
    _atomic_write(g6, data)
    meta = {
        "generator": GENERATOR_VERSION,
        "n": family.n,
        "d": family.d,
        "count": len(family),
        "sha256": hashlib.sha256(data).hexdigest(),
    }
    _atomic_write(manifest, (json.dumps(meta, indent=2, sort_keys=True) + "\n").encode())
    return g6


def _atomic_write(path: Path, data: bytes) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name + ".")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def cached_enumeration(root: Path, n: int, d: int, allow_long_runs: bool = False,
                       use_cache: bool = True) -> GraphFamily:
    check_parameters(n, d, allow_long_runs)
    if use_cache:
        try:
            family = load_family(root, n, d)
        except CacheCorrupt as exc:
            log.warning("%s; recomputing", exc)
            family = None
        if family is not None:
            log.info("loaded %d graphs (n=%d, d=%d) from cache", len(family), n, d)
            return family
    family = enumerate_regular(n, d, allow_long_runs=allow_long_runs)
    if use_cache:
        try:
            store_family(root, family)
        except OSError as exc:
            log.warning("could not write cache entry: %s", exc)
    return family
