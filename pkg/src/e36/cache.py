"""Content-addressed result cache for suite runs.

Keys are SHA-256 digests of the canonical JSON of the inputs that
determine a result (check id and truncation bounds); values are stored
as canonical JSON next to a digest of their own bytes, so a hit
reproduces byte-identical output and tampering is detected.  Writes go
through a temporary file and an atomic rename so concurrent readers
never see partial content.
"""

import hashlib
import json
import os
import tempfile


class CacheCorrupt(RuntimeError):
    """A cache file exists but its payload fails the integrity check."""


def canonical_bytes(value):
    return json.dumps(value, sort_keys=True, separators=(",", ":"),
                      ensure_ascii=True).encode("ascii")


def cache_key(material):
    """Address of a result: digest of the canonical form of its inputs."""
    return hashlib.sha256(canonical_bytes(material)).hexdigest()


def _path(cache_dir, key):
    return os.path.join(cache_dir, key + ".json")


def store(cache_dir, key, value):
    """Write a JSON-serializable value under the key, atomically."""
    os.makedirs(cache_dir, exist_ok=True)
    payload = canonical_bytes(value)
    doc = {"digest": hashlib.sha256(payload).hexdigest(), "value": value}
    fd, tmp = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(canonical_bytes(doc))
        os.replace(tmp, _path(cache_dir, key))
    finally:
        if os.path.exists(tmp):
            os.unlink(tmp)


def load(cache_dir, key):
    """The stored value, or None on a miss; CacheCorrupt on tampering."""
    path = _path(cache_dir, key)
    try:
        with open(path, "rb") as fh:
            blob = fh.read()
    except (FileNotFoundError, NotADirectoryError):
        return None
    try:
        doc = json.loads(blob)
        payload = canonical_bytes(doc["value"])
        if hashlib.sha256(payload).hexdigest() != doc["digest"]:
            raise KeyError("digest")
    except (ValueError, KeyError, TypeError) as exc:
        raise CacheCorrupt("cache file %s failed verification" % path) from exc
    return doc["value"]
