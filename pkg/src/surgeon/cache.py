"""Content-addressed result cache for the command line tools.

Keys hash the canonical form of the input together with the tool
version, so upgrading the package silently invalidates stale entries.
Values are opaque bytes; a hit must return exactly what was stored, and
the store is safe under concurrent writers (write to a temp file, then
atomically rename into place).  Any I/O failure downgrades to a warning
on stderr and the caller simply recomputes.
"""

import hashlib
import os
import sys
import tempfile


def tool_version():
    from surgeon import __version__

    return __version__


def cache_dir(explicit=None):
    """Resolve the cache directory: flag beats environment beats default."""
    if explicit:
        return explicit
    env = os.environ.get("SURGEON_CACHE")
    if env:
        return env
    home = os.path.expanduser("~")
    return os.path.join(home, ".cache", "surgeon")


def key_for(kind, payload):
    """Content hash of a computation request.

    kind names the computation (and its output schema); payload is the
    canonical text of the input.  The tool version is folded in so that
    results never leak across versions.
    """
    h = hashlib.sha256()
    h.update(("%s\x00%s\x00" % (kind, tool_version())).encode("utf-8"))
    h.update(payload.encode("utf-8"))
    return h.hexdigest()


def _path(directory, key):
    return os.path.join(directory, key[:2], key[2:])


def cache_get(key, directory=None):
    """Stored bytes for key, or None on a miss (or unreadable entry)."""
    directory = cache_dir(directory)
    try:
        with open(_path(directory, key), "rb") as fh:
            return fh.read()
    except OSError:
        return None


def cache_put(key, data, directory=None):
    """Store bytes under key; atomic and concurrency-safe.

    Returns True when the entry landed.  Failures are reported on
    stderr and swallowed so computation can proceed uncached.
    """
    directory = cache_dir(directory)
    target = _path(directory, key)
    try:
        os.makedirs(os.path.dirname(target), exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=os.path.dirname(target), suffix=".tmp")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(data)
            os.replace(tmp, target)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
        return True
    except OSError as exc:
        print("surgeon: cache write failed (%s); continuing uncached" % exc,
              file=sys.stderr)
        return False
