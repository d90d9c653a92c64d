"""Content-addressed cache: keys, storage layout, failure modes."""

import os

from surgeon.cache import cache_dir, cache_get, cache_put, key_for


def test_key_is_stable_and_discriminating():
    k1 = key_for("alex", "payload")
    assert k1 == key_for("alex", "payload")
    assert len(k1) == 64
    assert k1 != key_for("alex", "payload2")
    assert k1 != key_for("h1", "payload")


def test_dir_resolution_order(tmp_path, monkeypatch):
    monkeypatch.delenv("SURGEON_CACHE", raising=False)
    assert cache_dir(str(tmp_path)) == str(tmp_path)
    monkeypatch.setenv("SURGEON_CACHE", "/env/dir")
    assert cache_dir(None) == "/env/dir"
    assert cache_dir(str(tmp_path)) == str(tmp_path)
    monkeypatch.delenv("SURGEON_CACHE")
    assert cache_dir(None).endswith(os.path.join(".cache", "surgeon"))


def test_put_then_get_roundtrip(tmp_path):
    key = key_for("alex", "x")
    where = str(tmp_path)
    assert cache_get(key, where) is None
    assert cache_put(key, b"some bytes\n", where) is True
    assert cache_get(key, where) == b"some bytes\n"
    # sharded layout: two-character prefix directory
    assert (tmp_path / key[:2] / key[2:]).is_file()


def test_put_overwrites_atomically(tmp_path):
    key = key_for("alex", "y")
    where = str(tmp_path)
    cache_put(key, b"first", where)
    cache_put(key, b"second", where)
    assert cache_get(key, where) == b"second"
    leftovers = [p for p in (tmp_path / key[:2]).iterdir()
                 if p.name.endswith(".tmp")]
    assert leftovers == []


def test_put_failure_is_soft(tmp_path, capsys):
    target = tmp_path / "blocked"
    target.write_text("a file where a directory must go")
    key = key_for("alex", "z")
    ok = cache_put(key, b"data", str(target))
    assert ok is False
    err = capsys.readouterr().err
    assert "cache write failed" in err


def test_get_on_unreadable_is_none(tmp_path):
    assert cache_get(key_for("alex", "nothing"), str(tmp_path / "void")) is None
