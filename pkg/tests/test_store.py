import pytest

from cubepath.config import in_Sprime
from cubepath.paths import format_packed, verify
from cubepath.search import find_covering_path
from cubepath.store import StoreError, WitnessStore, load, loads, open_store
from cubepath.symmetry import Symmetry, apply_all, enumerate_normalized_4configs

from conftest import A


@pytest.fixture(scope="module")
def small():
    keys = [c for c in enumerate_normalized_4configs(4) if in_Sprime(c)][300:303]
    store = WitnessStore(seed=7)
    for k in keys:
        store.add(k, find_covering_path(k).certificate)
    return store


def test_roundtrip(small, tmp_path):
    p = tmp_path / "w.txt"
    small.save(p)
    back = load(p)
    assert back == small and back.seed == 7 and not back.rejected
    assert p.read_text().startswith("cubepath-witness v1 d=4 seed=7\n")


def test_tampered_trit_rejected(small):
    text = small.dumps()
    lines = text.splitlines()
    # the path line of the first record: flip one trit in its second vertex
    k = next(i for i, ln in enumerate(lines) if len(ln.split()) > 40)
    vs = lines[k].split()
    vs[1] = vs[1][:-1] + str((int(vs[1][-1]) + 1) % 3)
    lines[k] = " ".join(vs)
    back = loads("\n".join(lines) + "\n")
    assert len(back.rejected) == 1 and len(back) == len(small) - 1


def test_lookup_own_frame(small):
    key, cert = next(iter(small.entries.items()))
    assert small.lookup(key) == cert


def test_lookup_symmetry_image(small, rng):
    key = next(iter(small.entries))
    for _ in range(20):
        c = apply_all(Symmetry.random(4, rng), key)
        if rng.random() < 0.5:
            c = (c[0], c[1], c[3], c[2])
        cert = small.lookup(c)
        assert verify(cert) and (cert.start, cert.end) == c[:2] and cert.omitted == frozenset(c[2:])


def test_lookup_errors(small):
    with pytest.raises(ValueError):
        small.lookup(A)
    missing = next(c for c in enumerate_normalized_4configs(4) if in_Sprime(c) and c not in small.entries)
    with pytest.raises(StoreError, match="base case incomplete"):
        small.lookup(missing)


def test_missing_file(tmp_path):
    with pytest.raises(StoreError, match="search-base"):
        load(tmp_path / "nope.txt")
    with pytest.raises(StoreError):
        open_store(tmp_path / "other.txt")


def test_packed_records_are_filed_under_normal_form(small):
    key, cert = next(iter(small.entries.items()))
    back = loads(format_packed(cert) + "\n")
    assert key in back.entries and verify(back.entries[key])


def test_add_rejects_mismatched_key(small):
    key, cert = next(iter(small.entries.items()))
    other = next(k for k in small.entries if k != key)
    with pytest.raises(ValueError):
        WitnessStore().add(other, cert)


def test_bundled_store_covers_Sprime():
    store = open_store()
    assert not store.rejected
    need = {c for c in enumerate_normalized_4configs(4) if in_Sprime(c)}
    assert need <= set(store.entries)
