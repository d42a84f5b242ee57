"""Persistent witness set for the d=4 base case.

File layout: a header ``cubepath-witness v1 d=4 seed=<n>``, an engine
comment, then one record per normalized configuration: the configuration
line followed by a four-line certificate in that configuration's frame.
Nothing read from disk is trusted; every record is re-verified on load.
"""

from __future__ import annotations

import logging
import os
import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Optional

from .config import in_Sprime
from .paths import PathCertificate, apply_certificate, format_certificate, iter_records, verify
from .symmetry import format_config, inverse, is_normalized, normalize, parse_config

log = logging.getLogger(__name__)

ENGINE_VERSION = "cubepath-search 1"
DEFAULT_FILENAME = "witnesses-d4.txt"
_HEADER = re.compile(r"^cubepath-witness v1 d=(\d+) seed=(-?\d+|none)\s*$")


class StoreError(LookupError):
    pass


@dataclass
class WitnessStore:
    entries: dict = field(default_factory=dict)
    seed: Optional[int] = None
    engine: str = ENGINE_VERSION
    rejected: list = field(default_factory=list)
    source: Optional[str] = None

    def __len__(self):
        return len(self.entries)

    def __contains__(self, c):
        return normalize(c)[0] in self.entries

    def __eq__(self, other):
        if not isinstance(other, WitnessStore):
            return NotImplemented
        return self.entries == other.entries and self.seed == other.seed

    @classmethod
    def from_ledger(cls, ledger, seed: Optional[int] = None) -> "WitnessStore":
        return cls(dict(ledger.covered), seed)

    def add(self, key, cert: PathCertificate) -> None:
        key = tuple(tuple(v) for v in key)
        _check_entry(key, cert)
        self.entries[key] = cert

    def lookup(self, c) -> PathCertificate:
        """A verified certificate for the 4-configuration ``c`` of Q(4)."""
        c = tuple(tuple(v) for v in c)
        if len(c[0]) != 4:
            raise ValueError(f"the witness store holds d=4 configurations, got d={len(c[0])}")
        if not in_Sprime(c):
            raise ValueError(f"{format_config(c)} is not in S'(4)")
        key, sym, _ = normalize(c)
        cert = self.entries.get(key)
        if cert is None:
            where = f" ({self.source})" if self.source else ""
            raise StoreError(f"base case incomplete: no witness for {format_config(key)}{where}")
        out = apply_certificate(inverse(sym), cert)
        v = verify(out)
        if not v or out.start != c[0] or out.end != c[1] or out.omitted != frozenset(c[2:]):
            raise AssertionError(f"stored witness for {format_config(key)} does not map back: {v.reason}")
        return out

    def dumps(self) -> str:
        seed = "none" if self.seed is None else str(self.seed)
        parts = [f"cubepath-witness v1 d=4 seed={seed}\n", f"# engine {self.engine}\n"]
        for key in sorted(self.entries):
            parts.append(format_config(key) + "\n")
            parts.append(format_certificate(self.entries[key]))
        return "".join(parts)

    def save(self, path) -> None:
        tmp = f"{path}.tmp"
        with open(tmp, "w") as fh:
            fh.write(self.dumps())
        os.replace(tmp, path)


def _check_entry(key, cert):
    if not is_normalized(key):
        raise ValueError(f"{format_config(key)} is not normalized")
    v = verify(cert)
    if not v:
        raise ValueError(v.reason)
    if (cert.start, cert.end) != key[:2] or cert.omitted != frozenset(key[2:]):
        raise ValueError(f"certificate does not match key {format_config(key)}")


def loads(text: str, source: Optional[str] = None) -> WitnessStore:
    store = WitnessStore(source=source)
    first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
    m = _HEADER.match(first)
    if m:
        if int(m.group(1)) != 4:
            raise ValueError(f"witness file is for d={m.group(1)}, expected d=4")
        store.seed = None if m.group(2) == "none" else int(m.group(2))
    for ln in text.splitlines()[:3]:
        if ln.startswith("# engine "):
            store.engine = ln[len("# engine "):].strip()
    for rec in iter_records(text):
        if rec.cert is None:
            store.rejected.append((rec.line, rec.error))
            continue
        cert = rec.cert
        try:
            if len(cert.omitted) != 2 or cert.dim != 4:
                raise ValueError("not an almost Hamilton path of Q(4)")
            if rec.key is None:
                # packed records carry no key: file them under their normal form
                key, sym, _ = normalize(cert.config)
                cert = apply_certificate(sym, cert)
            else:
                key = parse_config(rec.key)
            store.add(key, cert)
        except ValueError as exc:
            store.rejected.append((rec.line, str(exc)))
    for line, why in store.rejected:
        log.warning("rejected witness record at line %d: %s", line, why)
    return store


def load(path) -> WitnessStore:
    """Read and re-verify a witness file."""
    try:
        with open(path) as fh:
            text = fh.read()
    except FileNotFoundError:
        raise StoreError(
            f"witness file {path} not found; run the base-case search first "
            f"(cubepath search-base --d 4 --out {path})"
        ) from None
    return loads(text, str(path))


_bundled: Optional[WitnessStore] = None


def bundled() -> WitnessStore:
    """The witness set shipped with the package, verified once per process."""
    global _bundled
    if _bundled is None:
        ref = resources.files("cubepath") / "data" / DEFAULT_FILENAME
        if not ref.is_file():
            raise StoreError("no bundled witness file; run the base-case search first")
        _bundled = loads(ref.read_text(), f"bundled {DEFAULT_FILENAME}")
    return _bundled


def open_store(path=None) -> WitnessStore:
    """Load ``path``; when it is None or is the default name and absent,
    use the bundled witness set."""
    if path is None:
        return bundled()
    if not os.path.exists(path) and os.path.basename(str(path)) == DEFAULT_FILENAME:
        log.info("%s not found, using the bundled witness set", path)
        return bundled()
    return load(path)
