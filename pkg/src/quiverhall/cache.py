"""Append-only JSON-lines store of certified Hall polynomials, keyed by "type|L|M|N"."""
import json
import math
import os
import random

from .hall import PRIME_POWERS, HallPolynomial, hall_number
from .laurent import QPoly
from .reps import parse_module, type_data

ENV_VAR = "QUIVERHALL_CACHE"


class CorruptCache(RuntimeError):
    pass


def _record(key, hp):
    return {"key": key, "coeffs": list(hp.poly.c), "samples": list(hp.samples), "heldout": list(hp.heldout)}


def _line(rec):
    return json.dumps(rec, sort_keys=True, separators=(",", ":"))


class PolyCache:
    """In-memory view of the cache file; writes append one line per new key."""

    def __init__(self, path=None):
        self.path = path
        self.records = {}
        if path and os.path.exists(path):
            with open(path) as fh:
                for n, line in enumerate(fh, 1):
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        rec = json.loads(line)
                        self.records[rec["key"]] = rec
                    except (ValueError, KeyError) as e:
                        raise CorruptCache(f"{path}:{n}: unreadable record ({e})")

    @classmethod
    def from_env(cls, path=None):
        return cls(path or os.environ.get(ENV_VAR))

    def get(self, key):
        rec = self.records.get(key)
        if rec is None:
            return None
        return HallPolynomial(QPoly(rec["coeffs"]), tuple(rec["samples"]), tuple(rec["heldout"]))

    def put(self, key, hp):
        if key in self.records:
            return
        rec = _record(key, hp)
        self.records[key] = rec
        if self.path:
            with open(self.path, "a") as fh:
                fh.write(_line(rec) + "\n")

    def keys(self):
        return sorted(self.records)

    def compact(self):
        """Rewrite the file with one record per key, sorted by key."""
        if self.path:
            with open(self.path, "w") as fh:
                for k in self.keys():
                    fh.write(_line(self.records[k]) + "\n")

    def verify(self, fraction=0.1, seed=0):
        """Re-evaluate a random fraction of records at a prime power not used to build them."""
        keys = self.keys()
        if not keys:
            return []
        rng = random.Random(seed)
        picked = sorted(rng.sample(keys, max(1, math.ceil(fraction * len(keys)))))
        for key in picked:
            rec = self.records[key]
            label, L, M, N = key.split("|")
            data = type_data(label)
            L, M, N = (parse_module(data, x) for x in (L, M, N))
            used = set(rec["samples"]) | set(rec["heldout"])
            q = next(x for x in PRIME_POWERS if x not in used)
            if QPoly(rec["coeffs"])(q) != hall_number(L, M, N, q):
                raise CorruptCache(f"record {key} does not match a fresh count at q={q}")
        return picked
