"""Disk cache for coset tables.

Tables are stored as versioned JSON keyed by a hash of the Cartan matrix,
the parabolic subset, the length bound, and the schema version.  Entries
with a stale schema or damaged content are ignored (the table is recomputed)
rather than misread; matrices are rebuilt from the stored words on load, so
a round trip reproduces the table exactly.
"""

from __future__ import annotations

import hashlib
import json
import os
import warnings

from .cartan import CartanMatrix
from .errors import CacheError
from .weyl import CosetEntry, CosetTable, element_of_word, enumerate_cosets, mat_vec

SCHEMA = "coset-table/1"
ENV_VAR = "FLAGCALC_CACHE_DIR"


def table_to_json(table: CosetTable) -> dict:
    entries = [
        {"m": e.m, "i": e.i, "word": list(e.word)}
        for e in table.entries()
    ]
    group = table.cartan.label or table.cartan.to_json()
    return {
        "schema": SCHEMA,
        "group": group,
        "cartan": table.cartan.to_json(),
        "K": sorted(table.k_set),
        "max_length": table.max_length,
        "entries": entries,
    }


def table_from_json(obj: dict, cartan: CartanMatrix) -> CosetTable:
    if obj.get("schema") != SCHEMA:
        raise CacheError(f"unsupported schema {obj.get('schema')!r}")
    if obj.get("cartan", {}).get("entries") != [list(r) for r in cartan.entries]:
        raise CacheError("cached Cartan matrix differs")
    k_set = frozenset(obj["K"])
    layers: list[list[CosetEntry]] = []
    vector_index: dict = {}
    v0 = tuple(1 if j + 1 in k_set else 0 for j in range(cartan.rank))
    for rec in obj["entries"]:
        m, i, word = rec["m"], rec["i"], tuple(rec["word"])
        if len(word) != m:
            raise CacheError(f"entry w_{{{m},{i}}} has a word of length {len(word)}")
        while len(layers) <= m:
            layers.append([])
        if i != len(layers[m]) + 1:
            raise CacheError(f"entry w_{{{m},{i}}} out of order")
        matrix = element_of_word(cartan, word)
        layers[m].append(CosetEntry(m, i, word, matrix))
        vec = mat_vec(matrix, v0)
        if vec in vector_index:
            raise CacheError(f"duplicate coset at w_{{{m},{i}}}")
        vector_index[vec] = (m, i)
    if not layers or len(layers[0]) != 1:
        raise CacheError("missing identity entry")
    return CosetTable(cartan, k_set, layers, obj.get("max_length"), vector_index)


def cache_key(cartan: CartanMatrix, k_set, max_length: int | None) -> str:
    payload = json.dumps(
        {
            "schema": SCHEMA,
            "cartan": [list(r) for r in cartan.entries],
            "K": sorted(k_set),
            "max_length": max_length,
        },
        sort_keys=True,
    )
    return hashlib.sha256(payload.encode()).hexdigest()[:24]


def cache_dir_from_env() -> str | None:
    return os.environ.get(ENV_VAR) or None


def store_table(table: CosetTable, cache_dir: str) -> str:
    os.makedirs(cache_dir, exist_ok=True)
    key = cache_key(table.cartan, table.k_set, table.max_length)
    path = os.path.join(cache_dir, f"{key}.json")
    tmp = path + ".tmp"
    try:
        with open(tmp, "w") as fh:
            json.dump(table_to_json(table), fh)
        os.replace(tmp, path)
    except OSError as exc:
        raise CacheError(f"cannot write cache file {path}: {exc}") from exc
    return path


def load_table(cartan: CartanMatrix, k_set, max_length: int | None,
               cache_dir: str) -> CosetTable | None:
    key = cache_key(cartan, k_set, max_length)
    path = os.path.join(cache_dir, f"{key}.json")
    if not os.path.exists(path):
        return None
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return table_from_json(obj, cartan)
    except (OSError, ValueError, KeyError, TypeError, CacheError) as exc:
        warnings.warn(f"ignoring unusable cache file {path}: {exc}")
        return None


def get_table(cartan: CartanMatrix, k_set, max_length: int | None = None,
              cache_dir: str | None = None, limit: int | None = None) -> CosetTable:
    """Load the table from cache if possible, else compute (and store it)."""
    if cache_dir is None:
        cache_dir = cache_dir_from_env()
    if cache_dir:
        table = load_table(cartan, k_set, max_length, cache_dir)
        if table is not None:
            return table
    kwargs = {} if limit is None else {"limit": limit}
    table = enumerate_cosets(cartan, k_set, max_length, **kwargs)
    if cache_dir:
        store_table(table, cache_dir)
    return table
