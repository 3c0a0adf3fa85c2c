"""Cached zero sets shared between test modules (root solves dominate runtime)."""
from functools import lru_cache

from parzero.families import family_poly
from parzero.rootfinder import find_roots


@lru_cache(maxsize=None)
def zero_set(family: str, n: int):
    return find_roots(family_poly(family, n), family=family, n=n)
