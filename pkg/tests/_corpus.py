"""Shared, cached catalog objects so heavy computations run once per session."""
import functools

from algebroid.constructions import builtin

HOPF = ["qc2", "sweedler-h4", "f5c5", "lu-dualnumbers-q", "lu-ut2-q", "lu-m2-q", "lu-m2-f5"]
SMALL = ["qc2", "sweedler-h4", "f5c5", "lu-dualnumbers-q", "lu-ut2-q"]


@functools.lru_cache(maxsize=None)
def get(name):
    return builtin(name)
