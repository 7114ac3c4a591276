# -*- coding: utf-8 -*-
"""
Utility classes and functions.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     01.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import glob
import importlib
import inspect
import json
import logging
import os
import re

import numpy as np
import six

logger = logging.getLogger(__name__)


def is_namedtuple(obj):
    """Returns whether input is a namedtuple class or instance."""
    return (isinstance(obj, tuple) or inspect.isclass(obj) and issubclass(obj, tuple)) \
           and hasattr(obj, "_asdict") and hasattr(obj, "_fields")


def json_dumps(data, indent=2, sort_keys=True):
    """
    Returns JSON string, with numpy scalars converted to Python numbers,
    numpy arrays and sets converted to lists, and namedtuples converted to dicts.
    Returns None if data is None.
    """
    if data is None: return None
    def encoder(x):
        if isinstance(x,              set): return sorted(x)
        if isinstance(x,       np.ndarray): return x.tolist()
        if isinstance(x,      np.bool_):    return bool(x)
        if isinstance(x,      np.integer):  return int(x)
        if isinstance(x,      np.floating): return float(x)
        return None
    return json.dumps(todict(data), default=encoder, indent=indent, sort_keys=sort_keys)


def json_loads(s):
    """
    Returns deserialized JSON, with objects as ordered dictionaries.

    Returns original input if loading as JSON failed.
    """
    try:
        return None if s is None else json.loads(s, object_pairs_hook=collections.OrderedDict)
    except Exception:
        fails = getattr(json_loads, "__fails", set())
        if hash(s) not in fails: # Avoid spamming logs
            logger.warning("Failed to parse JSON from %r.", s, exc_info=True)
            setattr(json_loads, "__fails", fails | set([hash(s)]))
        return s


def keyvalues(obj):
    """
    Returns a list of keys and values, or [given object] if not applicable.

    @param   obj  mapping or namedtuple or list|set|tuple
    @return       [(key, value)] if available,
                  else original argument as list if list/set/tuple,
                  else list with a single item
    """
    if isinstance(obj, dict):
        return list(obj.items())                               # dictionary
    if is_namedtuple(obj):
        return [(k, getattr(obj, k)) for k in obj._fields]     # collections.namedtuple
    if isinstance(obj, (list, set, tuple)):
        return list(obj)                                       # list/set/tuple
    return [obj]


def todict(obj):
    """Returns namedtuples in data converted to ordered dictionaries, recursively."""
    if is_namedtuple(obj):
        return collections.OrderedDict((k, todict(v)) for k, v in keyvalues(obj))
    if isinstance(obj, dict):
        return type(obj)((k, todict(v)) for k, v in obj.items())
    if isinstance(obj, (list, tuple)):
        return [todict(x) for x in obj]
    return obj


def load_modules(package="selection"):
    """Returns plugin modules loaded from package directory, as {name: module}."""
    result = {}
    for n in sorted(glob.glob(os.path.join(os.path.dirname(__file__), package, "*"))):
        name = os.path.splitext(os.path.basename(n))[0]
        if name.startswith("__") or os.path.isfile(n) and not re.match(".*pyc?$", n) \
        or os.path.isdir(n) and not any(glob.glob(os.path.join(n, x)) for x in ("*.py", "*.pyc")):
            continue  # for n

        modulename = "%s.%s.%s" % (__package__, package, name)
        module = importlib.import_module(modulename)
        result[getattr(module, "NAME", name)] = module
    return result


def make_rng(seed=None):
    """
    Returns a numpy random Generator.

    @param   seed  integer, numpy SeedSequence, or an existing Generator returned as-is
    """
    return np.random.default_rng(seed)


def substream(master_seed, *key):
    """
    Returns a numpy SeedSequence for an independent random substream.

    Equal master seed and key always give the same stream; different keys give
    statistically independent streams.

    @param   master_seed  non-negative integer
    @param   key          non-negative integers identifying the substream
    """
    if not isinstance(master_seed, six.integer_types) or master_seed < 0:
        raise ValueError("Master seed must be a non-negative integer, got %r." % (master_seed, ))
    return np.random.SeedSequence(master_seed, spawn_key=tuple(int(k) for k in key))


def symmetrize(matrix):
    """Returns (M + Mᵀ) / 2, exactly symmetric bit for bit."""
    matrix = np.asarray(matrix, dtype=float)
    return 0.5 * (matrix + matrix.T)


__all__ = [
    "is_namedtuple", "json_dumps", "json_loads", "keyvalues", "load_modules",
    "make_rng", "substream", "symmetrize", "todict",
]
