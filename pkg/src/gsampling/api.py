# -*- coding: utf-8 -*-
"""
Public interface: error classes, node selection strategy base and broker.

Selection strategies are plugin modules under the `selection` package,
each providing a Strategy subclass, looked up by name via strategy() or
listed via strategies().

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     05.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import logging

from . import util

logger = logging.getLogger(__name__)


def strategy(name):
    """
    Returns a node selection Strategy instance.

    @param   name  strategy name like `"active"` or `"random"` (case-insensitive)
    """
    return Strategies.factory(name)


def strategies():
    """Returns names of available node selection strategies, sorted."""
    return sorted(Strategies.get_modules())



class Error(Exception):
    """Base class for all gsampling errors."""


class ParameterError(Error, ValueError):
    """Invalid argument value or combination."""


class ConfigError(ParameterError):
    """Invalid or unknown configuration entry."""


class ConstructionError(Error, RuntimeError):
    """Random construction failed to satisfy its constraints within the retry budget."""


class NumericalError(Error, ArithmeticError):
    """Eigensolver or positive-definite factorization failure."""



class Strategy(object):
    """
    Abstract base for node selection strategies.

    Strategies are stateless: all randomness comes from the generator
    given by the caller, so concurrent trials can share one instance.
    """

    ## Strategy name as used in scenario configuration
    NAME = None


    def first(self, prior_variances, rule, rng):
        """
        Returns the index of the first node to sample, before any observation.

        @param   prior_variances  prior variance per node, up to a common scale
        @param   rule             "max-prior-variance" for the node of largest prior variance
                                  (lowest index on ties), or "random" for a uniform draw
        @param   rng              numpy random Generator
        """
        if "random" == rule:
            return int(rng.integers(len(prior_variances)))
        return int(prior_variances.argmax())


    def select(self, posterior, params, rng):
        """
        Returns the index of the next node to sample.

        @param   posterior  current inference.Posterior
        @param   params     current inference.HyperParams
        @param   rng        numpy random Generator
        """
        raise NotImplementedError()


    def __repr__(self):
        return "%s(%r)" % (self.__class__.__name__, self.NAME)



# ---------------------------------- detail ----------------------------------
# \cond HIDDENSYMBOLS
class Strategies(object):
    """Node selection strategy broker."""

    ## Strategy modules, as {"active": active submodule, ..}
    MODULES = None

    ## Strategy instances, as {name: Strategy}
    INSTANCES = collections.OrderedDict()

    @classmethod
    def factory(cls, name):
        """Returns Strategy instance for name, raises ParameterError if unknown."""
        modules = cls.get_modules()
        key = name.lower() if hasattr(name, "lower") else name
        if key not in modules:
            raise ParameterError("Unknown strategy %r, expected one of %s." %
                                 (name, ", ".join(sorted(modules))))
        if key not in cls.INSTANCES:
            cls.INSTANCES[key] = modules[key].Strategy()
        return cls.INSTANCES[key]

    @classmethod
    def get_modules(cls):
        """Returns strategy modules, loading them if not already loaded."""
        if cls.MODULES is None: cls.MODULES = util.load_modules("selection")
        return cls.MODULES
# \endcond


__all__ = [
    "ConfigError", "ConstructionError", "Error", "NumericalError", "ParameterError",
    "Strategy", "strategy", "strategies",
]
