# -*- coding: utf-8 -*-
"""
Random sampling baseline: nodes drawn uniformly, with replacement,
estimated with the same EM and posterior pipeline as active sampling.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     08.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import logging

from .. import api

logger = logging.getLogger(__name__)


## Strategy name as used in scenario configuration
NAME = "random"


class Strategy(api.Strategy):
    """Picks a uniformly random node, ignoring the posterior."""

    NAME = NAME


    def select(self, posterior, params, rng):
        """
        Returns a uniformly random node index.

        @param   posterior  current inference.Posterior, determines node count
        @param   params     unused, for interface compatibility
        @param   rng        numpy random Generator
        """
        return int(rng.integers(len(posterior.mu)))


__all__ = ["NAME", "Strategy"]
