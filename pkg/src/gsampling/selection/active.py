# -*- coding: utf-8 -*-
"""
Uncertainty sampling: the next node is the one whose observation
is least predictable under the current posterior.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     05.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import logging

from .. import api, sampler

logger = logging.getLogger(__name__)


## Strategy name as used in scenario configuration
NAME = "active"


class Strategy(api.Strategy):
    """Picks the node of largest predictive variance, lowest index on ties."""

    NAME = NAME


    def select(self, posterior, params, rng):
        """
        Returns the index of the node of largest predictive variance.

        @param   posterior  current inference.Posterior
        @param   params     current inference.HyperParams
        @param   rng        unused, for interface compatibility
        """
        return sampler.select_next(posterior, params)


__all__ = ["NAME", "Strategy"]
