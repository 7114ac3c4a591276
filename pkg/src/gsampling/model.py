# -*- coding: utf-8 -*-
"""
Signal and observation model: ground-truth graph signals drawn from the
Gaussian random field prior N(0, α⁻¹H⁻²), and noisy single-node observations.

Signals are float arrays with one value per node.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     04.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import logging
import numbers

import numpy as np

from . import api, util

logger = logging.getLogger(__name__)


## How SNR is defined, recorded in experiment metadata
SNR_DEFINITION = "10*log10(P / (1/beta)), P = trace(inv(alpha*H^2)) / N, " \
                 "the expected per-node signal power under the prior"


class NoiseModel(collections.namedtuple("NoiseModel", ("beta", ))):
    """Zero-mean Gaussian observation noise with precision beta."""
    __slots__ = ()

    @property
    def variance(self):
        """Noise variance 1 / beta."""
        return 1. / self.beta


def noise_model(beta):
    """Returns NoiseModel, raises ParameterError unless beta is positive and finite."""
    if not isinstance(beta, numbers.Real) or not 0 < beta < np.inf:
        raise api.ParameterError("Noise precision must be positive and finite, got %r." % (beta, ))
    return NoiseModel(float(beta))


def sample_prior(filt, alpha, seed=None, size=None):
    """
    Returns signal drawn from the prior N(0, α⁻¹H⁻²).

    Uses the exact spectral square root f = U diag(1 / (√α h)) z, z ~ N(0, I).

    @param   filt   GraphFilter
    @param   alpha  signal precision, positive
    @param   seed   integer, numpy SeedSequence or Generator
    @param   size   number of independent draws, returned as rows if given
    @return         array of length n, or size x n if size given
    """
    if not alpha > 0:
        raise api.ParameterError("Alpha must be positive, got %r." % (alpha, ))
    rng = util.make_rng(seed)
    U, scale = filt.spectrum.eigenvectors, 1. / (np.sqrt(alpha) * np.asarray(filt.response))
    if size is None:
        return U.dot(scale * rng.standard_normal(filt.n))
    return (rng.standard_normal((size, filt.n)) * scale).dot(U.T)


def observe(f, node, noise, seed=None, size=None):
    """
    Returns noisy observation f[node] + w, w ~ N(0, 1/β).

    @param   f      signal array
    @param   node   node index
    @param   noise  NoiseModel
    @param   seed   integer, numpy SeedSequence or Generator
    @param   size   number of independent observations, returned as array if given
    @throws  ParameterError  if node is out of range
    """
    if not isinstance(node, numbers.Integral) or not 0 <= node < len(f):
        raise api.ParameterError("Node index must be in [0, %s), got %r." % (len(f), node))
    rng = util.make_rng(seed)
    w = rng.normal(0., np.sqrt(noise.variance), size=size)
    return f[node] + w if size is not None else float(f[node] + w)


def signal_power(filt, alpha):
    """Returns expected per-node signal power trace(α⁻¹H⁻²) / N under the prior."""
    if not alpha > 0:
        raise api.ParameterError("Alpha must be positive, got %r." % (alpha, ))
    return float(np.mean(1. / (alpha * np.asarray(filt.response) ** 2)))


def beta_for_snr(filt, alpha, snr_db):
    """
    Returns noise precision giving the target SNR.

    SNR is the expected per-node signal power over noise variance,
    so β = 10^(snr_db / 10) / P with P = trace(α⁻¹H⁻²) / N.

    @param   filt    GraphFilter
    @param   alpha   signal precision, positive
    @param   snr_db  signal-to-noise ratio in decibels
    """
    return 10. ** (snr_db / 10.) / signal_power(filt, alpha)


__all__ = [
    "SNR_DEFINITION", "NoiseModel",
    "beta_for_snr", "noise_model", "observe", "sample_prior", "signal_power",
]
