# -*- coding: utf-8 -*-
"""
Online sampling loop: observe a node, re-estimate precisions by EM, update the
posterior, pick the next node, until the sample budget or the stopping rule.

The node picking is delegated to a selection strategy, "active" taking the node
of largest predictive variance, "random" a uniformly random node.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     08.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import logging
import numbers

import numpy as np
import six

from . import api, inference, model, spectral, util

logger = logging.getLogger(__name__)


## First node choices before any observation
FIRST_NODE_RULES = ("max-prior-variance", "random")

## Stop reasons in TrialTrace
STOP_BUDGET, STOP_THRESHOLD = "budget", "threshold"

## Smallest estimated signal energy μᵀμ for which the stopping ratio is evaluated
MIN_ENERGY = 1e-12


class Context(collections.namedtuple("Context", ("graph", "filter"))):
    """Graph and filter shared read-only by all trials of a scenario."""
    __slots__ = ()


class SamplerConfig(collections.namedtuple("SamplerConfig", (
    "M_max", "stop_c", "em_tol", "em_max_iter", "first_node_rule",
    "min_samples_before_stop", "init_params", "fixed_params",
))):
    """
    Sampling loop settings.

    @param   M_max                    maximum number of observations
    @param   stop_c                   threshold for tr(C) / μᵀμ, or None to disable stopping
    @param   em_tol                   EM relative tolerance
    @param   em_max_iter              EM iteration cap
    @param   first_node_rule          one of FIRST_NODE_RULES
    @param   min_samples_before_stop  stopping rule is not evaluated below this sample count
    @param   init_params              initial HyperParams for EM
    @param   fixed_params             HyperParams to use throughout instead of EM, or None
    """
    __slots__ = ()


class StepRecord(collections.namedtuple("StepRecord", (
    "t", "node", "y", "alpha_hat", "beta_hat", "em_iters", "trace_C", "rel_error",
))):
    """One step of a sampling trial."""
    __slots__ = ()


class TrialTrace(collections.namedtuple("TrialTrace", (
    "method", "records", "stop_reason", "estimate",
))):
    """
    Outcome of a sampling trial.

    @param   method       strategy name
    @param   records      [StepRecord], t = 1, 2, ..
    @param   stop_reason  STOP_BUDGET or STOP_THRESHOLD
    @param   estimate     final MMSE estimate μ
    """
    __slots__ = ()


## Trace CSV columns
TRACE_COLUMNS = StepRecord._fields


def sampler_config(M_max, stop_c=None, em_tol=inference.EM_TOL,
                   em_max_iter=inference.EM_MAX_ITER, first_node_rule=FIRST_NODE_RULES[0],
                   min_samples_before_stop=5, init_params=None, fixed_params=None):
    """
    Returns SamplerConfig, validated.

    @param   init_params   initial HyperParams or (alpha, beta), defaults to (1, 1)
    @param   fixed_params  HyperParams or (alpha, beta) to bypass EM with, if any
    @throws  ParameterError  on invalid values
    """
    if not isinstance(M_max, six.integer_types) or M_max < 1:
        raise api.ParameterError("M_max must be a positive integer, got %r." % (M_max, ))
    if stop_c is not None and not (isinstance(stop_c, numbers.Real) and stop_c > 0):
        raise api.ParameterError("Stopping threshold must be positive or None, got %r."
                                 % (stop_c, ))
    if not (isinstance(em_tol, numbers.Real) and em_tol > 0):
        raise api.ParameterError("EM tolerance must be positive, got %r." % (em_tol, ))
    if not isinstance(em_max_iter, six.integer_types) or em_max_iter < 1:
        raise api.ParameterError("EM iteration cap must be a positive integer, got %r."
                                 % (em_max_iter, ))
    if first_node_rule not in FIRST_NODE_RULES:
        raise api.ParameterError("First node rule must be one of %s, got %r."
                                 % (", ".join(FIRST_NODE_RULES), first_node_rule))
    if not isinstance(min_samples_before_stop, six.integer_types) or min_samples_before_stop < 0:
        raise api.ParameterError("Minimum samples before stop must be a non-negative integer, "
                                 "got %r." % (min_samples_before_stop, ))
    init_params = _params("Initial parameters", (1., 1.) if init_params is None else init_params)
    if fixed_params is not None: fixed_params = _params("Fixed parameters", fixed_params)
    return SamplerConfig(M_max, stop_c, em_tol, em_max_iter, first_node_rule,
                         min_samples_before_stop, init_params, fixed_params)


def select_next(post, params):
    """
    Returns node of largest predictive variance diag(C) + 1/β, lowest index on ties.

    The constant 1/β does not affect the choice, so it is made on diag(C) alone.
    """
    return int(np.argmax(post.variances))


def stopping_reached(post, config, samples):
    """
    Returns whether tr(C) / μᵀμ <= stop_c.

    Always false if stopping is disabled, with fewer than min_samples_before_stop
    samples, or with estimated signal energy μᵀμ not above MIN_ENERGY.

    @param   post     current Posterior
    @param   config   SamplerConfig
    @param   samples  current sample count, checked against min_samples_before_stop
    """
    if config.stop_c is None or samples < config.min_samples_before_stop:
        return False
    energy = float(post.mu.dot(post.mu))
    return energy > MIN_ENERGY and np.trace(post.C) / energy <= config.stop_c


def relative_error(estimate, truth):
    """
    Returns ‖estimate - truth‖ / ‖truth‖.

    @throws  ParameterError  on length mismatch or zero-norm truth
    """
    estimate, truth = np.asarray(estimate, dtype=float), np.asarray(truth, dtype=float)
    if estimate.shape != truth.shape:
        raise api.ParameterError("Estimate and truth lengths differ: %s vs %s."
                                 % (estimate.shape, truth.shape))
    norm = np.linalg.norm(truth)
    if not norm > 0:
        raise api.ParameterError("Relative error is undefined for zero-norm truth.")
    return float(np.linalg.norm(estimate - truth) / norm)


def run_active(context, truth, noise, config, seed=None):
    """
    Returns TrialTrace of sampling by largest predictive variance.

    @param   context  Context with graph and filter
    @param   truth    ground-truth signal
    @param   noise    model.NoiseModel
    @param   config   SamplerConfig
    @param   seed     integer, numpy SeedSequence or Generator
    """
    return run_trial(context, truth, noise, config, seed, "active")


def run_random(context, truth, noise, config, seed=None):
    """
    Returns TrialTrace of sampling uniformly random nodes, with replacement.
    Arguments as in run_active().
    """
    return run_trial(context, truth, noise, config, seed, "random")


def run_trial(context, truth, noise, config, seed, method):
    """
    Returns TrialTrace of the sampling loop with given selection strategy.

    Observation noise and node selection draw from separate random streams
    derived from seed, so strategies given the same seed see the same
    first observation.

    @param   method  strategy name
    @throws  NumericalError  if inference fails, with the trial step in message
    """
    strategy, filt = api.strategy(method), context.filter
    truth = np.asarray(truth, dtype=float)
    if truth.shape != (filt.n, ):
        raise api.ParameterError("Signal length %s does not match graph of %s nodes."
                                 % (truth.shape, filt.n))
    obs_rng, select_rng = (util.make_rng(int(x)) for x in
                           util.make_rng(seed).integers(2**62, size=2))

    log, records = inference.ObservationLog(filt.n), []
    params = config.fixed_params or config.init_params
    node = strategy.first(spectral.prior_variances(filt), config.first_node_rule, select_rng)
    post, stop_reason = None, STOP_BUDGET
    for t in range(1, config.M_max + 1):
        y = model.observe(truth, node, noise, obs_rng)
        log.append(node, y)
        try:
            if config.fixed_params:
                post, iterations = inference.posterior(filt.H2, log, params), 0
            else:
                em = inference.em_fit(filt.H2, log, params, config.em_tol, config.em_max_iter)
                params, post, iterations = em.params, em.posterior, em.iterations
        except api.NumericalError as e:
            logger.error("Aborting %s trial at step %s (node %s, alpha %.6g, beta %.6g): %s",
                         method, t, node, params.alpha, params.beta, e)
            raise api.NumericalError("%s trial aborted at step %s: %s" % (method, t, e))

        records.append(StepRecord(t, node, y, params.alpha, params.beta, iterations,
                                  float(np.trace(post.C)), relative_error(post.mu, truth)))
        if stopping_reached(post, config, t):
            stop_reason = STOP_THRESHOLD
            break  # for t
        node = strategy.select(post, params, select_rng)

    logger.debug("Finished %s trial after %s samples (%s), relative error %.6g.",
                 method, len(records), stop_reason, records[-1].rel_error)
    return TrialTrace(method, records, stop_reason, post.mu)


def _params(label, value):
    """Returns HyperParams from (alpha, beta) pair, raises ParameterError on other input."""
    if isinstance(value, six.string_types) or not isinstance(value, (list, tuple)) \
    or len(value) != 2:
        raise api.ParameterError("%s must be a pair of (alpha, beta), got %r." % (label, value))
    return inference.hyper_params(*value)


__all__ = [
    "FIRST_NODE_RULES", "STOP_BUDGET", "STOP_THRESHOLD", "TRACE_COLUMNS",
    "Context", "SamplerConfig", "StepRecord", "TrialTrace",
    "relative_error", "run_active", "run_random", "run_trial", "sampler_config",
    "select_next", "stopping_reached",
]
