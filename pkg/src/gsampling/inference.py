# -*- coding: utf-8 -*-
"""
Closed-form Gaussian inference over graph signals: posterior and predictive
distributions, marginal likelihood, and expectation-maximization estimates
of signal precision α and noise precision β.

All computations use only the sufficient statistics of the observation log,
so results do not depend on the order in which observations were made.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     06.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
import logging
import numbers

import numpy as np
import scipy.linalg

from . import api, util

logger = logging.getLogger(__name__)


## Upper bound for estimated noise precision, guards noise-free configurations
BETA_MAX = 1e12

## Default relative tolerance for EM convergence of both precisions
EM_TOL = 1e-6

## Default iteration cap for EM
EM_MAX_ITER = 200


class HyperParams(collections.namedtuple("HyperParams", ("alpha", "beta"))):
    """Signal-smoothness precision alpha and noise precision beta."""
    __slots__ = ()


class Posterior(collections.namedtuple("Posterior", ("mu", "C"))):
    """Gaussian posterior over the signal: mean vector mu, covariance matrix C."""
    __slots__ = ()

    @property
    def variances(self):
        """Posterior variance per node, diag(C)."""
        return np.diag(self.C)


class EMResult(collections.namedtuple("EMResult", (
    "params", "posterior", "iterations", "evidence_trace"
))):
    """
    Outcome of em_fit().

    @param   params          final HyperParams
    @param   posterior       Posterior at final params
    @param   iterations      number of EM iterations run
    @param   evidence_trace  log-evidence at the initial params and after every iteration
    """
    __slots__ = ()


def hyper_params(alpha, beta):
    """Returns HyperParams, raises ParameterError unless both are positive and finite."""
    for name, value in (("alpha", alpha), ("beta", beta)):
        if not isinstance(value, numbers.Real) or not 0 < value < np.inf:
            raise api.ParameterError("%s must be positive and finite, got %r." % (name, value))
    return HyperParams(float(alpha), float(beta))



class ObservationLog(object):
    """
    Running history of noisy node observations.

    Besides the ordered entries, keeps per-node sufficient statistics:
    observation counts (diagonal of ΨᵀΨ), value sums (Ψᵀy), and the scatter
    of values around each node's own mean.
    """

    def __init__(self, n, entries=()):
        """
        @param   n        node count
        @param   entries  initial [(node, value)], if any
        """
        self.n       = n
        self.entries = []
        self.counts  = np.zeros(n, dtype=int)
        self.sums    = np.zeros(n)
        self.scatter = np.zeros(n)
        for node, value in entries: self.append(node, value)


    def append(self, node, value):
        """Adds observation of value at node."""
        if not isinstance(node, numbers.Integral) or not 0 <= node < self.n:
            raise api.ParameterError("Node index must be in [0, %s), got %r." % (self.n, node))
        value = float(value)
        if not np.isfinite(value):
            raise api.ParameterError("Observation must be finite, got %r." % value)
        count = self.counts[node]
        mean0 = self.sums[node] / count if count else value
        self.counts[node] += 1
        self.sums[node]   += value
        self.scatter[node] += (value - mean0) * (value - self.sums[node] / self.counts[node])
        self.entries.append((int(node), value))


    def copy(self):
        """Returns an independent copy of this log."""
        result = ObservationLog(self.n)
        result.entries = list(self.entries)
        result.counts, result.sums, result.scatter = (x.copy() for x in
                                                      (self.counts, self.sums, self.scatter))
        return result


    def residual_ss(self, mu):
        """Returns ‖y_s - Ψμ‖², the squared residual of all observations against mu."""
        seen = self.counts > 0
        means = self.sums[seen] / self.counts[seen]
        return float(self.scatter[seen].sum() +
                     np.dot(self.counts[seen], (means - np.asarray(mu)[seen]) ** 2))


    @property
    def M(self):
        """Total number of observations."""
        return len(self.entries)


    def __len__(self): return len(self.entries)

    def __repr__(self):
        return "%s(n=%s, M=%s)" % (self.__class__.__name__, self.n, self.M)



def posterior(H2, log, params):
    """
    Returns Gaussian posterior over the signal given observations,
    with C = (αH² + βΨᵀΨ)⁻¹ and μ = βCΨᵀy.

    @param   H2      squared filter matrix
    @param   log     ObservationLog
    @param   params  HyperParams
    @throws  NumericalError  if the posterior precision fails to factorize
    """
    return _expectation(H2, log, params)[0]


def predictive(post, params):
    """
    Returns predictive distribution of a new observation at each node,
    as (means, variances) with variances diag(C) + 1/β.
    """
    return post.mu.copy(), post.variances + 1. / params.beta


def log_evidence(H2, log, params):
    """
    Returns log marginal likelihood ln p(y_s | Ψ, α, β),
    the density of y_s under N(0, β⁻¹I + Ψ(αH²)⁻¹Ψᵀ).

    @param   H2      squared filter matrix
    @param   log     ObservationLog
    @param   params  HyperParams
    """
    if not log.M: return 0.
    return _expectation(H2, log, params, _logdet(_cholesky(H2, "H²")))[1]


def em_fit(H2, log, init, tol=EM_TOL, max_iter=EM_MAX_ITER):
    """
    Returns maximum-likelihood precisions estimated by expectation-maximization.

    Alternates the posterior at current estimates with the closed-form updates
    α = N / (tr(H²C) + μᵀH²μ) and β = M / (‖y_s - Ψμ‖² + tr(ΨᵀΨC)),
    until both change by less than tol relative, or max_iter iterations.

    @param   H2        squared filter matrix
    @param   log       ObservationLog with at least one observation
    @param   init      initial HyperParams
    @param   tol       relative tolerance for convergence
    @param   max_iter  maximum number of iterations
    @return            EMResult
    @throws  ParameterError  if log is empty
    @throws  NumericalError  on factorization failure
    """
    if not log.M:
        raise api.ParameterError("EM needs at least one observation.")
    logdet_H2 = _logdet(_cholesky(H2, "H²"))
    params = init
    post, evidence = _expectation(H2, log, params, logdet_H2)
    trace, iterations, converged = [evidence], 0, False
    while iterations < max_iter and not converged:
        iterations += 1
        estimate = _maximization(H2, log, post)
        converged = abs(estimate.alpha - params.alpha) < tol * params.alpha \
                    and abs(estimate.beta - params.beta) < tol * params.beta
        params = estimate
        post, evidence = _expectation(H2, log, params, logdet_H2)
        trace.append(evidence)
        logger.log(logging.DEBUG // 2, "EM iteration %s: alpha %.9g, beta %.9g, evidence %.12g.",
                   iterations, params.alpha, params.beta, evidence)
    if not converged:
        logger.debug("EM stopped at %s iterations without converging, M=%s.", iterations, log.M)
    return EMResult(params, post, iterations, trace)


def _expectation(H2, log, params, logdet_H2=None):
    """
    Returns (Posterior, log-evidence or None) at given params.

    @param   logdet_H2  ln|H²| if evidence is wanted
    """
    N, (alpha, beta) = len(H2), params
    factor = _cholesky(alpha * H2 + np.diag(beta * log.counts), "posterior precision")
    C = util.symmetrize(_solve(factor, np.eye(N)))
    mu = _solve(factor, beta * log.sums)
    evidence = None
    if logdet_H2 is not None:
        fit = beta * log.residual_ss(mu) + alpha * mu.dot(H2).dot(mu)
        evidence = 0.5 * (N * np.log(alpha) + logdet_H2 - _logdet(factor) +
                          log.M * np.log(beta) - log.M * np.log(2 * np.pi) - fit)
    return Posterior(mu, C), evidence


def _maximization(H2, log, post):
    """Returns HyperParams maximizing expected complete-data log-likelihood."""
    alpha = len(H2) / (np.sum(H2 * post.C) + post.mu.dot(H2).dot(post.mu))
    beta  = log.M / (log.residual_ss(post.mu) + np.dot(log.counts, post.variances))
    if beta > BETA_MAX:
        logger.log(logging.DEBUG // 2, "Capping estimated beta %.6g at %.6g.", beta, BETA_MAX)
        beta = BETA_MAX
    return HyperParams(float(alpha), float(beta))


def _cholesky(matrix, label):
    """
    Returns (lower Cholesky factor as used by scipy.linalg.cho_solve(), scaling),
    factorizing the matrix with its diagonal equilibrated to one.
    """
    diagonal = np.diag(matrix)
    if not np.all(diagonal > 0):
        raise api.NumericalError("Factorization of %s failed: matrix is not positive definite."
                                 % label)
    scale = 1. / np.sqrt(diagonal)
    try:
        return scipy.linalg.cho_factor(matrix * np.outer(scale, scale), lower=True), scale
    except (np.linalg.LinAlgError, ValueError) as e:
        raise api.NumericalError("Factorization of %s failed: %s" % (label, e))


def _solve(factor, b):
    """Returns A⁻¹b for vector or matrix b, given factorization of A from _cholesky()."""
    (cho, scale), b = factor, np.asarray(b, dtype=float)
    if 2 == b.ndim: scale = scale[:, None]
    return scale * scipy.linalg.cho_solve(cho, scale * b)


def _logdet(factor):
    """Returns log-determinant of A, given factorization of A from _cholesky()."""
    (cho, _), scale = factor
    return 2. * float(np.sum(np.log(np.diag(cho))) - np.sum(np.log(scale)))


__all__ = [
    "BETA_MAX", "EM_MAX_ITER", "EM_TOL",
    "EMResult", "HyperParams", "ObservationLog", "Posterior",
    "em_fit", "hyper_params", "log_evidence", "posterior", "predictive",
]
