# -*- coding: utf-8 -*-
"""
Graph Fourier basis and spectral-domain design of unit-gain high-pass graph filters.

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     03.09.2026
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


## Default stopband floor of filter response, keeps H invertible
DEFAULT_FLOOR_EPS = 1e-3

## Default cut-off frequency, as a fraction of the largest Laplacian eigenvalue
DEFAULT_CUTOFF_FRAC = 0.3

## Default width of the linear transition band, as a fraction of the largest eigenvalue
DEFAULT_TRANSITION_FRAC = 0.2

## Components smaller than this are skipped when fixing eigenvector signs
SIGN_TOLERANCE = 1e-12


class Spectrum(collections.namedtuple("Spectrum", ("eigenvalues", "eigenvectors"))):
    """Laplacian eigenvalues ascending, and orthonormal eigenvectors as columns."""
    __slots__ = ()

    @property
    def n(self):
        """Node count."""
        return len(self.eigenvalues)


class GraphFilter(collections.namedtuple("GraphFilter", (
    "spectrum", "response", "H", "H2", "floor_eps", "cutoff", "transition_width"
))):
    """
    High-pass graph filter H = U diag(h) Uᵀ with unit gain at the top of the spectrum.

    @param   spectrum          Spectrum the filter is defined on
    @param   response          h(λ_k) per eigenvalue, in [floor_eps, 1], nondecreasing
    @param   H                 filter matrix
    @param   H2                H², assembled spectrally
    @param   floor_eps         stopband floor of response
    @param   cutoff            centre of transition band, in graph frequency
    @param   transition_width  width of transition band, in graph frequency
    """
    __slots__ = ()

    @property
    def n(self):
        """Node count."""
        return self.spectrum.n

    def energy(self, f):
        """Returns out-of-band energy fᵀH²f = ‖Hf‖² of signal f."""
        f = np.asarray(f, dtype=float)
        return float(f.dot(self.H2).dot(f))


def eigendecompose(L):
    """
    Returns full symmetric eigendecomposition of Laplacian as Spectrum.

    Eigenvalues are ascending and clipped at zero, eigenvectors are signed
    so that their first non-negligible component is positive.

    @param   L  symmetric positive semidefinite matrix
    @throws  ParameterError  if L is not square and symmetric
    @throws  NumericalError  if the eigensolver fails to converge
    """
    L = np.asarray(L, dtype=float)
    if L.ndim != 2 or L.shape[0] != L.shape[1] or not np.allclose(L, L.T, rtol=0, atol=1e-12):
        raise api.ParameterError("Laplacian must be a square symmetric matrix.")
    try:
        eigenvalues, eigenvectors = scipy.linalg.eigh(L)
    except (np.linalg.LinAlgError, ValueError) as e:
        raise api.NumericalError("Laplacian eigendecomposition failed: %s" % e)
    for k in range(eigenvectors.shape[1]):
        column = eigenvectors[:, k]
        first = np.flatnonzero(np.abs(column) > SIGN_TOLERANCE)
        if len(first) and column[first[0]] < 0: eigenvectors[:, k] = -column
    eigenvalues = np.maximum(eigenvalues, 0.)
    for x in (eigenvalues, eigenvectors): x.setflags(write=False)
    return Spectrum(eigenvalues, eigenvectors)


def assemble(spectrum, response):
    """Returns U diag(response) Uᵀ, exactly symmetric."""
    U = spectrum.eigenvectors
    return util.symmetrize((U * np.asarray(response, dtype=float)).dot(U.T))


def highpass_response(eigenvalues, cutoff, width, floor_eps):
    """
    Returns piecewise-linear high-pass response per eigenvalue.

    Response is floor_eps up to cutoff - width / 2, one from cutoff + width / 2,
    with a linear ramp between; a zero width gives a step at cutoff.
    """
    eigenvalues = np.asarray(eigenvalues, dtype=float)
    if width > 0:
        ramp = (eigenvalues - (cutoff - width / 2.)) / width
    else:
        ramp = (eigenvalues >= cutoff).astype(float)
    response = floor_eps + (1. - floor_eps) * np.clip(ramp, 0., 1.)
    return np.clip(response, floor_eps, 1.)


def check_design(cutoff_frac, transition_frac, floor_eps):
    """
    Raises ParameterError unless high-pass design arguments are valid real numbers
    in range, with the passband starting at or below the largest eigenvalue.
    """
    for name, value in (("Cut-off fraction", cutoff_frac),
                        ("Transition fraction", transition_frac), ("Floor", floor_eps)):
        if not isinstance(value, numbers.Real) or isinstance(value, bool):
            raise api.ParameterError("%s must be a number, got %r." % (name, value))
    if not 0 < cutoff_frac < 1:
        raise api.ParameterError("Cut-off fraction must be in (0, 1), got %r." % (cutoff_frac, ))
    if not transition_frac >= 0:
        raise api.ParameterError("Transition fraction must be >= 0, got %r." % (transition_frac, ))
    if not 0 < floor_eps < 1:
        raise api.ParameterError("Floor must be in (0, 1), got %r." % (floor_eps, ))
    if cutoff_frac + transition_frac / 2. > 1:
        raise api.ParameterError("Passband starts beyond the largest eigenvalue: cut-off "
                                 "fraction %r with transition fraction %r."
                                 % (cutoff_frac, transition_frac))


def design_highpass(spectrum, cutoff_frac=DEFAULT_CUTOFF_FRAC,
                    transition_frac=DEFAULT_TRANSITION_FRAC, floor_eps=DEFAULT_FLOOR_EPS):
    """
    Returns unit-gain high-pass GraphFilter designed on the spectrum.

    @param   spectrum         Laplacian Spectrum
    @param   cutoff_frac      transition centre as fraction of largest eigenvalue, in (0, 1)
    @param   transition_frac  transition width as fraction of largest eigenvalue, >= 0
    @param   floor_eps        stopband response, in (0, 1)
    @throws  ParameterError   on out-of-range arguments, or if the passband
                              lies beyond the largest eigenvalue
    """
    check_design(cutoff_frac, transition_frac, floor_eps)

    lmax = float(spectrum.eigenvalues[-1])
    cutoff, width = cutoff_frac * lmax, transition_frac * lmax
    response = highpass_response(spectrum.eigenvalues, cutoff, width, floor_eps)
    response[spectrum.eigenvalues >= (cutoff + width / 2.) * (1 - 1e-12)] = 1.  # Unit gain
    response.setflags(write=False)
    H, H2 = assemble(spectrum, response), assemble(spectrum, response ** 2)
    for x in (H, H2): x.setflags(write=False)
    logger.debug("Designed high-pass filter with cut-off %.6g and transition width %.6g, "
                 "%s of %s frequencies in stopband.", cutoff, width,
                 int(np.sum(response <= floor_eps)), len(response))
    return GraphFilter(spectrum, response, H, H2, floor_eps, cutoff, width)


def prior_covariance(filt, alpha):
    """
    Returns prior covariance α⁻¹H⁻² = U diag(1 / (α h²)) Uᵀ.

    @param   filt   GraphFilter
    @param   alpha  signal precision, positive
    """
    if not alpha > 0:
        raise api.ParameterError("Alpha must be positive, got %r." % (alpha, ))
    return assemble(filt.spectrum, 1. / (alpha * np.asarray(filt.response) ** 2))


def gft(spectrum, f):
    """
    Returns graph Fourier coefficients Uᵀf of signal, ordered by ascending frequency.

    @param   spectrum  Spectrum, or GraphFilter defined on one
    @param   f         signal of length n
    """
    spectrum = getattr(spectrum, "spectrum", spectrum)
    f = np.asarray(f, dtype=float)
    if f.shape != (spectrum.n, ):
        raise api.ParameterError("Signal must have length %s, got shape %s."
                                 % (spectrum.n, f.shape))
    return spectrum.eigenvectors.T.dot(f)


def prior_variances(filt):
    """Returns diag(H⁻²), prior variance per node at unit precision."""
    U = filt.spectrum.eigenvectors
    return (U ** 2).dot(1. / np.asarray(filt.response) ** 2)


__all__ = [
    "DEFAULT_CUTOFF_FRAC", "DEFAULT_FLOOR_EPS", "DEFAULT_TRANSITION_FRAC",
    "GraphFilter", "Spectrum",
    "assemble", "check_design", "design_highpass", "eigendecompose", "gft", "highpass_response",
    "prior_covariance", "prior_variances",
]
