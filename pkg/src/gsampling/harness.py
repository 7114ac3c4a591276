# -*- coding: utf-8 -*-
"""
Experiment harness: scenario configuration, seeded multi-trial runs of
sampling strategies, per-step trace files and error-vs-sample-size tables.

Output directory layout of run_scenario():
```
graph.txt                          edge list, if one graph is shared by all trials
filter.csv                         filter response per graph frequency, with trial column
                                   if every trial has its own graph
spectra.csv                        graph Fourier coefficients of each trial truth signal
traces/trace_<trial>_<method>.csv  per-step records of each trial and method
traces.csv                         all trace rows merged, ordered by trial and method
aggregate.csv                      mean and deviation of relative error per method and step
metadata.json                      scenario, noise precision, stop reasons, final errors
```

------------------------------------------------------------------------------
This file is part of gsampling - active sampling of graph signals.
Released under the MIT License.

@author      gsampling developers
@created     10.09.2026
@modified    17.10.2026
------------------------------------------------------------------------------
"""
import collections
from concurrent import futures
import copy
import csv
import glob
import io
import logging
import numbers
import os
import re
import zlib

import numpy as np
import six

from . import api, graph, inference, model, sampler, spectral, util
from . graph import LAPLACIANS

logger = logging.getLogger(__name__)


## Graph realization policies: one graph for all trials, or a new graph per trial
GRAPH_POLICIES = ("fixed", "per-trial")

## Accepted graph section keys per family, besides "family", "policy" and "laplacian"
FAMILY_KEYS = {
    "random_geometric": ("n", "radius", "sigma"),
    "watts_strogatz":   ("n", "mean_degree", "rewire_prob"),
}

## Accepted filter section keys with defaults
FILTER_DEFAULTS = collections.OrderedDict([
    ("cutoff_frac",     spectral.DEFAULT_CUTOFF_FRAC),
    ("transition_frac", spectral.DEFAULT_TRANSITION_FRAC),
    ("floor_eps",       spectral.DEFAULT_FLOOR_EPS),
])

## Accepted sampler section keys with defaults
SAMPLER_DEFAULTS = collections.OrderedDict([
    ("stop_c",                  None),
    ("em_tol",                  inference.EM_TOL),
    ("em_max_iter",             inference.EM_MAX_ITER),
    ("first_node_rule",         sampler.FIRST_NODE_RULES[0]),
    ("min_samples_before_stop", 5),
    ("init_params",             [1., 1.]),
    ("fixed_params",            None),
])

## Aggregate CSV columns
AGGREGATE_COLUMNS = ("method", "M", "mean_err", "std_err", "n_trials")

## Filter response CSV columns, preceded by "trial" under per-trial graph policy
FILTER_COLUMNS = ("k", "eigenvalue", "response")

## Truth signal spectrum CSV columns
SPECTRUM_COLUMNS = ("trial", "k", "eigenvalue", "coefficient")

## Random substream purposes, part of substream keys (trial, method, purpose)
PURPOSE_GRAPH, PURPOSE_TRUTH, PURPOSE_SAMPLER = 0, 1, 2

## Trace file name pattern, with trial index and method
TRACE_FILE = "trace_%04d_%s.csv"
TRACE_FILE_RGX = r"^trace_(\d+)_(\w+)\.csv$"


class Scenario(collections.namedtuple("Scenario", (
    "name", "graph", "filter", "sampler", "alpha_true", "snr_db", "trials", "M_max",
    "methods", "master_seed",
))):
    """
    Experiment setting.

    @param   name         scenario label
    @param   graph        {"family", family arguments.., "policy", "laplacian"}
    @param   filter       {"cutoff_frac", "transition_frac", "floor_eps"}
    @param   sampler      {"stop_c", "em_tol", "em_max_iter", "first_node_rule",
                           "min_samples_before_stop", "init_params", "fixed_params"}
    @param   alpha_true   signal precision of generated signals
    @param   snr_db       signal-to-noise ratio in decibels, determines noise precision
    @param   trials       number of generated signals
    @param   M_max        sample budget per trial
    @param   methods      strategy names to run
    @param   master_seed  seed of all randomness in the scenario
    """
    __slots__ = ()


class AggregateRow(collections.namedtuple("AggregateRow", AGGREGATE_COLUMNS)):
    """Relative error statistics of one method at one sample count."""
    __slots__ = ()


def scenario(name, graph, alpha_true, snr_db, trials, M_max, methods=("active", "random"),
             master_seed=0, filter=None, sampler=None):
    """
    Returns Scenario with defaults filled in, validated.

    @throws  ConfigError  on unknown keys or invalid values
    """
    graph, filter, sampler = (dict(x or {}) for x in (graph, filter, sampler))
    family = graph.get("family")
    if not isinstance(family, six.string_types) or family not in FAMILY_KEYS:
        raise api.ConfigError("graph.family must be one of %s, got %r."
                              % (", ".join(sorted(FAMILY_KEYS)), family))
    graph.setdefault("policy", GRAPH_POLICIES[0])
    graph.setdefault("laplacian", LAPLACIANS[0])
    _check_keys("graph", graph, ("family", "policy", "laplacian") + FAMILY_KEYS[family],
                required=FAMILY_KEYS[family])
    if graph["policy"] not in GRAPH_POLICIES:
        raise api.ConfigError("graph.policy must be one of %s, got %r."
                              % (", ".join(GRAPH_POLICIES), graph["policy"]))
    if graph["laplacian"] not in LAPLACIANS:
        raise api.ConfigError("graph.laplacian must be one of %s, got %r."
                              % (", ".join(LAPLACIANS), graph["laplacian"]))
    for key in FAMILY_KEYS[family]:
        value, kind = graph[key], six.integer_types if "n" == key else numbers.Real
        if not isinstance(value, kind) or isinstance(value, bool):
            raise api.ConfigError("graph.%s must be %s, got %r."
                                  % (key, "an integer" if "n" == key else "a number", value))
    _check_keys("filter", filter, FILTER_DEFAULTS)
    _check_keys("sampler", sampler, SAMPLER_DEFAULTS)
    filter = collections.OrderedDict((k, filter.get(k, v)) for k, v in FILTER_DEFAULTS.items())
    sampler = collections.OrderedDict((k, sampler.get(k, copy.copy(v)))
                                      for k, v in SAMPLER_DEFAULTS.items())

    if not isinstance(name, six.string_types) or not name:
        raise api.ConfigError("name must be a non-empty string, got %r." % (name, ))
    if not isinstance(alpha_true, numbers.Real) or not alpha_true > 0:
        raise api.ConfigError("alpha_true must be positive, got %r." % (alpha_true, ))
    if not isinstance(snr_db, numbers.Real) or not np.isfinite(snr_db):
        raise api.ConfigError("snr_db must be a finite number, got %r." % (snr_db, ))
    for key, value, minimum in (("trials", trials, 1), ("M_max", M_max, 1),
                                ("master_seed", master_seed, 0)):
        if not isinstance(value, six.integer_types) or isinstance(value, bool) or value < minimum:
            raise api.ConfigError("%s must be an integer >= %s, got %r." % (key, minimum, value))
    if not isinstance(methods, (list, tuple)) or not methods:
        raise api.ConfigError("methods must be a non-empty list, got %r." % (methods, ))
    available = api.strategies()
    for method in methods:
        if method not in available:
            raise api.ConfigError("Unknown method %r, expected one of %s."
                                  % (method, ", ".join(available)))
    if len(set(methods)) != len(methods):
        raise api.ConfigError("methods must not repeat, got %r." % (methods, ))
    try:
        spectral.check_design(**filter)
    except api.ParameterError as e:
        raise api.ConfigError("Invalid filter section: %s" % e)
    try:
        make_sampler_config(sampler, M_max)
    except (api.ParameterError, TypeError) as e:
        raise api.ConfigError("Invalid sampler section: %s" % e)
    return Scenario(name, collections.OrderedDict(sorted(graph.items())), filter, sampler,
                    alpha_true, snr_db, trials, M_max, list(methods), master_seed)


def scenario_from_dict(data):
    """
    Returns Scenario from configuration dictionary.

    @throws  ConfigError  on unknown or missing keys, or invalid values
    """
    if not isinstance(data, dict):
        raise api.ConfigError("Configuration must be a JSON object, got %s."
                              % type(data).__name__)
    _check_keys("configuration", data, Scenario._fields,
                required=("name", "graph", "alpha_true", "snr_db", "trials", "M_max"))
    for section in ("graph", "filter", "sampler"):
        if data.get(section) is not None and not isinstance(data[section], dict):
            raise api.ConfigError("%s must be a JSON object." % section)
    return scenario(**data)


def load_scenario(path):
    """
    Returns Scenario read from JSON configuration file.

    @throws  ConfigError  on unreadable or invalid configuration
    """
    try:
        with io.open(path, encoding="utf-8") as f: text = f.read()
    except (IOError, OSError) as e:
        raise api.ConfigError("Failed to read configuration %r: %s" % (path, e))
    data = util.json_loads(text)
    if data is text:
        raise api.ConfigError("Configuration %r is not valid JSON." % path)
    return scenario_from_dict(data)


def dump_scenario(s):
    """Returns Scenario as JSON configuration text."""
    return util.json_dumps(s, sort_keys=False)


def make_sampler_config(section, M_max):
    """Returns sampler.SamplerConfig from scenario sampler section."""
    return sampler.sampler_config(M_max, **section)


def make_context(s, seed):
    """Returns sampler.Context with graph and filter built for scenario."""
    kwargs = dict(s.graph)
    family, kind = kwargs.pop("family"), kwargs.pop("laplacian")
    kwargs.pop("policy")
    g = graph.build(family, seed=seed, **kwargs)
    spectrum = spectral.eigendecompose(graph.laplacian(g, kind))
    return sampler.Context(g, spectral.design_highpass(spectrum, **s.filter))


def presets():
    """
    Returns the four reference scenarios: small-world graph G1 at α = 10 and
    random geometric graph G2 at α = 0.1, each at 15 dB and 10 dB SNR.
    """
    G1 = dict(family="watts_strogatz", n=300, mean_degree=6, rewire_prob=0.1)
    G2 = dict(family="random_geometric", n=300, radius=0.1, sigma=0.05)
    return [scenario("%s-%sdB" % (name, snr), g, alpha, snr, trials=100, M_max=300)
            for name, g, alpha in (("G1", G1, 10.), ("G2", G2, 0.1)) for snr in (15, 10)]


def preset(name):
    """Returns preset scenario by name, raises ConfigError if unknown."""
    result = next((s for s in presets() if s.name.lower() == name.lower()), None)
    if result is None:
        raise api.ConfigError("Unknown preset %r, expected one of %s."
                              % (name, ", ".join(s.name for s in presets())))
    return result


def scaled(s, n=None, **changes):
    """
    Returns scenario with changed node count and other fields, validated.

    @param   n        new graph node count, if any
    @param   changes  Scenario fields to replace, like `trials=30, M_max=120`
    """
    data = util.todict(s)
    if n is not None: data["graph"]["n"] = n
    data.update(changes)
    return scenario_from_dict(data)


def run_scenario(s, out=None, workers=1):
    """
    Runs all trials of scenario, returns (traces, aggregate table).

    Each trial draws a fresh signal from the prior at alpha_true, shared by all
    methods, and runs every method with its own random substream.

    @param   s        Scenario
    @param   out      directory to write outputs to, if any
    @param   workers  number of trials to run concurrently
    @return           ({(trial, method): sampler.TrialTrace} ordered by trial and method,
                       [AggregateRow])
    """
    config = make_sampler_config(s.sampler, s.M_max)
    fixed = "fixed" == s.graph["policy"]
    shared = make_context(s, util.substream(s.master_seed, 0, 0, PURPOSE_GRAPH)) if fixed else None
    logger.info("Running scenario %s: %s trials of %s, %s workers.",
                s.name, s.trials, ", ".join(s.methods), workers)

    def run_trial(trial):
        """Returns (context, noise model, truth signal, {method: TrialTrace}) for trial."""
        context = shared or make_context(s, util.substream(s.master_seed, trial, 0, PURPOSE_GRAPH))
        noise = model.noise_model(model.beta_for_snr(context.filter, s.alpha_true, s.snr_db))
        truth = model.sample_prior(context.filter, s.alpha_true,
                                   util.substream(s.master_seed, trial, 0, PURPOSE_TRUTH))
        traces = collections.OrderedDict()
        for method in s.methods:
            seed = util.substream(s.master_seed, trial, method_key(method), PURPOSE_SAMPLER)
            traces[method] = sampler.run_trial(context, truth, noise, config, seed, method)
        logger.info("Finished trial %s of %s: %s.", trial + 1, s.trials, ", ".join(
            "%s error %.4g" % (m, t.records[-1].rel_error) for m, t in traces.items()))
        return context, noise, truth, traces

    if workers > 1:
        with futures.ThreadPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(run_trial, range(s.trials)))
    else:
        results = [run_trial(trial) for trial in range(s.trials)]

    traces = collections.OrderedDict(((trial, method), trace)
                                     for trial, (_, _, _, tt) in enumerate(results)
                                     for method, trace in tt.items())
    table = aggregate(traces)
    if out is not None:
        write_outputs(out, s, shared, [x[:3] for x in results], traces, table)
    return traces, table


def method_key(method):
    """Returns stable integer for method name, used in random substream keys."""
    return zlib.crc32(method.encode("utf-8")) & 0xFFFFFFFF


def aggregate(traces):
    """
    Returns [AggregateRow] of relative error per method and sample count,
    ordered by method name and sample count.

    Statistics at sample count M are taken over the trials that reached M.

    @param   traces  {(trial, method): TrialTrace or [row with "rel_error"]}
    """
    errors = collections.defaultdict(dict)  # {method: {trial: [rel_error, ]}}
    for (trial, method), trace in traces.items():
        records = trace.records if isinstance(trace, sampler.TrialTrace) else trace
        errors[method][trial] = [float(_value(x, "rel_error")) for x in records]
    result = []
    for method in sorted(errors):
        series = [errors[method][trial] for trial in sorted(errors[method])]
        for M in range(1, max(map(len, series)) + 1):
            values = np.array([x[M - 1] for x in series if len(x) >= M])
            std = float(np.std(values, ddof=1)) if len(values) > 1 else 0.
            result.append(AggregateRow(method, M, float(np.mean(values)), std, len(values)))
    return result


def write_outputs(out, s, context, trials, traces, table):
    """
    Writes scenario outputs to directory.

    @param   context  shared sampler.Context if one graph was used for all trials, else None
    @param   trials   [(sampler.Context, model.NoiseModel, truth signal)] per trial
    """
    noises = [noise for _, noise, _ in trials]
    tracedir = os.path.join(out, "traces")
    if not os.path.isdir(tracedir): os.makedirs(tracedir)
    for (trial, method), trace in traces.items():
        write_csv(os.path.join(tracedir, TRACE_FILE % (trial, method)),
                  sampler.TRACE_COLUMNS, trace.records)
    write_csv(os.path.join(out, "traces.csv"), ("trial", "method") + sampler.TRACE_COLUMNS,
              [(trial, method) + tuple(r) for (trial, method), trace in traces.items()
               for r in trace.records])
    write_csv(os.path.join(out, "aggregate.csv"), AGGREGATE_COLUMNS, table)
    if context is not None:
        graph.write_edgelist(context.graph, os.path.join(out, "graph.txt"))
        write_csv(os.path.join(out, "filter.csv"), FILTER_COLUMNS, filter_rows(context.filter))
    else:
        write_csv(os.path.join(out, "filter.csv"), ("trial", ) + FILTER_COLUMNS,
                  [(trial, ) + r for trial, (c, _, _) in enumerate(trials)
                   for r in filter_rows(c.filter)])
    write_csv(os.path.join(out, "spectra.csv"), SPECTRUM_COLUMNS,
              [(trial, k, lam, x) for trial, (c, _, truth) in enumerate(trials)
               for k, (lam, x) in enumerate(zip(c.filter.spectrum.eigenvalues,
                                                spectral.gft(c.filter, truth)))])

    from . import __version__
    betas = [x.beta for x in noises]
    powers = [10. ** (s.snr_db / 10.) / x for x in betas]
    metadata = collections.OrderedDict([
        ("scenario",       util.todict(s)),
        ("version",        __version__),
        ("snr_definition", model.SNR_DEFINITION),
        ("beta",           betas[0] if context is not None else betas),
        ("signal_power",   powers[0] if context is not None else powers),
        ("traces",         [collections.OrderedDict([
                                ("trial", trial), ("method", method),
                                ("samples", len(trace.records)),
                                ("stop_reason", trace.stop_reason),
                                ("final_error", trace.records[-1].rel_error),
                            ]) for (trial, method), trace in traces.items()]),
    ])
    with io.open(os.path.join(out, "metadata.json"), "w", encoding="utf-8", newline="\n") as f:
        f.write(six.text_type(util.json_dumps(metadata, sort_keys=False)) + u"\n")
    logger.info("Wrote %s traces and aggregate table to %s.", len(traces), out)


def filter_rows(filt):
    """Returns [(k, eigenvalue, response)] of GraphFilter, ascending by frequency."""
    return [(k, lam, h) for k, (lam, h) in
            enumerate(zip(filt.spectrum.eigenvalues, filt.response))]


def read_traces(directory):
    """
    Returns trace rows read from trace files in directory, validated.

    @param   directory  directory with trace_<trial>_<method>.csv files,
                        or a run output directory containing "traces"
    @return             {(trial, method): [StepRecord]} ordered by trial and method
    @throws  ParameterError  on missing or malformed trace files
    """
    if os.path.isdir(os.path.join(directory, "traces")):
        directory = os.path.join(directory, "traces")
    result = {}
    for path in sorted(glob.glob(os.path.join(directory, "trace_*.csv"))):
        match = re.match(TRACE_FILE_RGX, os.path.basename(path))
        if not match: continue  # for path
        trial, method = int(match.group(1)), match.group(2)
        result[(trial, method)] = read_trace(path)
    if not result:
        raise api.ParameterError("No trace files found in %r." % directory)
    return collections.OrderedDict(sorted(result.items()))


def read_trace(path):
    """
    Returns [StepRecord] from trace CSV file, validated against trace schema.

    @throws  ParameterError  on header mismatch, unparseable values, or bad step order
    """
    types = (int, int, float, float, float, int, float, float)
    with io.open(path, encoding="utf-8", newline="") as f:
        rows = list(csv.reader(f))
    if not rows or tuple(rows[0]) != sampler.TRACE_COLUMNS:
        raise api.ParameterError("Unexpected header in %r: %s." % (path, rows[:1]))
    result = []
    for i, row in enumerate(rows[1:], 1):
        try:
            if len(row) != len(types): raise ValueError("%s columns" % len(row))
            record = sampler.StepRecord(*[t(v) for t, v in zip(types, row)])
        except ValueError as e:
            raise api.ParameterError("Malformed row %s in %r: %s." % (i, path, e))
        if record.t != i:
            raise api.ParameterError("Step %s out of order at row %s in %r." % (record.t, i, path))
        result.append(record)
    return result


def aggregate_traces(directory, out=None):
    """
    Returns [AggregateRow] recomputed from trace files, writing aggregate CSV if out given.

    @param   directory  as in read_traces()
    @param   out        path of aggregate CSV to write, if any
    """
    table = aggregate(read_traces(directory))
    if out is not None: write_csv(out, AGGREGATE_COLUMNS, table)
    return table


def write_csv(target, columns, rows):
    """
    Writes rows as CSV with header, floats in full precision.

    @param   target  file path or writable text stream
    """
    def write(f):
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(columns)
        for row in rows: writer.writerow([_format(v) for v in row])
    if hasattr(target, "write"): return write(target)
    with io.open(target, "w", encoding="utf-8", newline="") as f: write(f)


def _check_keys(section, data, allowed, required=()):
    """Raises ConfigError on unknown or missing keys in configuration section."""
    unknown = [k for k in data if k not in allowed]
    if unknown:
        raise api.ConfigError("Unknown key%s in %s: %s." % ("s" if len(unknown) > 1 else "",
                              section, ", ".join(map(repr, unknown))))
    missing = [k for k in required if k not in data]
    if missing:
        raise api.ConfigError("Missing key%s in %s: %s." % ("s" if len(missing) > 1 else "",
                              section, ", ".join(map(repr, missing))))


def _format(value):
    """Returns value as CSV text, floats in shortest round-tripping form."""
    if isinstance(value, (bool, np.bool_)): return str(bool(value))
    if isinstance(value, numbers.Integral): return str(int(value))
    if isinstance(value, numbers.Real): return repr(float(value))
    return six.text_type(value)


def _value(record, key):
    """Returns named field from StepRecord or dictionary row."""
    return record[key] if isinstance(record, dict) else getattr(record, key)


__all__ = [
    "AGGREGATE_COLUMNS", "FAMILY_KEYS", "FILTER_COLUMNS", "GRAPH_POLICIES", "SPECTRUM_COLUMNS",
    "AggregateRow", "Scenario",
    "aggregate", "aggregate_traces", "dump_scenario", "filter_rows", "load_scenario",
    "make_context", "make_sampler_config", "method_key", "preset", "presets", "read_trace",
    "read_traces", "run_scenario", "scaled", "scenario", "scenario_from_dict", "write_csv",
    "write_outputs",
]
