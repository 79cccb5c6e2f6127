# Lint as: python3
# Copyright 2020 The oudisp Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""Per command pipelines behind the `oudisp` command line tool."""

import concurrent.futures
import itertools
import os
from typing import Callable, List, Optional, Sequence, Text, TypeVar

from absl import logging
import jax.numpy as jnp
from oudisp._src import config as config_lib
from oudisp._src import errors
from oudisp._src import estimates
from oudisp._src import fourier
from oudisp._src import gaussian
from oudisp._src import grid as grid_lib
from oudisp._src import hermite
from oudisp._src import kernels
from oudisp._src import lti
from oudisp._src import oscillator
from oudisp._src import propagator
from oudisp._src import reports
from oudisp._src import uncertainty
from oudisp._src import utils

THREADS_ENV = "OU_DISPERSION_THREADS"
MAX_DEFAULT_WORKERS = 8
FIELD_SUFFIX = ".oufld"

T = TypeVar("T")
U = TypeVar("U")


def worker_count() -> int:
  """Pool size: `OU_DISPERSION_THREADS` if set, else up to 8 CPUs."""
  default = min(MAX_DEFAULT_WORKERS, os.cpu_count() or 1)
  value = os.environ.get(THREADS_ENV)
  if value is None:
    return default
  try:
    count = int(value)
  except ValueError:
    count = 0
  if count < 1:
    logging.warning("Ignoring %s=%r, using %d workers.", THREADS_ENV, value,
                    default)
    return default
  return count


def map_parallel(fn: Callable[[T], U],
                 items: Sequence[T],
                 workers: Optional[int] = None) -> List[U]:
  """`[fn(x) for x in items]` on a thread pool, in the order of `items`."""
  items = list(items)
  workers = worker_count() if workers is None else workers
  if workers <= 1 or len(items) <= 1:
    return [fn(x) for x in items]
  logging.debug("Mapping %d items over %d workers.", len(items), workers)
  with concurrent.futures.ThreadPoolExecutor(max_workers=workers) as pool:
    return list(pool.map(fn, items))


def resolve_system(config: config_lib.RunConfig) -> lti.SystemSpec:
  spec = config.system
  if spec.preset == "ou":
    return lti.ornstein_uhlenbeck(spec.n or config.grid.m)
  if spec.preset == "kolmogorov":
    return lti.kolmogorov(spec.n or 1)
  if spec.preset == "smoluchowski-kramers":
    return lti.smoluchowski_kramers()
  return lti.system(spec.q, spec.b)


def build_datum(datum: config_lib.DatumSpec,
                grid: grid_lib.GridSpec,
                t: Optional[float] = None) -> grid_lib.ComplexField:
  """Samples the configured datum as a `PHI` gauge field.

  Raises:
    ConfigError: If a field file does not match `grid`.
    SingularTime: For a time adapted Gaussian at a multiple of `pi`.
  """
  if datum.kind == "gaussian":
    beta = datum.beta
    if datum.time_adapted and t is not None:
      beta = estimates.extremizer_alpha(t, beta.real)
    return gaussian.as_phi(gaussian.gaussian_state(beta, datum.c), grid)
  if datum.kind == "hermite":
    return hermite.hermite_datum(grid, datum.index)
  f = grid_lib.load_field(datum.path)
  if f.grid != grid:
    raise errors.ConfigError(
        "datum.path: {!r} is sampled on {!r}, the run uses {!r}".format(
            datum.path, f.grid, grid))
  if f.gauge is grid_lib.Gauge.PSI:
    f = grid_lib.from_psi_gauge(f)
  return f


def datum_label(datum: config_lib.DatumSpec) -> Text:
  if datum.kind == "gaussian":
    if datum.time_adapted:
      return "gaussian-adapted({!r})".format(datum.beta.real)
    return "gaussian({!r})".format(datum.beta)
  if datum.kind == "hermite":
    return "hermite({})".format(",".join(map(str, datum.index)))
  return "file({})".format(os.path.basename(datum.path))


def field_path(output: Text, index: int) -> Text:
  stem, _ = os.path.splitext(output)
  return "{}.t{}{}".format(stem, index, FIELD_SUFFIX)


def _method(config: config_lib.RunConfig) -> propagator.Method:
  return propagator.Method(config.method)


def _engine(config: config_lib.RunConfig) -> fourier.Engine:
  return fourier.Engine(config.engine)


def check_system_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  sys = resolve_system(config)

  def row(t):
    r = lti.hypoellipticity_check(sys, t)
    return {"t": r.t, "det_qt": r.det_qt, "min_eig": r.min_eig,
            "kalman_rank": int(r.kalman_rank),
            "hypoelliptic": bool(r.hypoelliptic),
            "spectral_abscissa": float(r.spectral_abscissa),
            "has_invariant_measure": bool(r.has_invariant_measure)}

  return map_parallel(row, config.times)


def propagate_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  """Propagates the datum and writes one field file per time."""
  phi = build_datum(config.datum, config.grid)
  norm0 = grid_lib.norm_gauss(phi)
  method, engine = _method(config), _engine(config)

  def row(item):
    i, t = item
    f = propagator.propagate(phi, t, method, engine, config.order)
    path = field_path(config.output.path, i)
    grid_lib.save_field(path, f)
    return {"t": t, "method": method.value,
            "norm_gauss": grid_lib.norm_gauss(f),
            "norm_drift": abs(grid_lib.norm_gauss(f) / norm0 - 1.),
            "tail_ratio": grid_lib.tail_ratio(grid_lib.to_psi_gauge(f)),
            "field_path": os.path.basename(path)}

  return map_parallel(row, list(enumerate(config.times)))


def dispersive_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  label = datum_label(config.datum)
  method, engine = _method(config), _engine(config)

  def row(item):
    p, t = item
    phi = build_datum(config.datum, config.grid, t)
    r = estimates.dispersive_report(phi, p, t, method, engine, config.order)
    return {"datum": label, "p": r.p, "p_prime": r.p_prime, "t": r.t,
            "lhs": r.lhs, "rhs": r.rhs, "ratio": r.ratio}

  return map_parallel(row, list(itertools.product(config.p_values,
                                                  config.times)))


def uncertainty_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  betas = list(config.betas) + uncertainty.random_gaussian_states(
      config.seed, config.random_states)

  def row(item):
    beta0, s = item
    r = uncertainty.uncertainty_product(beta0, s)
    return {"beta0_re": r.beta0.real, "beta0_im": r.beta0.imag, "s": r.s,
            "a_max": r.a_max, "b_max": r.b_max, "product": r.product,
            "threshold": r.threshold,
            "consistent": r.product <= r.threshold + uncertainty.TOL_UNC}

  return map_parallel(row, list(itertools.product(betas, config.times)))


def oscillator_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  u0 = grid_lib.to_psi_gauge(build_datum(config.datum, config.grid))
  norm0 = grid_lib.norm_l2(u0)
  method = _method(config)
  mask = grid_lib.interior_mask(config.grid, config.grid.extent / 2)

  def row(t):
    gauge = oscillator.oscillator_propagate(u0, t, oscillator.Route.GAUGE,
                                            method)
    kernel = oscillator.oscillator_propagate(u0, t, oscillator.Route.KERNEL)
    error = utils.relative_error(gauge.samples, kernel.samples, mask)
    return {"t": t, "route_error": error,
            "gauge_norm_drift": abs(grid_lib.norm_l2(gauge) / norm0 - 1.),
            "kernel_norm_drift": abs(grid_lib.norm_l2(kernel) / norm0 - 1.)}

  return map_parallel(row, config.times)


def kernel_rows(config: config_lib.RunConfig) -> List[reports.Row]:
  """Unit mass and the semigroup law of the kernel started at the origin."""
  sys = resolve_system(config)
  grid = config.grid
  if sys.m != grid.m:
    raise errors.ConfigError("grid.m: the system has dimension {}, the grid "
                             "{}".format(sys.m, grid.m))
  origin = jnp.zeros(sys.m)

  def row(t):
    mass = kernels.kernel_mass(sys, origin, t, grid)
    direct = float(kernels.hormander_kernel(sys, origin, origin, t))
    composed = kernels.compose_kernels(sys, origin, origin, t / 2, t / 2, grid)
    return {"t": t, "mass": mass, "mass_error": abs(mass - 1.),
            "semigroup_error": abs(composed - direct) / direct}

  return map_parallel(row, config.times)


PRODUCERS = {
    "check-system": check_system_rows,
    "propagate": propagate_rows,
    "dispersive-scan": dispersive_rows,
    "uncertainty-scan": uncertainty_rows,
    "oscillator-compare": oscillator_rows,
    "kernel-check": kernel_rows,
}


def run(config: config_lib.RunConfig, quiet: bool = False) -> int:
  """Executes `config` and writes its report.

  Returns:
    0 on success, 1 if the configuration or a parameter is invalid, 2 on a
    numerical failure. Errors are logged with their class name.
  """
  try:
    if not config.output.path:
      raise errors.ConfigError("output.path: no report path given")
    rows = PRODUCERS[config.command](config)
    reports.write_report(config.output.path, config.command, rows,
                         config.output.format)
  except ArithmeticError as e:
    logging.error("%s: %s", type(e).__name__, e)
    return 2
  except (ValueError, OSError) as e:
    logging.error("%s: %s", type(e).__name__, e)
    return 1
  logging.info("Wrote %d rows to %s.", len(rows), config.output.path)
  if not quiet:
    print(reports.summary_table(config.command, rows))
  return 0
