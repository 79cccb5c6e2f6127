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
"""Run configurations: JSON documents parsed into immutable values.

A configuration looks like::

    {
      "command": "dispersive-scan",
      "system": {"preset": "ou"},
      "grid": {"m": 1, "extent": 16.0, "n_points": 1024},
      "datum": {"kind": "gaussian", "beta": 0.5, "time_adapted": true},
      "times": [0.5, "pi/2", 1.0],
      "p_values": [1, "4/3", 2],
      "output": {"path": "scan.csv", "format": "csv"}
    }

Reals may be written as numbers or as strings such as `"pi/2"`,
`"-3*pi/4"` or `"4/3"`; complex numbers as a real or as `[re, im]`.
"""

import json
import math
import re
from typing import Any, Mapping, NamedTuple, Optional, Sequence, Text, Tuple

from oudisp._src import errors
from oudisp._src import grid as grid_lib

COMMANDS = ("check-system", "propagate", "dispersive-scan",
            "uncertainty-scan", "oscillator-compare", "kernel-check")
PRESETS = ("ou", "kolmogorov", "smoluchowski-kramers")
DATUM_KINDS = ("gaussian", "hermite", "file")
METHODS = ("chirp_ft", "quadrature", "hermite")
ENGINES = ("czt", "direct")
FORMATS = ("csv", "json")

# Commands that propagate a datum.
DATUM_COMMANDS = ("propagate", "dispersive-scan", "oscillator-compare")

_REAL = re.compile(
    r"^\s*(?P<sign>[+-]?)\s*"
    r"(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?)?\s*"
    r"(?P<pi>\*?\s*pi)?\s*"
    r"(?:/\s*(?P<den>\d+(?:\.\d*)?))?\s*$")


class SystemConfig(NamedTuple):
  """A preset name, or explicit `q` and `b` matrices.

  `n` is the dimension of `ou` and the block size of `kolmogorov`; for `ou`
  it defaults to the grid dimension.
  """
  preset: Optional[Text] = "ou"
  n: Optional[int] = None
  q: Optional[Tuple[Tuple[float, ...], ...]] = None
  b: Optional[Tuple[Tuple[float, ...], ...]] = None


class DatumSpec(NamedTuple):
  """Initial datum.

  For `gaussian`, `beta` and `c` describe the flat gauge Gaussian
  `c e^{-beta |x|^2}`. With `time_adapted` the imaginary part of `beta` is
  replaced by `cot(t)/4` at each time.
  """
  kind: Text
  beta: complex = 0.5
  c: complex = 1.
  time_adapted: bool = False
  index: Tuple[int, ...] = (0,)
  path: Optional[Text] = None


class OutputSpec(NamedTuple):
  path: Optional[Text] = None
  format: Text = "csv"


class RunConfig(NamedTuple):
  command: Text
  system: SystemConfig
  grid: grid_lib.GridSpec
  datum: Optional[DatumSpec]
  times: Tuple[float, ...]
  p_values: Tuple[float, ...] = ()
  betas: Tuple[complex, ...] = ()
  random_states: int = 0
  seed: int = 0
  method: Text = "chirp_ft"
  engine: Text = "czt"
  order: Optional[int] = None
  output: OutputSpec = OutputSpec()


def _fail(name: Text, message: Text, *args) -> errors.ConfigError:
  return errors.ConfigError("{}: {}".format(name, message.format(*args)))


def parse_real(value: Any, name: Text) -> float:
  """Parses a number or a string like `"pi/2"`, `"-3*pi/4"` or `"4/3"`.

  Raises:
    ConfigError: If `value` is not a finite real.
  """
  if isinstance(value, bool):
    raise _fail(name, "expected a real number, got {!r}", value)
  if isinstance(value, (int, float)):
    out = float(value)
  elif isinstance(value, str):
    match = _REAL.match(value)
    if not match or not (match.group("num") or match.group("pi")):
      raise _fail(name, "cannot parse {!r} as a real number", value)
    out = float(match.group("num") or 1.)
    if match.group("pi"):
      out *= math.pi
    if match.group("den"):
      den = float(match.group("den"))
      if den == 0.:
        raise _fail(name, "division by zero in {!r}", value)
      out /= den
    if match.group("sign") == "-":
      out = -out
  else:
    raise _fail(name, "expected a real number, got {!r}", value)
  if not math.isfinite(out):
    raise _fail(name, "{!r} is not finite", value)
  return out


def parse_complex(value: Any, name: Text) -> complex:
  """Parses a real or a `[re, im]` pair."""
  if isinstance(value, (list, tuple)):
    if len(value) != 2:
      raise _fail(name, "expected [re, im], got {!r}", value)
    return complex(parse_real(value[0], name), parse_real(value[1], name))
  return complex(parse_real(value, name), 0.)


def _parse_int(value: Any, name: Text, minimum: int = 0) -> int:
  if isinstance(value, bool) or not isinstance(value, int):
    raise _fail(name, "expected an integer, got {!r}", value)
  if value < minimum:
    raise _fail(name, "must be at least {}, got {!r}", minimum, value)
  return value


def _parse_bool(value: Any, name: Text) -> bool:
  if not isinstance(value, bool):
    raise _fail(name, "expected true or false, got {!r}", value)
  return value


def _parse_choice(value: Any, name: Text, choices: Sequence[Text]) -> Text:
  if value not in choices:
    raise _fail(name, "expected one of {}, got {!r}", ", ".join(choices),
                value)
  return value


def _parse_list(value: Any, name: Text) -> Sequence[Any]:
  if not isinstance(value, list):
    raise _fail(name, "expected a list, got {!r}", value)
  return value


def _parse_object(value: Any, name: Text) -> Mapping[Text, Any]:
  if not isinstance(value, dict):
    raise _fail(name, "expected an object, got {!r}", value)
  return value


def _check_keys(obj: Mapping[Text, Any], name: Text, allowed: Sequence[Text]):
  unknown = sorted(set(obj) - set(allowed))
  if unknown:
    raise _fail(name, "unknown keys {}", ", ".join(map(repr, unknown)))


def _parse_matrix(value: Any, name: Text) -> Tuple[Tuple[float, ...], ...]:
  rows = _parse_list(value, name)
  out = tuple(
      tuple(parse_real(v, "{}[{}][{}]".format(name, i, j))
            for j, v in enumerate(_parse_list(row, "{}[{}]".format(name, i))))
      for i, row in enumerate(rows))
  if not out or any(len(row) != len(out) for row in out):
    raise _fail(name, "expected a square matrix, got {!r}", value)
  return out


def _parse_system(value: Any) -> SystemConfig:
  if isinstance(value, str):
    value = {"preset": value}
  obj = _parse_object(value, "system")
  _check_keys(obj, "system", SystemConfig._fields)
  preset = obj.get("preset")
  n = obj.get("n")
  if n is not None:
    n = _parse_int(n, "system.n", minimum=1)
  if preset is not None:
    _parse_choice(preset, "system.preset", PRESETS)
    if "q" in obj or "b" in obj:
      raise _fail("system", "give either a preset or q and b, not both")
    return SystemConfig(preset=preset, n=n)
  if "q" not in obj or "b" not in obj:
    raise _fail("system", "needs a preset or both q and b")
  q = _parse_matrix(obj["q"], "system.q")
  b = _parse_matrix(obj["b"], "system.b")
  if len(q) != len(b):
    raise _fail("system.b", "must match the shape of system.q")
  return SystemConfig(preset=None, n=n, q=q, b=b)


def _parse_grid(value: Any) -> grid_lib.GridSpec:
  obj = _parse_object(value, "grid")
  _check_keys(obj, "grid", grid_lib.GridSpec._fields)
  m = _parse_int(obj.get("m", 1), "grid.m", minimum=1)
  extent = obj.get("extent")
  if extent is not None:
    extent = parse_real(extent, "grid.extent")
  n_points = obj.get("n_points")
  if n_points is not None:
    n_points = _parse_int(n_points, "grid.n_points")
  try:
    return grid_lib.grid_spec(m, extent, n_points)
  except errors.OutOfRange as e:
    raise _fail("grid", "{}", e)


def _parse_datum(value: Any) -> DatumSpec:
  obj = _parse_object(value, "datum")
  _check_keys(obj, "datum", DatumSpec._fields)
  kind = _parse_choice(obj.get("kind"), "datum.kind", DATUM_KINDS)
  datum = DatumSpec(kind=kind)
  if kind == "gaussian":
    beta = parse_complex(obj.get("beta", 0.5), "datum.beta")
    if not beta.real > 0.:
      raise _fail("datum.beta", "real part must be positive, got {!r}", beta)
    datum = datum._replace(
        beta=beta,
        c=parse_complex(obj.get("c", 1.), "datum.c"),
        time_adapted=_parse_bool(obj.get("time_adapted", False),
                                 "datum.time_adapted"))
  elif kind == "hermite":
    index = obj.get("index", 0)
    if not isinstance(index, list):
      index = [index]
    datum = datum._replace(index=tuple(
        _parse_int(k, "datum.index[{}]".format(i)) for i, k in
        enumerate(index)))
  else:
    path = obj.get("path")
    if not isinstance(path, str) or not path:
      raise _fail("datum.path", "expected a file path, got {!r}", path)
    datum = datum._replace(path=path)
  return datum


def _parse_reals(value: Any, name: Text) -> Tuple[float, ...]:
  return tuple(parse_real(v, "{}[{}]".format(name, i))
               for i, v in enumerate(_parse_list(value, name)))


def _parse_output(value: Any) -> OutputSpec:
  obj = _parse_object(value, "output")
  _check_keys(obj, "output", OutputSpec._fields)
  path = obj.get("path")
  if path is not None and (not isinstance(path, str) or not path):
    raise _fail("output.path", "expected a file path, got {!r}", path)
  fmt = _parse_choice(obj.get("format", "csv"), "output.format", FORMATS)
  return OutputSpec(path=path, format=fmt)


def from_dict(obj: Mapping[Text, Any]) -> RunConfig:
  """Validates a decoded JSON document.

  Raises:
    ConfigError: Naming the first offending field.
  """
  obj = _parse_object(obj, "config")
  _check_keys(obj, "config", RunConfig._fields)
  command = _parse_choice(obj.get("command"), "command", COMMANDS)
  grid = _parse_grid(obj.get("grid", {}))
  datum = None
  if "datum" in obj:
    datum = _parse_datum(obj["datum"])
  elif command in DATUM_COMMANDS:
    raise _fail("datum", "required by {!r}", command)
  times = _parse_reals(obj.get("times", []), "times")
  if not times:
    raise _fail("times", "at least one time is required")
  p_values = _parse_reals(obj.get("p_values", []), "p_values")
  for i, p in enumerate(p_values):
    if not 1. <= p <= 2.:
      raise _fail("p_values[{}]".format(i), "must lie in [1, 2], got {!r}", p)
  if command == "dispersive-scan" and not p_values:
    raise _fail("p_values", "at least one exponent is required")
  betas = tuple(parse_complex(v, "betas[{}]".format(i))
                for i, v in enumerate(_parse_list(obj.get("betas", []),
                                                  "betas")))
  random_states = _parse_int(obj.get("random_states", 0), "random_states")
  if command == "uncertainty-scan" and not betas and not random_states:
    raise _fail("betas", "give betas or a positive random_states")
  order = obj.get("order")
  if order is not None:
    order = _parse_int(order, "order")
  return RunConfig(
      command=command,
      system=_parse_system(obj.get("system", "ou")),
      grid=grid,
      datum=datum,
      times=times,
      p_values=p_values,
      betas=betas,
      random_states=random_states,
      seed=_parse_int(obj.get("seed", 0), "seed"),
      method=_parse_choice(obj.get("method", "chirp_ft"), "method", METHODS),
      engine=_parse_choice(obj.get("engine", "czt"), "engine", ENGINES),
      order=order,
      output=_parse_output(obj.get("output", {})))


def from_json(text: Text) -> RunConfig:
  try:
    obj = json.loads(text)
  except ValueError as e:
    raise errors.ConfigError("config: invalid JSON ({})".format(e))
  return from_dict(obj)


def load_config(path: Text) -> RunConfig:
  try:
    with open(path) as fp:
      text = fp.read()
  except OSError as e:
    raise errors.ConfigError("config: cannot read {!r} ({})".format(path, e))
  return from_json(text)


def _complex_to_json(z: complex):
  return [z.real, z.imag]


def to_dict(config: RunConfig) -> Mapping[Text, Any]:
  """Canonical JSON value of `config`; `from_dict` inverts it exactly."""
  system = config.system
  if system.preset is not None:
    system_obj = {"preset": system.preset}
  else:
    system_obj = {"q": [list(row) for row in system.q],
                  "b": [list(row) for row in system.b]}
  if system.n is not None:
    system_obj["n"] = system.n
  obj = {
      "command": config.command,
      "system": system_obj,
      "grid": dict(config.grid._asdict()),
      "times": list(config.times),
      "p_values": list(config.p_values),
      "betas": [_complex_to_json(z) for z in config.betas],
      "random_states": config.random_states,
      "seed": config.seed,
      "method": config.method,
      "engine": config.engine,
      "order": config.order,
      "output": {"path": config.output.path, "format": config.output.format},
  }
  datum = config.datum
  if datum is not None:
    datum_obj = {"kind": datum.kind}
    if datum.kind == "gaussian":
      datum_obj.update(beta=_complex_to_json(datum.beta),
                       c=_complex_to_json(datum.c),
                       time_adapted=datum.time_adapted)
    elif datum.kind == "hermite":
      datum_obj["index"] = list(datum.index)
    else:
      datum_obj["path"] = datum.path
    obj["datum"] = datum_obj
  return obj


def to_json(config: RunConfig) -> Text:
  return json.dumps(to_dict(config), indent=2, sort_keys=True)


def with_overrides(config: RunConfig,
                   output: Optional[Text] = None,
                   fmt: Optional[Text] = None,
                   engine: Optional[Text] = None,
                   seed: Optional[int] = None) -> RunConfig:
  """Applies command line overrides.

  `engine="hermite"` selects the Hermite propagation method, the other
  engines select `chirp_ft` with that Fourier engine.
  """
  out = config.output
  if output is not None:
    out = out._replace(path=output)
  if fmt is not None:
    out = out._replace(format=_parse_choice(fmt, "format", FORMATS))
  config = config._replace(output=out)
  if engine is not None:
    if engine == "hermite":
      config = config._replace(method="hermite")
    else:
      config = config._replace(
          method="chirp_ft",
          engine=_parse_choice(engine, "engine", ENGINES))
  if seed is not None:
    config = config._replace(seed=_parse_int(seed, "seed"))
  return config
