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
"""CSV and JSON reports with a versioned schema."""

import csv
import json
import math
from typing import Any, Dict, List, Sequence, Text, Tuple

from oudisp._src import typing
import tabulate

SCHEMA = "oudisp-report"
SCHEMA_VERSION = 1

Row = typing.Row

COLUMNS = {
    "check-system": ("t", "det_qt", "min_eig", "kalman_rank", "hypoelliptic",
                     "spectral_abscissa", "has_invariant_measure"),
    "propagate": ("t", "method", "norm_gauss", "norm_drift", "tail_ratio",
                  "field_path"),
    "dispersive-scan": ("datum", "p", "p_prime", "t", "lhs", "rhs", "ratio"),
    "uncertainty-scan": ("beta0_re", "beta0_im", "s", "a_max", "b_max",
                         "product", "threshold", "consistent"),
    "oscillator-compare": ("t", "route_error", "gauge_norm_drift",
                           "kernel_norm_drift"),
    "kernel-check": ("t", "mass", "mass_error", "semigroup_error"),
}


def schema_line(command: Text) -> Text:
  return "# {} v{} {}".format(SCHEMA, SCHEMA_VERSION, command)


def format_value(value: Any) -> Text:
  """Text form of a cell: 17 significant digits for reals."""
  if isinstance(value, bool):
    return "true" if value else "false"
  if isinstance(value, int):
    return str(value)
  if isinstance(value, float):
    return "%.16e" % value
  if value is None:
    return ""
  return str(value)


def _json_value(value: Any) -> Any:
  if isinstance(value, float) and not math.isfinite(value):
    return format_value(value)
  return value


def _ordered(command: Text, rows: Sequence[Row]) -> List[Tuple[Any, ...]]:
  if command not in COLUMNS:
    raise ValueError("Unknown command {!r}.".format(command))
  columns = COLUMNS[command]
  out = []
  for i, row in enumerate(rows):
    if set(row) != set(columns):
      raise ValueError("Row {} has columns {!r}, expected {!r}.".format(
          i, sorted(row), columns))
    out.append(tuple(row[c] for c in columns))
  return out


def write_csv(path: Text, command: Text, rows: Sequence[Row]):
  ordered = _ordered(command, rows)
  with open(path, "w", newline="") as fp:
    fp.write(schema_line(command) + "\n")
    writer = csv.writer(fp, lineterminator="\n")
    writer.writerow(COLUMNS[command])
    for row in ordered:
      writer.writerow([format_value(v) for v in row])


def write_json(path: Text, command: Text, rows: Sequence[Row]):
  ordered = _ordered(command, rows)
  columns = COLUMNS[command]
  doc = {
      "schema": SCHEMA,
      "version": SCHEMA_VERSION,
      "command": command,
      "columns": list(columns),
      "rows": [{c: _json_value(v) for c, v in zip(columns, row)}
               for row in ordered],
  }
  with open(path, "w") as fp:
    json.dump(doc, fp, indent=2, allow_nan=False)
    fp.write("\n")


def write_report(path: Text, command: Text, rows: Sequence[Row],
                 fmt: Text = "csv"):
  """Writes `rows` in `fmt`, one of `csv` or `json`."""
  if fmt == "csv":
    write_csv(path, command, rows)
  elif fmt == "json":
    write_json(path, command, rows)
  else:
    raise ValueError("Unknown report format {!r}.".format(fmt))


def read_csv(path: Text) -> Tuple[Text, List[Dict[Text, Text]]]:
  """Returns the command and the rows of a CSV report, cells as text.

  Raises:
    ValueError: If the schema line is missing or of another version.
  """
  with open(path, newline="") as fp:
    first = fp.readline().rstrip("\n")
    parts = first.split(" ")
    if len(parts) != 4 or parts[:3] != ["#", SCHEMA,
                                        "v{}".format(SCHEMA_VERSION)]:
      raise ValueError("{!r} has no {} v{} schema line.".format(
          path, SCHEMA, SCHEMA_VERSION))
    return parts[3], list(csv.DictReader(fp))


def summary_table(command: Text, rows: Sequence[Row],
                  max_rows: int = 20) -> Text:
  """Console table of the first `max_rows` rows."""
  ordered = _ordered(command, rows)
  table = tabulate.tabulate(ordered[:max_rows], headers=COLUMNS[command],
                            floatfmt=".6g")
  if len(ordered) > max_rows:
    table += "\n... {} more rows".format(len(ordered) - max_rows)
  return table
