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
"""Command line entry point.

    oudisp --config=scan.json --output=scan.csv --format=csv

Exit status is 0 on success, 1 for an invalid configuration and 2 for a
numerical failure such as `SingularTime`, `GridAliasing` or
`NotHypoelliptic`.
"""

from absl import app
from absl import flags
from absl import logging
from oudisp._src import config as config_lib
from oudisp._src import errors
from oudisp._src import pipelines

FLAGS = flags.FLAGS

flags.DEFINE_string("config", None, "Path of the JSON run configuration.")
flags.DEFINE_string("output", None, "Report path, overrides output.path.")
flags.DEFINE_enum("format", None, list(config_lib.FORMATS),
                  "Report format, overrides output.format.")
flags.DEFINE_enum("engine", None, ["czt", "direct", "hermite"],
                  "Fourier engine, or `hermite` for Hermite propagation.")
flags.DEFINE_integer("seed", None, "Seed for randomised scans.")
flags.DEFINE_bool("quiet", False, "Only log warnings and skip the summary.")


def main(argv):
  if len(argv) > 1:
    raise app.UsageError("Too many command-line arguments.")
  if FLAGS.quiet:
    logging.set_verbosity(logging.WARNING)
  if not FLAGS.config:
    logging.error("ConfigError: config: --config is required")
    return 1
  try:
    config = config_lib.with_overrides(
        config_lib.load_config(FLAGS.config),
        output=FLAGS.output,
        fmt=FLAGS.format,
        engine=FLAGS.engine,
        seed=FLAGS.seed)
  except errors.ConfigError as e:
    logging.error("ConfigError: %s", e)
    return 1
  return pipelines.run(config, quiet=FLAGS.quiet)


def run_main():
  app.run(main)


if __name__ == "__main__":
  run_main()
