# coding=utf-8
# Copyright 2022 The Carlitz-Periods Authors.
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


r"""Command line entry point.

    python3 -m carlitz.cli.main zeta --q 3 --index 1,5 --N 30
    python3 -m carlitz.cli.main verify omega --q 2 --T 8 --N 40
    python3 -m carlitz.cli.main relations suite --q 2 --n-max 3 --N 50 \
      --config=acceptance --fiddler=large_budget --cfg.seed=7

Exit status: 0 on success, 1 when a computation fails or a check does not
pass, 2 for malformed command lines.
"""

import sys
from typing import Sequence

from absl import app
from absl import logging
from carlitz import configs
from carlitz.cli import commands
from carlitz.cli import expressions
from carlitz.cli import flags

EXIT_FAILURE = 1
EXIT_USAGE = 2

_COMPUTATION_ERRORS = (ValueError, ArithmeticError, RuntimeError,
                       NotImplementedError)


def _emit(text: str):
  sys.stdout.write(text + "\n")


def _args_from_flags() -> commands.CommandArgs:
  return commands.CommandArgs(
      index=flags.INDEX.value,
      point=flags.POINT.value,
      expr=flags.EXPR.value,
      n_max=flags.N_MAX.value,
      monomial_degree=flags.MONOMIAL_DEGREE.value,
      inject_fault=flags.INJECT_FAULT.value)


def main(argv: Sequence[str]) -> int:
  """Runs the command named by the positional arguments; returns the status."""
  try:
    cfg = flags.run_config_from_flags(configs)
  except (ValueError, app.UsageError) as e:
    _emit(commands.render_error(e))
    return EXIT_USAGE
  try:
    output = commands.run(argv[1:], cfg, _args_from_flags())
  except (app.UsageError, expressions.ExpressionError) as e:
    _emit(commands.render_error(e, cfg.output_format))
    return EXIT_USAGE
  except _COMPUTATION_ERRORS as e:
    logging.exception("%s failed", " ".join(argv[1:]))
    _emit(commands.render_error(e, cfg.output_format))
    return EXIT_FAILURE
  _emit(commands.render(output))
  return 0 if output.ok else EXIT_FAILURE


def run():
  app.run(main, flags_parser=flags.flags_parser)


if __name__ == "__main__":
  run()
