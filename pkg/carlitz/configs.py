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


"""Base configurations and fiddlers for the command line.

A base configuration returns an unbuilt `fdl.Config(RunConfig)`; a fiddler
mutates one in place. Select them with `--config=NAME` and `--fiddler=NAME`.
"""

import fiddle as fdl
from carlitz import specials
from carlitz.cli import run_config


def default() -> fdl.Config[run_config.RunConfig]:
  """Small precision over F_2, suitable for quick checks."""
  return fdl.Config(
      run_config.RunConfig,
      p=2,
      m=1,
      N=20,
      T=6,
      budget=specials.DEFAULT_BUDGET,
      degree_bound=3,
      slack_min=20,
      output_format="json",
      seed=0)


def desk_scale() -> fdl.Config[run_config.RunConfig]:
  cfg = default()
  cfg.N = 30
  cfg.budget = 2**16
  return cfg


def acceptance() -> fdl.Config[run_config.RunConfig]:
  """The precision of the acceptance runs: T = 8, N = 40, B = 8."""
  cfg = default()
  cfg.N = 40
  cfg.T = 8
  cfg.degree_bound = 8
  return cfg


def large_budget(cfg: fdl.Config[run_config.RunConfig]):
  cfg.budget = 2**26


def high_precision(cfg: fdl.Config[run_config.RunConfig]):
  """Doubles N and lengthens the t-truncation to match."""
  cfg.N = 2 * cfg.N
  cfg.T = cfg.T + 4


def text_output(cfg: fdl.Config[run_config.RunConfig]):
  cfg.output_format = "text"
