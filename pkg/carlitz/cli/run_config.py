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


"""The settings shared by every command of the command line."""

import dataclasses
from typing import Optional, Tuple

from carlitz import scalars
from carlitz import serialization

OUTPUT_FORMATS = ("json", "text")


@dataclasses.dataclass(frozen=True)
class RunConfig:
  """Field, precision and search settings of one command.

  Built from `fdl.Config(RunConfig, ...)` descriptions in `carlitz.configs`;
  identical settings give byte-identical output.

  Attributes:
    p: The characteristic.
    m: The degree of F_q over F_p.
    modulus: Optional irreducible of degree m, lowest degree first.
    N: θ-precision of computed values.
    T: t-degree of truncated series.
    budget: Largest number of monic polynomials an enumeration may visit.
    degree_bound: The bound B on relation coefficients.
    slack_min: Equations required beyond the unknowns of a relation search.
    output_format: "json" or "text".
    seed: Seeds every random choice a command makes.
  """
  p: int = 2
  m: int = 1
  modulus: Optional[Tuple[int, ...]] = None
  N: int = 20
  T: int = 6
  budget: int = 2**22
  degree_bound: int = 3
  slack_min: int = 20
  output_format: str = "json"
  seed: int = 0

  def __post_init__(self):
    if self.modulus is not None:
      object.__setattr__(self, "modulus", tuple(self.modulus))
    if not scalars.is_prime(self.p):
      raise ValueError(f"p={self.p} is not prime")
    for name in ("m", "N", "T", "budget"):
      if getattr(self, name) < 1:
        raise ValueError(f"{name} must be positive, got {getattr(self, name)}")
    for name in ("degree_bound", "slack_min"):
      if getattr(self, name) < 0:
        raise ValueError(f"{name} must be >= 0, got {getattr(self, name)}")
    if self.budget < self.q:
      raise ValueError(f"budget {self.budget} is below q={self.q}")
    if self.output_format not in OUTPUT_FORMATS:
      raise ValueError(f"output_format must be one of {OUTPUT_FORMATS}, got "
                       f"{self.output_format!r}")

  @property
  def q(self) -> int:
    return self.p**self.m

  @property
  def field(self) -> scalars.FieldDesc:
    return scalars.field_create(self.p, self.m, self.modulus)


serialization.register_dataclass(RunConfig, "run_config")
