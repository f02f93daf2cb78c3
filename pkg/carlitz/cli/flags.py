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


"""Command line flags and the construction of a RunConfig from them.

Settings are applied in a fixed order, later steps winning:

  1. the base configuration named by `--config` (a function in
     `carlitz.configs` returning `fdl.Config(RunConfig)`),
  2. the fiddlers named by `--fiddler`, in order,
  3. the dedicated flags (`--q`, `--N`, `--budget`, ...) that were given,
  4. the environment variable CARLITZ_ENUM_BUDGET,
  5. free-form overrides `--cfg.NAME=VALUE`,

and the result is built with `fdl.build`. Pass `flags_parser` to `app.run` so
that the short override form and hyphenated spellings such as `--n-max` are
understood:

    app.run(main, flags_parser=flags.flags_parser)
"""

import ast
import os
from typing import Any, Dict, List, Mapping, Optional, Sequence

from absl import app
from absl import flags
from absl import logging
import fiddle as fdl
from carlitz import scalars
from carlitz.cli import run_config

BUDGET_ENV = "CARLITZ_ENUM_BUDGET"

_CONFIG = flags.DEFINE_string(
    "config",
    default="default",
    help="The name of a base configuration function in carlitz.configs.")
_FIDDLER = flags.DEFINE_multi_string(
    "fiddler",
    default=[],
    help="The name of a fiddler in carlitz.configs; may be repeated.")
_CFG_SET = flags.DEFINE_multi_string(
    "cfg_set",
    default=[],
    help="Per-field settings NAME=VALUE. Typically given as --cfg.NAME=VALUE.")

_Q = flags.DEFINE_integer("q", None, "Field size; sets p and m.")
_P = flags.DEFINE_integer("p", None, "The characteristic.")
_M = flags.DEFINE_integer("m", None, "Degree of F_q over F_p.")
_MODULUS = flags.DEFINE_string(
    "modulus", None, "Irreducible of degree m, coefficients lowest first, "
    "e.g. 1,1,1.")
_N = flags.DEFINE_integer("N", None, "θ-precision.")
_T = flags.DEFINE_integer("T", None, "t-degree of truncated series.")
_B = flags.DEFINE_integer("B", None, "Degree bound of relation coefficients.")
_BUDGET = flags.DEFINE_integer("budget", None, "Enumeration budget.")
_SLACK_MIN = flags.DEFINE_integer(
    "slack_min", None, "Equations required beyond the unknowns.")
_FORMAT = flags.DEFINE_enum("format", None, list(run_config.OUTPUT_FORMATS),
                            "Output format.")
_SEED = flags.DEFINE_integer("seed", None, "Seed of every random choice.")

INDEX = flags.DEFINE_string("index", None, "Index parts, e.g. 1,5.")
POINT = flags.DEFINE_string(
    "u", None, "Point coordinates, e.g. 1,theta or theta+t,1/(theta+1).")
EXPR = flags.DEFINE_string(
    "expr", None, "A value expression; comma-separated for relations scan.")
N_MAX = flags.DEFINE_integer("n_max", 3, "Largest n of the known-relation "
                             "suite.")
MONOMIAL_DEGREE = flags.DEFINE_integer(
    "monomial_degree", 2, "Total degree of the monomial scan of "
    "relations independence.")
INJECT_FAULT = flags.DEFINE_bool(
    "inject_fault", False, "Corrupt one coefficient of the verified object.")

_OVERRIDE_PREFIX = "--cfg."


def rewrite_args(args: Sequence[str]) -> List[str]:
  """Rewrites short-form overrides and hyphenated flag names.

    * `--cfg.NAME=VALUE` becomes `--cfg_set=NAME=VALUE`.
    * `--n-max=3` becomes `--n_max=3`; only the name is touched.

  Args:
    args: Command-line args, program name first.

  Returns:
    Rewritten args.

  Raises:
    ValueError: For `--cfg.NAME` without a value.
  """

  def _rewrite(arg: str) -> str:
    if arg.startswith(_OVERRIDE_PREFIX):
      if "=" not in arg:
        raise ValueError(
            f"settings must be of the form `--cfg.NAME=VALUE`; got {arg!r}")
      rewritten = f"--cfg_set={arg[len(_OVERRIDE_PREFIX):]}"
      logging.debug("Rewrote flag %r to %r.", arg, rewritten)
      return rewritten
    if arg.startswith("--") and len(arg) > 2:
      name, sep, value = arg[2:].partition("=")
      if "-" in name:
        return "--" + name.replace("-", "_") + sep + value
    return arg

  return [args[0]] + [_rewrite(arg) for arg in args[1:]] if args else []


def flags_parser(args: Sequence[str]):
  """Flag parser for `app.run`; see absl.app.parse_flags_with_usage."""
  try:
    rewritten = rewrite_args(args)
  except ValueError as e:
    raise app.UsageError(str(e)) from e
  return app.parse_flags_with_usage(rewritten)


def parse_value(value: str, name: str) -> Any:
  """Parses a string `value` from the command line to a Python literal."""
  if value.lower() == "false":
    return False
  elif value.lower() == "true":
    return True
  try:
    return ast.literal_eval(value)
  except Exception as e:
    raise ValueError(
        f"could not parse literal value {value!r} while setting {name!r}; "
        "does a string need to be quoted?") from e


def parse_modulus(text: str) -> tuple:
  try:
    return tuple(int(c) for c in text.strip().strip("()").split(","))
  except ValueError as e:
    raise ValueError(f"cannot parse modulus {text!r}") from e


def apply_overrides_to(cfg: fdl.Config, overrides: Sequence[str]):
  """Applies NAME=VALUE settings to `cfg`."""
  for override in overrides:
    if "=" not in override:
      raise ValueError(f"setting {override!r} must be of the form NAME=VALUE")
    name, value = override.split("=", maxsplit=1)
    literal_value = parse_value(value, name)
    try:
      setattr(cfg, name, literal_value)
    except Exception as e:
      raise ValueError(f"could not set {name!r} to {value!r}: {e}") from e


def apply_fiddlers_to(cfg: fdl.Config, source_module: Any,
                      fiddlers: Sequence[str]):
  """Applies the named fiddlers of `source_module` to `cfg`, in order."""
  for fiddler_name in fiddlers:
    fiddler = getattr(source_module, fiddler_name, None)
    if not callable(fiddler):
      raise ValueError(f"no fiddler named {fiddler_name!r} in "
                       f"{source_module.__name__}")
    fiddler(cfg)


def _budget_from_environ(environ: Mapping[str, str]) -> Optional[int]:
  text = environ.get(BUDGET_ENV)
  if text is None:
    return None
  try:
    return int(text)
  except ValueError as e:
    raise ValueError(f"{BUDGET_ENV}={text!r} is not an integer") from e


def build_run_config(source_module: Any,
                     config_name: str = "default",
                     fiddlers: Sequence[str] = (),
                     settings: Optional[Mapping[str, Any]] = None,
                     overrides: Sequence[str] = (),
                     environ: Optional[Mapping[str, str]] = None
                    ) -> run_config.RunConfig:
  """Builds a RunConfig; see the module docstring for the order of steps.

  Args:
    source_module: The module holding base configurations and fiddlers.
    config_name: The base configuration.
    fiddlers: Fiddler names.
    settings: RunConfig field values from dedicated flags.
    overrides: NAME=VALUE settings.
    environ: The environment; `os.environ` when None.

  Returns:
    The built RunConfig.

  Raises:
    ValueError: For unknown names, malformed settings or invalid values.
  """
  base = getattr(source_module, config_name, None)
  if not callable(base):
    raise ValueError(
        f"no base configuration named {config_name!r} in "
        f"{source_module.__name__}")
  cfg = base()
  apply_fiddlers_to(cfg, source_module, fiddlers)
  for name, value in (settings or {}).items():
    setattr(cfg, name, value)
  budget = _budget_from_environ(os.environ if environ is None else environ)
  if budget is not None:
    logging.info("Enumeration budget %d from %s", budget, BUDGET_ENV)
    cfg.budget = budget
  apply_overrides_to(cfg, overrides)
  return fdl.build(cfg)


def settings_from_flags() -> Dict[str, Any]:
  """RunConfig field values of the dedicated flags that were given."""
  settings = {}
  if _Q.value is not None:
    settings["p"], settings["m"] = scalars.prime_power(_Q.value)
  if _P.value is not None:
    settings["p"] = _P.value
  if _M.value is not None:
    settings["m"] = _M.value
  if _MODULUS.value is not None:
    settings["modulus"] = parse_modulus(_MODULUS.value)
  for holder, name in ((_N, "N"), (_T, "T"), (_B, "degree_bound"),
                       (_BUDGET, "budget"), (_SLACK_MIN, "slack_min"),
                       (_FORMAT, "output_format"), (_SEED, "seed")):
    if holder.value is not None:
      settings[name] = holder.value
  return settings


def run_config_from_flags(source_module: Any) -> run_config.RunConfig:
  return build_run_config(
      source_module,
      config_name=_CONFIG.value,
      fiddlers=_FIDDLER.value,
      settings=settings_from_flags(),
      overrides=_CFG_SET.value)
