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


"""The commands of the command line: value, verify and relations.

Every command returns a `CommandOutput` holding the settings it ran with and
its result, so that its JSON document can be loaded back with
`serialization.load_json`. A command that completes with a failed check has
`ok=False` and exits with status 1.

    carlitz zeta --q 3 --index 1,5 --N 30
    carlitz verify system --q 3 --index 1,2 --u 1,1 --T 6 --N 30
    carlitz relations rational --q 3 --expr "zeta(1)/pi^1" --B 8
"""

import dataclasses
import json
import random
from typing import Any, Dict, List, Optional, Sequence, Tuple

from absl import app
from absl import logging
from carlitz import laurent
from carlitz import motives
from carlitz import relations
from carlitz import scalars
from carlitz import serialization
from carlitz import specials
from carlitz import tate
from carlitz.cli import expressions
from carlitz.cli import run_config

VALUE_KINDS = ("zeta", "cmpl", "lseries", "pi", "omega")
VERIFY_TARGETS = ("omega", "lseries", "system", "psitilde")
RELATION_COMMANDS = ("scan", "rational", "suite", "independence")

# Injected faults change the s^-1 coefficient, which every window contains.
FAULT_EXPONENT = -1


@dataclasses.dataclass(frozen=True)
class CommandArgs:
  """Per-command arguments that are not part of RunConfig."""
  index: Optional[str] = None
  point: Optional[str] = None
  expr: Optional[str] = None
  n_max: int = 3
  monomial_degree: int = 2
  inject_fault: bool = False


@dataclasses.dataclass(frozen=True)
class ValueResult:
  kind: str
  q: int
  N: int
  value: Any
  index: Optional[specials.Index] = None
  point: Optional[specials.TPoint] = None
  T: Optional[int] = None


@dataclasses.dataclass(frozen=True)
class Fault:
  """Where a fault was injected: entry (i, j), t-degree and s-exponent."""
  entry: Tuple[int, int]
  t_degree: int
  exponent: int


@dataclasses.dataclass(frozen=True)
class Verification:
  """A residual report, with one report per submatrix for `system`."""
  target: str
  report: motives.ResidualReport
  blocks: Tuple[Tuple[motives.IdElement, motives.ResidualReport], ...] = ()
  fault: Optional[Fault] = None

  @property
  def ok(self) -> bool:
    return self.report.ok and all(report.ok for _, report in self.blocks)


@dataclasses.dataclass(frozen=True)
class CommandOutput:
  command: Tuple[str, ...]
  seed: int
  config: run_config.RunConfig
  ok: bool
  result: Any


def _encode_value_result(result: ValueResult) -> Dict[str, Any]:
  """Writes {kind, index, q, N, value}, plus point and T when they are set."""
  out = {
      "kind": result.kind,
      "index": None if result.index is None else result.index.parts,
      "q": result.q,
      "N": result.N,
      "value": result.value,
  }
  if result.point is not None:
    out["point"] = result.point
  if result.T is not None:
    out["T"] = result.T
  return out


def _decode_value_result(fields: Dict[str, Any]) -> ValueResult:
  fields = dict(fields)
  if fields.get("index") is not None:
    fields["index"] = specials.Index(fields["index"])
  return ValueResult(**fields)


serialization.register(ValueResult, "value_result", _encode_value_result,
                       _decode_value_result)
for _type, _tag in ((Fault, "fault"), (Verification, "verification"),
                    (CommandOutput, "command_output")):
  serialization.register_dataclass(_type, _tag)


def _require(value: Optional[str], flag: str, command: str) -> str:
  if value is None:
    raise app.UsageError(f"{command} needs --{flag}")
  return value


def _index(args: CommandArgs, command: str) -> specials.Index:
  text = _require(args.index, "index", command)
  try:
    return specials.Index.parse(text)
  except ValueError as e:
    raise app.UsageError(str(e)) from e


def _point(args: CommandArgs, field: scalars.FieldDesc,
           index: specials.Index) -> specials.TPoint:
  if args.point is None:
    return specials.TPoint.ones(field, index.dep)
  return expressions.parse_point(args.point, field)


def cmd_value(kind: str, cfg: run_config.RunConfig,
              args: CommandArgs) -> Tuple[ValueResult, bool]:
  """Computes ζ, Li, L(θ), π̃ or the series Ω."""
  field = cfg.field
  if kind == "pi":
    return ValueResult(kind, cfg.q, cfg.N, tate.pi_build(field, cfg.N)), True
  if kind == "omega":
    return ValueResult(
        kind, cfg.q, cfg.N, tate.omega_build(field, cfg.T, cfg.N),
        T=cfg.T), True
  index = _index(args, kind)
  if kind == "zeta":
    value = specials.zeta(field, index, cfg.N, budget=cfg.budget)
    return ValueResult(kind, cfg.q, cfg.N, value, index=index), True
  point = _point(args, field, index)
  if kind == "cmpl":
    value = specials.cmpl_eval(index, point, cfg.N)
  else:
    value = specials.lseries_value(index, point, cfg.N)
  return ValueResult(kind, cfg.q, cfg.N, value, index=index, point=point), True


def _single_report(residual: tate.TSeries, floor: int) -> motives.ResidualReport:
  return motives.ResidualReport(
      (motives.entry_residual((1, 1), residual, floor),))


def cmd_verify(target: str, cfg: run_config.RunConfig,
               args: CommandArgs) -> Tuple[Verification, bool]:
  """Runs one residual check; `inject_fault` must make it fail."""
  if target not in VERIFY_TARGETS:
    raise app.UsageError(
        f"unknown verify target {target!r}; expected one of {VERIFY_TARGETS}")
  field = cfg.field
  floor = laurent.theta_floor(field, cfg.N)
  rng = random.Random(cfg.seed)
  fault = None
  if args.inject_fault:
    t_degree = rng.randint(0, cfg.T)
    logging.info("Injecting a fault at t^%d, s^%d", t_degree, FAULT_EXPONENT)
  if target == "omega":
    omega = tate.omega_build(field, cfg.T, cfg.N)
    if args.inject_fault:
      omega = tate.bump(omega, t_degree, FAULT_EXPONENT)
      fault = Fault((1, 1), t_degree, FAULT_EXPONENT)
    result = Verification(
        target, _single_report(tate.omega_residual(omega), floor), fault=fault)
    return result, result.ok
  index = _index(args, f"verify {target}")
  point = _point(args, field, index)
  if target == "lseries":
    perturb = None
    if args.inject_fault:
      perturb = lambda series: tate.bump(series, t_degree, FAULT_EXPONENT)
      fault = Fault((1, 1), t_degree, FAULT_EXPONENT)
    residual = specials.lseries_recursion_residual(index, point, cfg.T, cfg.N,
                                                   perturb)
    result = Verification(target, _single_report(residual, floor), fault=fault)
    return result, result.ok
  system = motives.build_system(index, point, cfg.T, cfg.N)
  if args.inject_fault:
    entry = (system.size, 1)
    if target == "psitilde":
      t_degree = 0
    system = motives.corrupt(system, entry, t_degree, FAULT_EXPONENT)
    fault = Fault(entry, t_degree, FAULT_EXPONENT)
  if target == "psitilde":
    result = Verification(target, motives.psi_tilde_check(system), fault=fault)
    return result, result.ok
  blocks = tuple(
      (element,
       motives.verify_difference_equation(motives.submatrix(system, element)))
      for element in motives.index_set(index.dep))
  result = Verification(
      target, motives.verify_difference_equation(system), blocks, fault)
  return result, result.ok


def cmd_relations(sub: str, cfg: run_config.RunConfig,
                  args: CommandArgs) -> Tuple[Any, bool]:
  """Relation scans; a scan that finds nothing is still a success."""
  field = cfg.field
  command = f"relations {sub}"
  if sub == "scan":
    text = _require(args.expr, "expr", command)
    labels, values = expressions.evaluate_list(text, field, cfg.N, cfg.T,
                                               cfg.budget)
    _, recheck = expressions.evaluate_list(
        text, field, relations.recheck_precision(cfg.N), cfg.T, cfg.budget)
    basis = relations.find_linear_relations(
        relations.RelationQuery(values, cfg.degree_bound, cfg.slack_min,
                                labels), recheck)
    return basis, True
  if sub == "rational":
    text = _require(args.expr, "expr", command)
    expression = expressions.parse_expression(text, field)
    value = expressions.evaluate(expression, field, cfg.N, cfg.T, cfg.budget)
    recheck = expressions.evaluate(expression, field,
                                   relations.recheck_precision(cfg.N), cfg.T,
                                   cfg.budget)
    return relations.rational_reconstruct(value, cfg.degree_bound,
                                          cfg.slack_min, recheck), True
  if sub == "suite":
    report = relations.known_relation_suite(
        field,
        args.n_max,
        cfg.N,
        degree_bound=cfg.degree_bound,
        slack_min=cfg.slack_min,
        budget=cfg.budget)
    return report, report.ok
  if sub == "independence":
    index = _index(args, command)
    report = relations.independence_report(
        index,
        _point(args, field, index),
        cfg.degree_bound,
        cfg.N,
        monomial_degree=args.monomial_degree,
        slack_min=cfg.slack_min)
    return report, True
  raise app.UsageError(f"unknown relations command {sub!r}; expected one of "
                       f"{RELATION_COMMANDS}")


def run(command: Sequence[str], cfg: run_config.RunConfig,
        args: CommandArgs) -> CommandOutput:
  """Dispatches `command`, e.g. ("zeta",) or ("verify", "system")."""
  command = tuple(command)
  if not command:
    raise app.UsageError(
        f"expected a command: one of {VALUE_KINDS}, verify or relations")
  head, rest = command[0], command[1:]
  if head in VALUE_KINDS:
    if rest:
      raise app.UsageError(f"unexpected arguments {rest} after {head}")
    result, ok = cmd_value(head, cfg, args)
  elif head in ("verify", "relations"):
    if len(rest) != 1:
      raise app.UsageError(f"{head} takes exactly one subcommand")
    handler = cmd_verify if head == "verify" else cmd_relations
    result, ok = handler(rest[0], cfg, args)
  else:
    raise app.UsageError(f"unknown command {head!r}")
  return CommandOutput(command, cfg.seed, cfg, ok, result)


_PLAIN_TYPES = (specials.Index, specials.TPoint, laurent.RationalK,
                scalars.PolyTheta, scalars.FieldDesc, tate.TPoly,
                motives.IdElement)


def _text_lines(value: Any, indent: str) -> List[str]:
  if isinstance(value, laurent.LaurentL):
    return [indent + laurent.theta_expansion(value)]
  if isinstance(value, tate.TSeries):
    return [
        f"{indent}t^{k}: {laurent.theta_expansion(c)}"
        for k, c in enumerate(value.coeffs)
    ]
  if value is None or isinstance(value, (bool, int, str) + _PLAIN_TYPES):
    return [f"{indent}{value}"]
  if isinstance(value, (tuple, list)):
    if not value:
      return [f"{indent}(none)"]
    lines = []
    for item in value:
      item_lines = _text_lines(item, indent + "  ")
      lines.append(indent + "- " + item_lines[0].lstrip())
      lines.extend(item_lines[1:])
    return lines
  if isinstance(value, dict):
    lines = []
    for key, item in sorted(value.items(), key=lambda kv: str(kv[0])):
      lines.append(f"{indent}{key}:")
      lines.extend(_text_lines(item, indent + "  "))
    return lines
  if dataclasses.is_dataclass(value):
    lines = []
    for f in dataclasses.fields(value):
      if not f.init:
        continue
      item = getattr(value, f.name)
      item_lines = _text_lines(item, indent + "  ")
      if len(item_lines) == 1:
        lines.append(f"{indent}{f.name}: {item_lines[0].strip()}")
      else:
        lines.append(f"{indent}{f.name}:")
        lines.extend(item_lines)
    return lines
  return [f"{indent}{value!r}"]


def render(output: CommandOutput) -> str:
  """The document of `output` in its configured format."""
  if output.config.output_format == "text":
    return "\n".join(_text_lines(output, ""))
  return serialization.dump_json(output)


def render_error(error: Exception, output_format: str = "json") -> str:
  if output_format == "text":
    return f"error: {type(error).__name__}: {error}"
  return json.dumps(
      {"error": {"type": type(error).__name__, "message": str(error)}},
      sort_keys=True,
      ensure_ascii=False)
