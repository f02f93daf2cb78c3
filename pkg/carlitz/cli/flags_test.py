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


"""Tests for flags."""

from absl import flags as absl_flags
from absl.testing import absltest
from absl.testing import flagsaver
from absl.testing import parameterized
from carlitz import configs
from carlitz.cli import flags


def setUpModule():
  # pytest does not parse flags; absltest.main does.
  if not absl_flags.FLAGS.is_parsed():
    absl_flags.FLAGS.mark_as_parsed()


class RewriteArgsTest(parameterized.TestCase):

  def test_rewrites(self):
    self.assertEqual(
        flags.rewrite_args([
            "carlitz", "relations", "suite", "--cfg.N=30", "--n-max=4",
            "--inject-fault", "--slack-min", "10", "--q=2"
        ]), [
            "carlitz", "relations", "suite", "--cfg_set=N=30", "--n_max=4",
            "--inject_fault", "--slack_min", "10", "--q=2"
        ])

  def test_values_keep_hyphens(self):
    self.assertEqual(
        flags.rewrite_args(["carlitz", "--expr=zeta(1)-x", "--cfg.seed=-1"]),
        ["carlitz", "--expr=zeta(1)-x", "--cfg_set=seed=-1"])

  def test_override_needs_value(self):
    with self.assertRaises(ValueError):
      flags.rewrite_args(["carlitz", "--cfg.N"])


class ParseValueTest(parameterized.TestCase):

  @parameterized.named_parameters(
      dict(testcase_name="true", text="true", expected=True),
      dict(testcase_name="false", text="False", expected=False),
      dict(testcase_name="int", text="30", expected=30),
      dict(testcase_name="tuple", text="(1, 1, 1)", expected=(1, 1, 1)),
      dict(testcase_name="string", text="'text'", expected="text"),
  )
  def test_literals(self, text, expected):
    self.assertEqual(flags.parse_value(text, "x"), expected)

  def test_unquoted_string(self):
    with self.assertRaisesRegex(ValueError, "quoted"):
      flags.parse_value("text", "output_format")


class BuildRunConfigTest(parameterized.TestCase):

  def test_default(self):
    cfg = flags.build_run_config(configs, environ={})
    self.assertEqual((cfg.p, cfg.N, cfg.T), (2, 20, 6))

  def test_order(self):
    base = flags.build_run_config(
        configs, fiddlers=["high_precision"], environ={})
    self.assertEqual(base.N, 40)
    with_flags = flags.build_run_config(
        configs,
        fiddlers=["high_precision"],
        settings={"N": 25},
        environ={})
    self.assertEqual(with_flags.N, 25)
    self.assertEqual(with_flags.T, 10)
    overridden = flags.build_run_config(
        configs,
        fiddlers=["high_precision"],
        settings={"N": 25},
        overrides=["N=33"],
        environ={})
    self.assertEqual(overridden.N, 33)

  def test_environment_budget(self):
    cfg = flags.build_run_config(
        configs, settings={"budget": 100},
        environ={flags.BUDGET_ENV: "5000"})
    self.assertEqual(cfg.budget, 5000)
    cfg = flags.build_run_config(
        configs, environ={flags.BUDGET_ENV: "5000"}, overrides=["budget=64"])
    self.assertEqual(cfg.budget, 64)

  def test_named_config(self):
    cfg = flags.build_run_config(
        configs, config_name="acceptance", environ={})
    self.assertEqual(cfg.degree_bound, 8)

  @parameterized.named_parameters(
      dict(testcase_name="unknown_config", kwargs=dict(config_name="nope")),
      dict(testcase_name="unknown_fiddler", kwargs=dict(fiddlers=["nope"])),
      dict(testcase_name="unknown_field", kwargs=dict(overrides=["depth=3"])),
      dict(testcase_name="not_name_value", kwargs=dict(overrides=["N"])),
      dict(testcase_name="invalid_value", kwargs=dict(overrides=["N=0"])),
      dict(
          testcase_name="bad_environment",
          kwargs=dict(environ={flags.BUDGET_ENV: "many"})),
  )
  def test_errors(self, kwargs):
    kwargs.setdefault("environ", {})
    with self.assertRaises(ValueError):
      flags.build_run_config(configs, **kwargs)


class SettingsFromFlagsTest(absltest.TestCase):

  def test_q_sets_p_and_m(self):
    with flagsaver.flagsaver(q=9, N=12, B=2, modulus="2,2,1"):
      settings = flags.settings_from_flags()
    self.assertEqual(settings, {
        "p": 3,
        "m": 2,
        "modulus": (2, 2, 1),
        "N": 12,
        "degree_bound": 2
    })

  def test_nothing_given(self):
    self.assertEqual(flags.settings_from_flags(), {})


if __name__ == "__main__":
  absltest.main()
