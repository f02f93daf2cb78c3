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

"""Adds "(while computing ...)" context to exceptions from deep computations.

A precision failure three nested sums down says little about which value was
being built. `computing` reraises a proxy of the original exception: the type
(and so every `except` clause and `assertRaises` downstream) is unchanged and
the message gains the description of the enclosing computation.

  with reraised_exception.computing(lambda: f"ζ{index} at N={n}"):
    ...
"""

import contextlib
import functools
from typing import Callable

from absl import logging


@functools.lru_cache(maxsize=None)
def context_class(exception_type):
  """Subclasses `exception_type` with one whose message carries context."""

  class ContextProxy(exception_type):
    """Proxies an exception and appends computation context to its message."""
    __module__ = exception_type.__module__

    def __init__(self, base_exception, context: str):
      # The base constructor is skipped: arbitrary exception types take
      # arbitrary arguments, and every attribute is forwarded instead.
      self.base_exception = base_exception
      self.context = context

    def __getattr__(self, attr_name):
      return getattr(self.base_exception, attr_name)

    def __reduce__(self):
      return with_context, (self.base_exception, self.context)

    def __str__(self):
      return f"{self.base_exception} (while computing {self.context})"

  ContextProxy.__name__ = exception_type.__name__
  ContextProxy.__qualname__ = exception_type.__qualname__
  return ContextProxy


def with_context(exception: Exception, context: str) -> Exception:
  """Returns a proxy of `exception` whose message mentions `context`."""
  try:
    proxy_cls = context_class(type(exception))
    return proxy_cls(exception, context).with_traceback(exception.__traceback__)
  except Exception:  # pylint: disable=broad-except
    logging.exception("Creating the context proxy failed.")
    return exception


@contextlib.contextmanager
def computing(describe: Callable[[], str]):
  """Reraises exceptions from the body with `describe()` appended.

  Args:
    describe: Builds the description lazily, only when something failed.

  Yields:
    None
  """
  try:
    yield
  except Exception as exc:  # pylint: disable=broad-except
    try:
      context = describe()
    except Exception:  # pylint: disable=broad-except
      logging.exception("Describing the failed computation failed.")
      raise exc from None
    raise with_context(exc, context) from None
