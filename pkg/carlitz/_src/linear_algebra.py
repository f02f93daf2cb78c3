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

"""Exact row reduction of matrices over F_q."""

from typing import Tuple

from carlitz import scalars
import numpy as np


def row_reduce(field: scalars.FieldDesc,
               matrix: np.ndarray) -> Tuple[np.ndarray, Tuple[int, ...]]:
  """The reduced row echelon form of `matrix` and its pivot columns.

  Zero rows are dropped, so the result has one row per pivot.
  """
  reduced = np.array(matrix, dtype=np.int64, copy=True)
  if reduced.ndim != 2:
    raise ValueError(f"expected a matrix, got shape {reduced.shape}")
  n_rows, n_cols = reduced.shape
  pivots = []
  r = 0
  for c in range(n_cols):
    if r == n_rows:
      break
    nonzero = np.where(reduced[r:, c] != 0)[0]
    if nonzero.size == 0:
      continue
    k = r + int(nonzero[0])
    if k != r:
      reduced[[r, k]] = reduced[[k, r]]
    reduced[r] = field.vscale(reduced[r], field.inv(int(reduced[r, c])))
    for other in np.where(reduced[:, c] != 0)[0]:
      if other != r:
        reduced[other] = field.vsub(
            reduced[other], field.vscale(reduced[r], int(reduced[other, c])))
    pivots.append(c)
    r += 1
  return reduced[:r], tuple(pivots)


def kernel(field: scalars.FieldDesc, matrix: np.ndarray) -> np.ndarray:
  """A basis of {x : matrix @ x = 0} in reduced row echelon form."""
  matrix = np.asarray(matrix, dtype=np.int64)
  n_cols = matrix.shape[1]
  reduced, pivots = row_reduce(field, matrix)
  free = [c for c in range(n_cols) if c not in set(pivots)]
  basis = np.zeros((len(free), n_cols), dtype=np.int64)
  for row, f in enumerate(free):
    basis[row, f] = 1
    for k, c in enumerate(pivots):
      basis[row, c] = field.neg(int(reduced[k, f]))
  if not free:
    return basis
  return row_reduce(field, basis)[0]


def apply(field: scalars.FieldDesc, matrix: np.ndarray,
          vector: np.ndarray) -> np.ndarray:
  """matrix @ vector over F_q."""
  matrix = np.asarray(matrix, dtype=np.int64)
  out = np.zeros(matrix.shape[0], dtype=np.int64)
  for c, x in enumerate(np.asarray(vector, dtype=np.int64)):
    if x:
      out = field.vadd(out, field.vscale(matrix[:, c], int(x)))
  return out
