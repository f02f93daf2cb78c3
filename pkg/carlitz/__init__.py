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


"""Periods of the Carlitz motive and its multiple-zeta generalizations.

Values live in the completion of F_q(θ) at infinity; see `laurent` for the
truncated Laurent representation and `tate` for series in t.
"""

from carlitz.laurent import LaurentL
from carlitz.laurent import PrecisionError
from carlitz.laurent import RationalK
from carlitz.motives import build_system
from carlitz.motives import PeriodSystem
from carlitz.motives import psi_tilde_check
from carlitz.motives import verify_difference_equation
from carlitz.relations import find_linear_relations
from carlitz.relations import known_relation_suite
from carlitz.relations import rational_reconstruct
from carlitz.scalars import field_create
from carlitz.scalars import field_for_q
from carlitz.scalars import FieldDesc
from carlitz.scalars import PolyTheta
from carlitz.specials import cmpl_eval
from carlitz.specials import Index
from carlitz.specials import TPoint
from carlitz.specials import zeta
from carlitz.tate import omega_build
from carlitz.tate import pi_build
from carlitz.tate import TSeries
