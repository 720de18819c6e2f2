# -*- Mode:Python; indent-tabs-mode:nil; tab-width:4 -*-
#
# Copyright 2023 Canonical Ltd.
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License version 3 as
# published by the Free Software Foundation.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Continuous-group checks: Gaussians on the torus and on the solenoid."""

from .conditions import (
    DEFAULT_WINDOW_RADIUS,
    GaussianConditionResult,
    WindowResult,
    admissibility_on_lattice,
    closed_form_condition,
    gaussian_pair_symmetry_condition,
    solenoid_admissibility,
    solenoid_pair_condition,
    solenoid_partner,
    solenoid_window_verify,
    window_verify,
)
from .errors import DimensionError, FormError, GaussianError, UnimodularityError
from .forms import LatticeAutomorphism, QuadraticGaussianSpec, determinant

__all__ = [
    "DEFAULT_WINDOW_RADIUS",
    "DimensionError",
    "FormError",
    "GaussianConditionResult",
    "GaussianError",
    "LatticeAutomorphism",
    "QuadraticGaussianSpec",
    "UnimodularityError",
    "WindowResult",
    "admissibility_on_lattice",
    "closed_form_condition",
    "determinant",
    "gaussian_pair_symmetry_condition",
    "solenoid_admissibility",
    "solenoid_pair_condition",
    "solenoid_partner",
    "solenoid_window_verify",
    "window_verify",
]
