# Copyright 2026 The wtomo Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""W-state tomography, readout mitigation and whole-from-parts reconstruction."""

from ._core import (
    AmbiguousPhaseError,
    DimensionError,
    InconsistentMarginalsError,
    NotHermitianError,
    TooMixedError,
    apply_readout_noise,
    diosi_reconstruct,
    exact_probs,
    fidelity_pure,
    ghz_state,
    mitigate_probs,
    partial_trace,
    prepare_w,
    reconstruct_2q,
    reconstruct_3q,
    run_pipeline,
    spectral_correct,
    three_qubit_settings,
    trace_distance,
    two_qubit_settings,
)

__all__ = [
    "AmbiguousPhaseError",
    "DimensionError",
    "InconsistentMarginalsError",
    "NotHermitianError",
    "TooMixedError",
    "apply_readout_noise",
    "diosi_reconstruct",
    "exact_probs",
    "fidelity_pure",
    "ghz_state",
    "mitigate_probs",
    "partial_trace",
    "prepare_w",
    "reconstruct_2q",
    "reconstruct_3q",
    "run_pipeline",
    "spectral_correct",
    "three_qubit_settings",
    "trace_distance",
    "two_qubit_settings",
]
