// Copyright 2026 The bayesphase Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiles the public header as C and drives a minimal session. */
#include <math.h>
#include <stdio.h>

#include "bayesphase/bayesphase.h"

int main(void) {
  bp_state* state = NULL;
  double info = 0.0;
  char* json = NULL;
  if (bp_state_sine(1, &state) != BP_OK) return 1;
  if (bp_mutual_information(state, 4096, &info) != BP_OK) return 2;
  if (fabs(info - (1.0 - log(2.0))) > 1e-8) return 3;
  if (bp_state_to_json(state, &json) != BP_OK) return 4;
  printf("%s", json);
  bp_string_free(json);
  bp_state_free(state);
  if (bp_state_fock(3, 2, &state) != BP_ERR_INDEX) return 5;
  return 0;
}
