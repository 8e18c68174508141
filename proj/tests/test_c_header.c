/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

/* Compiles the public header as C and exercises one call end to end. */

#include "cumulants.h"

#include <stdio.h>
#include <string.h>

int main(void) {
    cumu_buffer* out = NULL;
    cumu_status status = cumu_convert("boolean", "moments", "[\"1\",\"1\",\"1\",\"1\"]", &out);
    if (status != CUMU_OK) {
        fprintf(stderr, "convert failed: %s\n", cumu_last_error());
        return 1;
    }
    int ok = strcmp(cumu_buffer_data(out), "[\"1\",\"2\",\"4\",\"8\"]\n") == 0;
    cumu_buffer_free(out);
    if (!ok) return 1;
    if (cumu_convert("moments", "nope", "[]", &out) != CUMU_USAGE_ERROR || out != NULL) return 1;
    puts("c header ok");
    return 0;
}
