/* The header must compile as C and the library must link from C. */
#include <stdio.h>
#include <string.h>

#include "otreal/otreal.h"

int main(void) {
  otr_context* ctx = otr_context_new();
  otr_params p;
  int64_t d = 0;
  int rc = 0;

  memset(&p, 0, sizeof p);
  p.p = 2;
  p.u = 1;
  p.present = OTR_P | OTR_U;
  if (otr_compute_values(ctx, "I", &p, &d) != OTR_OK || d != 3) {
    fprintf(stderr, "compute failed: %s\n", otr_last_error(ctx));
    rc = 1;
  }
  otr_context_free(ctx);
  return rc;
}
