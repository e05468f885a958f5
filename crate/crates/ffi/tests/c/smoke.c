#include <stdio.h>
#include <string.h>

#include "thetamap.h"

#define CHECK(cond)                                                    \
  do {                                                                 \
    if (!(cond)) {                                                     \
      fprintf(stderr, "check failed line %d: %s (%s)\n", __LINE__,     \
              #cond, thetamap_last_error());                           \
      return 1;                                                        \
    }                                                                  \
  } while (0)

int main(void) {
  uint8_t m = 0;
  CHECK(thetamap_two_torsion_add(0x03, 0x06, &m) == THETAMAP_STATUS_OK);
  CHECK(m == 0x05);

  uint8_t s[6];
  CHECK(thetamap_s_set(0x01, s) == THETAMAP_STATUS_OK);
  CHECK(thetamap_s_set(0x03, s) == THETAMAP_STATUS_INVALID_ARGUMENT);

  ThetamapVerlinde *v = NULL;
  CHECK(thetamap_verlinde_compute(4, 8, 2, 0, 2, &v) == THETAMAP_STATUS_OK);
  uint64_t value = 0;
  CHECK(thetamap_verlinde_value_u64(v, &value) == THETAMAP_STATUS_OK);
  CHECK(value == 984539);
  char *text = thetamap_verlinde_value_string(v);
  CHECK(text != NULL && strcmp(text, "984539") == 0);
  thetamap_string_free(text);
  thetamap_verlinde_free(v);

  ThetamapDegree *d = NULL;
  CHECK(thetamap_degree_compute(4, &d) == THETAMAP_STATUS_OK);
  int64_t deg = 0;
  CHECK(thetamap_degree_value(d, &deg) == THETAMAP_STATUS_OK);
  CHECK(deg == 30);
  thetamap_degree_free(d);

  CHECK(thetamap_degree_compute(5, &d) == THETAMAP_STATUS_INVALID_ARGUMENT);
  printf("ok\n");
  return 0;
}
