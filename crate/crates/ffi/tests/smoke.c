#include <stdio.h>
#include "derangement_lab.h"
int main(void) {
  DlGroup *g = NULL;
  if (dl_group_construct_gq(4, &g) != DL_STATUS_OK) return 1;
  uint64_t n = 0, d = 0;
  if (dl_group_intersection_density(g, &n, &d) != DL_STATUS_OK) return 2;
  printf("order %llu rho %llu/%llu\n", (unsigned long long)dl_group_order(g), (unsigned long long)n, (unsigned long long)d);
  dl_group_free(g);
  return dl_group_construct_fourell(4, &g) == DL_STATUS_INVALID_ARGUMENT ? 0 : 3;
}
