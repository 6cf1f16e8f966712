#include <stdio.h>
#include <string.h>

#include "latdim.h"

static const char *CHAIN =
    "{\"name\": \"c\", \"elements\": [\"0\", \"a\", \"1\"],"
    " \"covers\": [[\"0\", \"a\"], [\"a\", \"1\"]]}";

int main(void) {
    LatdimLattice *c = NULL, *r = NULL, *bad = NULL;
    if (latdim_lattice_from_json(CHAIN, &c) != LATDIM_OK) return 1;
    if (latdim_product(c, c, LATDIM_RECT, &r) != LATDIM_OK) return 2;

    size_t n = 0, k = 0, h = 0;
    int64_t big = 0, small = 0, dim = 0;
    bool present = false;
    latdim_lattice_size(r, &n);
    latdim_ind_large(r, &big);
    latdim_ind_small(r, &small);
    latdim_dim_covering(r, &dim);
    latdim_kdim(r, &k, &present);
    latdim_height(r, &h);
    printf("n=%zu Ind=%lld ind=%lld dim=%lld kdim=%zu height=%zu\n", n, (long long)big,
           (long long)small, (long long)dim, k, h);

    LatdimStatus s = latdim_lattice_from_json("{\"name\": \"x\", \"elements\": [\"a\", \"b\"], \"covers\": []}", &bad);
    const char *msg = latdim_last_error();
    printf("error=%d %.10s\n", (int)s, msg);

    char *report = NULL;
    if (latdim_report_json(r, &report) != LATDIM_OK || strstr(report, "\"ind_large\": 1") == NULL) return 3;
    latdim_string_free(report);
    latdim_lattice_free(r);
    latdim_lattice_free(c);
    latdim_lattice_free(bad);
    return present ? 0 : 4;
}
