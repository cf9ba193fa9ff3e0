#include <stdio.h>
#include <string.h>

#include "parahoric.h"

int main(void) {
    ParahoricDatum *d = NULL;
    if (parahoric_datum_new("{\"cartan\":{\"family\":\"A\",\"rank\":1}}", &d) != PARAHORIC_STATUS_OK) {
        return 1;
    }
    int64_t mu[1] = {1};
    size_t n = 0;
    if (parahoric_adm_size(d, mu, 1, &n) != PARAHORIC_STATUS_OK || n != 5) {
        return 2;
    }
    char *s = NULL;
    int64_t gamma[1] = {1};
    if (parahoric_zgamma_json(d, gamma, 1, &s) != PARAHORIC_STATUS_OK || strstr(s, "\"word\":\"1\"") == NULL) {
        return 3;
    }
    parahoric_string_free(s);
    mu[0] = -1;
    if (parahoric_adm_size(d, mu, 1, &n) != PARAHORIC_STATUS_NOT_DOMINANT || parahoric_last_error() == NULL) {
        return 4;
    }
    parahoric_datum_free(d);
    printf("ok %zu\n", n);
    return 0;
}
