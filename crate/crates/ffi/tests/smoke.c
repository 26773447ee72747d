#include <math.h>
#include <stdio.h>
#include <string.h>

#include "hypident.h"

int main(void) {
    double mu = 0, eta = 0, g = 0, f = 0;
    if (hypident_constants(&mu, &eta) != HYPIDENT_STATUS_OK) return 1;
    if (fabs(mu * eta * M_PI - 1.0) > 1e-14) return 2;
    if (hypident_gamma(0.0, &g) != HYPIDENT_STATUS_POLE) return 3;
    if (strlen(hypident_last_error_message()) == 0) return 4;
    if (hypident_hyp2f1(0.5, 0.5, 1.0, 0.5, &f) != HYPIDENT_STATUS_OK) return 5;
    if (fabs(f - mu) > 1e-13) return 6;

    HypidentRegistry *reg = hypident_registry_new();
    char *json = NULL;
    bool agree = false;
    if (hypident_verify(reg, "EQ4", HYPIDENT_MODE_BOTH, 8, 1e-9, &json, &agree) != HYPIDENT_STATUS_OK) return 7;
    if (!agree || strstr(json, "\"EQ4\"") == NULL) return 8;
    hypident_string_free(json);
    hypident_registry_free(reg);
    puts("ok");
    return 0;
}
