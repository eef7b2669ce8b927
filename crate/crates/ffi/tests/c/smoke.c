#include <stdio.h>
#include <string.h>

#include "defeasible_alc.h"

static const char *KB =
    "Penguin <= Bird.\n"
    "T(Bird) <= Fly.\n"
    "T(Bird) <= HasNiceFeather.\n"
    "T(Penguin) <= not Fly.\n";

int main(void) {
    DalcKb *kb = NULL;
    DalcLimits limits = dalc_limits_default();
    if (dalc_kb_parse(KB, &limits, &kb) != DALC_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", dalc_last_error_message());
        return 1;
    }
    int64_t rank = 0;
    bool rc = true, mp = false;
    if (dalc_concept_rank(kb, "Penguin", &rank) != DALC_STATUS_OK ||
        dalc_entails(kb, DALC_METHOD_RC, "T(Penguin) <= HasNiceFeather", &rc) != DALC_STATUS_OK ||
        dalc_entails(kb, DALC_METHOD_MP, "T(Penguin) <= HasNiceFeather", &mp) != DALC_STATUS_OK) {
        fprintf(stderr, "query: %s\n", dalc_last_error_message());
        return 1;
    }
    char *json = NULL;
    if (dalc_bases_json(kb, DALC_METHOD_MP, "Penguin", &json) != DALC_STATUS_OK) {
        return 1;
    }
    printf("rank=%lld rc=%d mp=%d bases=%d\n", (long long)rank, rc, mp,
           strstr(json, "\"bases\"") != NULL);
    dalc_string_free(json);
    dalc_kb_free(kb);
    return 0;
}
