#include <stdio.h>
#include <string.h>
#include "coxmatch.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    CoxSystem *sys = NULL;
    CHECK(cox_system_named("A2", &sys) == COX_STATUS_OK);
    CHECK(cox_system_rank(sys) == 2);

    CoxInterval *iv = NULL;
    CHECK(cox_interval_build(sys, "s1-s2-s1", &iv) == COX_STATUS_OK);
    CHECK(cox_interval_len(iv) == 6);

    CoxMatchingList *special = NULL;
    CHECK(cox_special_matchings(iv, &special) == COX_STATUS_OK);
    CHECK(cox_matching_list_len(special) == 4);

    size_t top = 0, partner = 0;
    CHECK(cox_interval_top(iv, &top) == COX_STATUS_OK);
    CHECK(cox_matching_list_partner(special, 0, 0, &partner) == COX_STATUS_OK);
    CHECK(partner != 0 && partner < 6);

    char *word = NULL;
    CHECK(cox_interval_element(iv, top, &word) == COX_STATUS_OK);
    CHECK(strcmp(word, "s1-s2-s1") == 0);
    cox_string_free(word);

    CoxInterval *bad = NULL;
    CHECK(cox_interval_build(sys, "s9", &bad) == COX_STATUS_PARSE);
    char *msg = cox_last_error_message();
    CHECK(msg != NULL && strlen(msg) > 0);
    cox_string_free(msg);

    cox_matching_list_free(special);
    cox_interval_free(iv);
    cox_system_free(sys);
    printf("ok\n");
    return 0;
}
