#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "sperner/capi.h"

static int failures = 0;

#define CHECK(cond)                                                  \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "FAIL %s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static void check_status_names(void) {
  CHECK(strcmp(sperner_status_name(SPERNER_OK), "ok") == 0);
  CHECK(strcmp(sperner_status_name(SPERNER_ERR_ARGUMENT), "argument") == 0);
  CHECK(strcmp(sperner_status_name(SPERNER_ERR_PARSE), "parse") == 0);
  CHECK(strcmp(sperner_status_name(SPERNER_ERR_LIMIT), "limit") == 0);
  CHECK(strcmp(sperner_status_name(SPERNER_ERR_INTERNAL), "internal") == 0);
}

static void check_parse_and_render(void) {
  sperner_system* s = NULL;
  char* warning = (char*)"sentinel";
  CHECK(sperner_system_parse("12,13,23", 0, 0, &s, &warning) == SPERNER_OK);
  CHECK(s != NULL);
  CHECK(warning == NULL);

  int n = 0;
  int64_t blocks = 0;
  CHECK(sperner_system_ground_size(s, &n) == SPERNER_OK);
  CHECK(n == 3);
  CHECK(sperner_system_block_count(s, &blocks) == SPERNER_OK);
  CHECK(blocks == 3);

  char* text = NULL;
  CHECK(sperner_system_render(s, "short", &text) == SPERNER_OK);
  CHECK(strcmp(text, "12,13,23") == 0);
  sperner_string_free(text);
  CHECK(sperner_system_render(s, "json", &text) == SPERNER_OK);
  CHECK(strcmp(text, "{\"n\":3,\"blocks\":[[1,2],[1,3],[2,3]]}") == 0);
  sperner_string_free(text);
  CHECK(sperner_system_render(s, "blocks", &text) == SPERNER_OK);
  CHECK(strcmp(text, "1,2;1,3;2,3") == 0);
  sperner_string_free(text);

  CHECK(sperner_system_render(s, "nonsense", &text) == SPERNER_ERR_ARGUMENT);
  CHECK(strlen(sperner_last_error()) > 0);
  sperner_system_free(s);
}

static void check_parse_errors(void) {
  sperner_system* s = NULL;
  CHECK(sperner_system_parse("12,,13", 0, 0, &s, NULL) == SPERNER_ERR_PARSE);
  CHECK(s == NULL);
  CHECK(strlen(sperner_last_error()) > 0);
  CHECK(sperner_system_parse(NULL, 0, 0, &s, NULL) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_system_parse("1", 0, 0, NULL, NULL) == SPERNER_ERR_ARGUMENT);

  char* warning = NULL;
  CHECK(sperner_system_parse("1,12", 0, 0, &s, &warning) == SPERNER_OK);
  CHECK(warning != NULL);
  sperner_string_free(warning);
  int64_t blocks = 0;
  CHECK(sperner_system_block_count(s, &blocks) == SPERNER_OK);
  CHECK(blocks == 2);
  sperner_system_free(s);

  CHECK(sperner_system_parse("1,12", 0, 1, &s, &warning) == SPERNER_OK);
  CHECK(sperner_system_block_count(s, &blocks) == SPERNER_OK);
  CHECK(blocks == 1);
  sperner_string_free(warning);
  sperner_system_free(s);
}

static void check_families(void) {
  sperner_system* g = NULL;
  CHECK(sperner_family_build("G", 3, 1, &g) == SPERNER_OK);
  char* text = NULL;
  CHECK(sperner_system_render(g, "short", &text) == SPERNER_OK);
  CHECK(strcmp(text, "123,156,246,345") == 0);
  sperner_string_free(text);
  CHECK(sperner_system_render(g, "primed", &text) == SPERNER_OK);
  CHECK(strcmp(text, "1,2,3;1,2',3';2,1',3';3,1',2'") == 0);
  sperner_string_free(text);
  sperner_system_free(g);

  sperner_system* u = NULL;
  CHECK(sperner_family_build("U", 8, 1, &u) == SPERNER_OK);
  CHECK(sperner_system_render(u, "primed:3", &text) == SPERNER_OK);
  CHECK(strncmp(text, "0,0';", 5) == 0);
  sperner_string_free(text);
  sperner_system_free(u);

  sperner_system* f = NULL;
  CHECK(sperner_family_build("F", 3, -1, &f) == SPERNER_OK);
  int64_t blocks = 0;
  CHECK(sperner_system_block_count(f, &blocks) == SPERNER_OK);
  CHECK(blocks == 3);
  sperner_system_free(f);

  sperner_system* bad = NULL;
  CHECK(sperner_family_build("S", 4, 1, &bad) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_family_build("F", 3, 1, &bad) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_family_build("X", 3, 1, &bad) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_family_build("G", 40, 1, &bad) == SPERNER_ERR_LIMIT);
}

static void check_relations(void) {
  sperner_system* a = NULL;
  sperner_system* b = NULL;
  CHECK(sperner_family_build("M", 3, 1, &a) == SPERNER_OK);
  CHECK(sperner_family_build("M", 3, 2, &b) == SPERNER_OK);

  int verdict = -1;
  char* witness = (char*)"sentinel";
  CHECK(sperner_check(a, b, "iso", NULL, &verdict, &witness) == SPERNER_OK);
  CHECK(verdict == 0);
  CHECK(witness == NULL);
  CHECK(sperner_check(a, b, "strong", "sperner", &verdict, NULL) == SPERNER_OK);
  CHECK(verdict == 1);
  CHECK(sperner_check(a, b, "hypomorphic", "hypergraph", &verdict, NULL) == SPERNER_OK);
  CHECK(verdict == 1);
  CHECK(sperner_check(a, a, "iso", NULL, &verdict, &witness) == SPERNER_OK);
  CHECK(verdict == 1);
  CHECK(witness != NULL && strcmp(witness, "1 2 3 4 5 6") == 0);
  sperner_string_free(witness);
  CHECK(sperner_check(a, b, "related", NULL, &verdict, NULL) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_check(a, b, "iso", "nonsense", &verdict, NULL) == SPERNER_OK);

  char* deck_a = NULL;
  char* deck_b = NULL;
  CHECK(sperner_deck_render(a, "hypergraph", &deck_a) == SPERNER_OK);
  CHECK(sperner_deck_render(b, "hypergraph", &deck_b) == SPERNER_OK);
  CHECK(strcmp(deck_a, deck_b) == 0);
  sperner_string_free(deck_a);
  sperner_string_free(deck_b);

  sperner_system_free(a);
  sperner_system_free(b);
}

static void check_appendix(void) {
  char* text = NULL;
  CHECK(sperner_appendix_render(2, &text) == SPERNER_OK);
  CHECK(strstr(text, "1 *") != NULL);
  sperner_string_free(text);
  CHECK(sperner_appendix_render(1, &text) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_appendix_render(9, &text) == SPERNER_ERR_LIMIT);
}

static void check_functions(void) {
  sperner_function* f = NULL;
  const char* doc =
      "{\"domain\": 2, \"codomain\": 2, \"arity\": 3,"
      " \"table\": [0, 0, 0, 1, 0, 1, 1, 1]}";
  CHECK(sperner_function_parse(doc, &f) == SPERNER_OK);

  char* report = NULL;
  CHECK(sperner_clone_report(f, &report) == SPERNER_OK);
  CHECK(strstr(report, "M: yes") != NULL);
  CHECK(strstr(report, "SM: yes") != NULL);
  CHECK(strstr(report, "L: no") != NULL);
  sperner_string_free(report);

  char* deck = NULL;
  CHECK(sperner_function_deck_render(f, &deck) == SPERNER_OK);
  CHECK(strstr(deck, "\"arity\":1") != NULL);
  sperner_string_free(deck);
  sperner_function_free(f);

  CHECK(sperner_function_parse("{}", &f) == SPERNER_ERR_PARSE);
  CHECK(sperner_function_parse(NULL, &f) == SPERNER_ERR_ARGUMENT);

  sperner_function* tern = NULL;
  const char* tern_doc =
      "{\"domain\": 3, \"codomain\": 3, \"arity\": 1, \"table\": [0, 1, 2]}";
  CHECK(sperner_function_parse(tern_doc, &tern) == SPERNER_OK);
  CHECK(sperner_clone_report(tern, &report) == SPERNER_ERR_ARGUMENT);
  sperner_function_free(tern);
}

static void check_null_tolerance(void) {
  sperner_system_free(NULL);
  sperner_function_free(NULL);
  sperner_string_free(NULL);
  int verdict = 0;
  CHECK(sperner_check(NULL, NULL, "iso", NULL, &verdict, NULL) == SPERNER_ERR_ARGUMENT);
  char* text = NULL;
  CHECK(sperner_system_render(NULL, "short", &text) == SPERNER_ERR_ARGUMENT);
  CHECK(sperner_appendix_render(3, NULL) == SPERNER_ERR_ARGUMENT);
}

int main(void) {
  check_status_names();
  check_parse_and_render();
  check_parse_errors();
  check_families();
  check_relations();
  check_appendix();
  check_functions();
  check_null_tolerance();
  if (failures == 0) {
    printf("all C interface checks passed\n");
    return 0;
  }
  fprintf(stderr, "%d C interface check(s) failed\n", failures);
  return 1;
}
