#ifndef SPERNER_CAPI_H
#define SPERNER_CAPI_H

/* C interface to the sperner shared library. All objects are opaque; every
 * call reports success through a status code and writes results to out
 * parameters. Strings returned through char** are owned by the caller and
 * must be released with sperner_string_free. On any non-OK status,
 * sperner_last_error() carries a message describing what went wrong (the
 * buffer stays valid until the next library call on the same thread). */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sperner_status {
  SPERNER_OK = 0,
  SPERNER_ERR_ARGUMENT = 1, /* invalid argument or precondition violation */
  SPERNER_ERR_PARSE = 2,    /* malformed input text */
  SPERNER_ERR_LIMIT = 3,    /* documented size cap exceeded */
  SPERNER_ERR_INTERNAL = 4
} sperner_status;

typedef struct sperner_system sperner_system;
typedef struct sperner_function sperner_function;

const char* sperner_status_name(sperner_status status);
const char* sperner_last_error(void);

void sperner_string_free(char* s);
void sperner_system_free(sperner_system* s);
void sperner_function_free(sperner_function* f);

/* Parses JSON ({"n": ..., "blocks": [[...], ...]}) or one line of digit
 * shorthand. n_override = 0 takes the ground size from the input; shorthand
 * without an override uses the largest element mentioned. minimalize != 0
 * repairs antichain violations (otherwise they are kept and reported).
 * warning (optional) receives a message when the input is not an antichain,
 * or NULL. */
sperner_status sperner_system_parse(const char* text, int n_override, int minimalize,
                                    sperner_system** out, char** warning);

/* format: "short", "blocks", "json", or "primed"; "primed:<m>" pins the
 * unprimed range to 1..m instead of inferring it from the ground size. */
sperner_status sperner_system_render(const sperner_system* s, const char* format, char** out);

sperner_status sperner_system_ground_size(const sperner_system* s, int* out);
sperner_status sperner_system_block_count(const sperner_system* s, int64_t* out);

/* name: "G", "F", "M", "U", or "S". param2 = -1 for the one-parameter family
 * F; a parity in {1, 2} otherwise. */
sperner_status sperner_family_build(const char* name, int param1, int param2,
                                    sperner_system** out);

/* mode: "sperner" (identification cards over label pairs) or "hypergraph"
 * (vertex-deleted cards). */
sperner_status sperner_deck_render(const sperner_system* s, const char* mode, char** out);

/* relation: "iso", "hypomorphic", or "strong"; mode as for decks (ignored
 * for "iso"; NULL means "sperner"). verdict receives 1 or 0. For "iso" with
 * verdict 1, witness (optional) receives the label images of an
 * isomorphism, space-separated. */
sperner_status sperner_check(const sperner_system* a, const sperner_system* b,
                             const char* relation, const char* mode, int* verdict,
                             char** witness);

/* The deck table over [n] (2 <= n <= 5) as aligned text. */
sperner_status sperner_appendix_render(int n, char** out);

sperner_status sperner_function_parse(const char* text, sperner_function** out);

sperner_status sperner_function_deck_render(const sperner_function* f, char** out);

/* Clone membership report for a 0/1 function. */
sperner_status sperner_clone_report(const sperner_function* f, char** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SPERNER_CAPI_H */
