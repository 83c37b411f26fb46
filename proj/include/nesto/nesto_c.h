#ifndef NESTO_C_H
#define NESTO_C_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; the numeric values are stable. */
typedef enum {
  NESTO_OK = 0,
  NESTO_E_INVALID_ARGUMENT = 1,
  NESTO_E_PARSE = 2,
  NESTO_E_MISSING_SINGLETON = 3,
  NESTO_E_UNION_CLOSURE = 4,
  NESTO_E_GROUND_TOO_LARGE = 5,
  NESTO_E_MEMBER_NOT_IN_BUILDING_SET = 6,
  NESTO_E_VERTEX_NOT_IN_COMPLEX = 7,
  NESTO_E_SEARCH_BUDGET = 8,
  NESTO_E_NOT_PURE = 9,
  NESTO_E_NOT_SYMMETRIC = 10,
  NESTO_E_NOT_A_FOREST = 11,
  NESTO_E_NOT_FLAG = 12,
  NESTO_E_NOT_MAXIMAL = 13,
  NESTO_E_FOREST_CONDITION = 14,
  NESTO_E_NOT_INTERMEDIARY = 15,
  NESTO_E_LEAP_OUT_OF_RANGE = 16,
  NESTO_E_NOT_EXTENDED_B_PERMUTATION = 17,
  NESTO_E_NOT_CHORDAL = 18,
  NESTO_E_NOT_CONNECTED = 19,
  NESTO_E_SIZE_CAP = 20,
  NESTO_E_NOT_COMPARABLE = 21,
  NESTO_E_NOT_INTERVAL = 22,
  NESTO_E_INTERVALS_MISSING = 23,
  NESTO_E_NOT_SPIDER = 24,
  NESTO_E_FACE_MISSING = 25,
  NESTO_E_NON_GENERIC_COST = 26,
  NESTO_E_OVERFLOW = 27,
  NESTO_E_INTERNAL = 28,
  NESTO_E_CHECK_FAILED = 100
} nesto_status;

typedef enum { NESTO_FORMAT_JSON = 0, NESTO_FORMAT_DOT = 1, NESTO_FORMAT_CSV = 2 } nesto_format;

typedef struct nesto_building_set nesto_building_set;

typedef struct {
  int max_n;      /* 0: global cap; otherwise lowers the enumeration cap, and sets
                     the instance size for verify-all and order without input */
  uint64_t seed;  /* recorded in every report */
  nesto_format format;
} nesto_options;

const char* nesto_version(void);
const char* nesto_status_name(int status);
/* Message of the last failure on the calling thread; never NULL. */
const char* nesto_last_error(void);
void nesto_options_default(nesto_options* opt);
/* Releases strings returned through char** out parameters. */
void nesto_string_free(char* s);

/* Parses {"n","sets"} or a graph {"n","arcs"|"edges"}. */
int nesto_bs_from_json(const char* json, nesto_building_set** out);
void nesto_bs_free(nesto_building_set* b);
int nesto_bs_n(const nesto_building_set* b, int* out);
int nesto_bs_size(const nesto_building_set* b, int* out);
int nesto_bs_to_json(const nesto_building_set* b, char** out);

/*
 * Commands. Each writes a report (JSON envelope with version, seed, command
 * and result, or DOT/CSV when requested) to *out. `kind` selects the
 * variant; `extra_json` may be NULL. A report whose checks fail is still
 * written and the call returns NESTO_E_CHECK_FAILED.
 */
int nesto_validate(const char* input_json, const nesto_options* opt, char** out);
int nesto_from_graph(const char* graph_json, const nesto_options* opt, char** out);
int nesto_complex(const nesto_building_set* b, const char* kind, const nesto_options* opt, char** out);
int nesto_counts(const nesto_building_set* b, const char* kind, const nesto_options* opt, char** out);
int nesto_perms(const nesto_building_set* b, const char* kind, const char* extra_json, const nesto_options* opt, char** out);
int nesto_order(const char* input_json, const char* kind, const nesto_options* opt, char** out);
int nesto_iso(const char* input_json, const char* kind, const nesto_options* opt, char** out);
int nesto_geom(const nesto_building_set* b, const char* kind, const char* extra_json, const nesto_options* opt, char** out);
int nesto_verify_all(const nesto_options* opt, char** out);

#ifdef __cplusplus
}
#endif

#endif
