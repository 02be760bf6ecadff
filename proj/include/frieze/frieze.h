#ifndef FRIEZE_FRIEZE_H
#define FRIEZE_FRIEZE_H

/*
 * C interface to libfrieze: enumeration, verification and the p_n map for
 * arithmetic Y-frieze and Coxeter frieze patterns.
 *
 * Every function returns a frz_status. On failure a message describing the
 * last error on the calling thread is available from frz_last_error().
 * Strings handed out through char** parameters are NUL-terminated and must be
 * released with frz_string_free(). Catalog handles are released with
 * frz_catalog_free(). A catalog handle is immutable once created and may be
 * read from several threads.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FRZ_API __declspec(dllexport)
#elif defined(__GNUC__)
#  define FRZ_API __attribute__((visibility("default")))
#else
#  define FRZ_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum frz_status {
  FRZ_OK = 0,
  FRZ_E_VERIFICATION = 1,     /* a pattern failed verification */
  FRZ_E_INVALID_ARGUMENT = 2, /* bad width, kind, format, bounds ... */
  FRZ_E_PARSE = 3,            /* malformed catalog or pattern text */
  FRZ_E_LIMIT = 4,            /* search box above the candidate ceiling */
  FRZ_E_UNSUPPORTED = 5,      /* no enumeration available for the request */
  FRZ_E_INTERNAL = 6
} frz_status;

typedef enum frz_kind { FRZ_KIND_Y = 0, FRZ_KIND_COXETER = 1 } frz_kind;

typedef enum frz_format { FRZ_FORMAT_JSON = 0, FRZ_FORMAT_CSV = 1, FRZ_FORMAT_TABLE = 2 } frz_format;

typedef struct frz_catalog_s *frz_catalog;

/* Search options; zero-initialize and set what you need. */
typedef struct frz_options {
  const int64_t *bounds; /* first-row upper bounds (Y only), NULL for defaults */
  size_t n_bounds;       /* 1 (broadcast) or width+3 */
  unsigned parallelism;  /* 0 or 1 = single-threaded */
  uint64_t max_candidates; /* 0 = FRIEZE_MAX_CANDIDATES or 10^9 */
} frz_options;

FRZ_API const char *frz_version(void);
FRZ_API const char *frz_status_string(frz_status status);
FRZ_API const char *frz_last_error(void);
FRZ_API void frz_string_free(char *s);

FRZ_API frz_status frz_enumerate(frz_kind kind, int width, const frz_options *options, frz_catalog *out);

/* Parses JSON (catalog or single pattern) or CSV text. */
FRZ_API frz_status frz_catalog_parse(const char *text, size_t length, frz_catalog *out);

/* Closed Y-frieze (by propagation) or Coxeter frieze (from a quiddity) from
 * a first interior row of width+3 entries, each an integer or "p/q". */
FRZ_API frz_status frz_pattern_from_first_row(frz_kind kind, int width, const char *const *entries, size_t count,
                                              frz_catalog *out);

FRZ_API void frz_catalog_free(frz_catalog catalog);
FRZ_API size_t frz_catalog_size(frz_catalog catalog);
FRZ_API int frz_catalog_width(frz_catalog catalog);
FRZ_API frz_kind frz_catalog_kind(frz_catalog catalog);

FRZ_API frz_status frz_catalog_serialize(frz_catalog catalog, frz_format format, char **out);
FRZ_API frz_status frz_catalog_render(frz_catalog catalog, size_t index, char **out);
FRZ_API frz_status frz_catalog_orbits(frz_catalog catalog, char **out);

/* Returns FRZ_OK when every pattern passes, FRZ_E_VERIFICATION otherwise;
 * the report is produced in both cases. */
FRZ_API frz_status frz_catalog_verify(frz_catalog catalog, char **report, size_t *n_failed);

/* Correspondence table and verdict of p_width (JSON or TABLE). */
FRZ_API frz_status frz_map_report(int width, const frz_options *options, frz_format format, char **out);

#ifdef __cplusplus
}
#endif

#endif
