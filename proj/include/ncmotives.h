/*
 * C interface to the exact correspondence-category engine.
 *
 * Every function takes JSON document strings (the fixture formats
 * documented in README.md), writes a malloc'd JSON report to *out, and
 * returns a status code:
 *
 *   0  success / property verified
 *   1  computation ran but a checked property is false (the report
 *      names the violated invariant)
 *   2  malformed or ill-typed input
 *
 * *out is always set to a JSON object (on failure: {"error": code,
 * "message": text}) unless allocation itself fails, in which case *out
 * is NULL. Release it with ncm_string_free.
 */

#ifndef NCMOTIVES_H
#define NCMOTIVES_H

#ifdef __cplusplus
extern "C" {
#endif

/* Validate any fixture document (kind quiver | bimodule | complex |
 * correspondence | category | orbitspec) and report kind-specific
 * invariants (e.g. smooth/proper certification for quivers). */
int ncm_check(const char* fixture_json, char** out);

/* Categorical trace of an endo-correspondence document. */
int ncm_trace(const char* correspondence_json, char** out);

/* Intersection number <X.Y> of two correspondence documents forming a
 * round trip. */
int ncm_pair(const char* corr_x_json, const char* corr_y_json, char** out);

/* Gram matrix of the trace pairing on End of the motive defined by an
 * idempotent endo-correspondence document, with its radical dimension. */
int ncm_gram(const char* motive_corr_json, char** out);

/* Numerical ideal (hom-space radical dimensions) of a category document. */
int ncm_radical(const char* category_json, char** out);

/* Quotient of a category document by its numerical ideal; returns the
 * quotient category document plus projection data dimensions. */
int ncm_quotient(const char* category_json, char** out);

/* Karoubi envelope of a category document along listed idempotents
 * (JSON: per object, an array of coordinate arrays of rational strings;
 * pass "[]" or NULL for none). */
int ncm_karoubi(const char* category_json, const char* idempotents_json,
                char** out);

/* Orbit category of a category document along an orbitspec document. */
int ncm_orbit(const char* category_json, const char* orbitspec_json, char** out);

/* Semisimplicity report; with after_quotient nonzero, the numerical
 * quotient is taken first. Status 1 when the verdict is negative. */
int ncm_semisimple(const char* category_json, int after_quotient, char** out);

/* Run a verification suite (ideal | largest | trace-agreement | construction-order |
 * conservativity | nilpotent | all) over the fixture corpus in
 * fixture_dir with the given seed. Status 1 when any assertion fails. */
int ncm_verify(const char* suite, const char* fixture_dir,
               unsigned long long seed, char** out);

void ncm_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
