// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the convex geometry library. Every function returns a
 * cgx_status; on failure a message is available from cgx_last_error() on the
 * calling thread. Strings returned through char** are owned by the caller and
 * released with cgx_string_free(). */

#ifndef CGX_CGX_H_
#define CGX_CGX_H_

#include <stddef.h>

#if defined(_WIN32)
#define CGX_API __declspec(dllexport)
#else
#define CGX_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cgx_status {
  CGX_OK = 0,
  CGX_E_INVALID_ARGUMENT,
  CGX_E_MISSING_TOP,
  CGX_E_NOT_LOOPLESS,
  CGX_E_NOT_INTERSECTION_CLOSED,
  CGX_E_INTERNAL_INCONSISTENCY,
  CGX_E_NOT_CLOSED,
  CGX_E_NOT_NESTED,
  CGX_E_OVERLAPPING_GROUNDS,
  CGX_E_GROUND_TOO_LARGE,
  CGX_E_CODOMAIN_TOO_LARGE,
  CGX_E_LATTICE_TOO_LARGE,
  CGX_E_INTERPOLATION_MISMATCH,
  CGX_E_NOT_A_FLAG,
  CGX_E_NOT_IN_CD_SPAN,
  CGX_E_NOT_GRADED,
  CGX_E_NOT_A_SUBLATTICE,
  CGX_E_NOT_MAXIMAL_CHAIN,
  CGX_E_NOT_SUPERSOLVABLE,
  CGX_E_DEGREE_MISMATCH,
  CGX_E_PARSE_ERROR,
  CGX_E_CYCLIC_RELATIONS,
  CGX_E_DUPLICATE_POINTS,
  CGX_E_OUT_OF_MEMORY,
  CGX_E_UNKNOWN
} cgx_status;

typedef struct cgx_geometry cgx_geometry;

/* "ok", "ParseError", ... */
CGX_API const char* cgx_status_name(cgx_status status);
/* Nonzero for statuses raised by size guards; these clear with force. */
CGX_API int cgx_status_is_guard(cgx_status status);
/* Message of the last failure on this thread, "" if none. */
CGX_API const char* cgx_last_error(void);
CGX_API void cgx_string_free(char* s);

/* GeometryFile JSON text. */
CGX_API cgx_status cgx_geometry_parse(const char* text, size_t length,
                                      cgx_geometry** out);
CGX_API cgx_status cgx_geometry_read_file(const char* path,
                                          cgx_geometry** out);
/* kind: "from_poset", "points2d", "chain", "antichain", or a named example
 * "colinear3", "g1", "g2", "chief", "counterexample". params is a JSON object
 * (may be NULL) with "edges", "points", "n" and "labels" as applicable. */
CGX_API cgx_status cgx_geometry_generate(const char* kind,
                                         const char* params_json,
                                         cgx_geometry** out);
CGX_API void cgx_geometry_free(cgx_geometry* g);

CGX_API int cgx_geometry_ground_size(const cgx_geometry* g);
/* Canonical GeometryFile text. */
CGX_API cgx_status cgx_geometry_serialize(const cgx_geometry* g, char** out);

/* The calls below write a JSON document to *out_json. */

/* Classification and parse warnings. */
CGX_API cgx_status cgx_check(const cgx_geometry* g, char** out_json);
/* character: "eta", "zeta", "phi", "phi-prime". Values for n = 0..n_max. */
CGX_API cgx_status cgx_invariant(const cgx_geometry* g, const char* character,
                                 int n_max, char** out_json);
CGX_API cgx_status cgx_flag(const cgx_geometry* g, const char* character,
                            char** out_json);
CGX_API cgx_status cgx_abindex(const cgx_geometry* g, const char* character,
                               char** out_json);
CGX_API cgx_status cgx_cdindex(const cgx_geometry* g, const char* character,
                               char** out_json);
CGX_API cgx_status cgx_supersolvable(const cgx_geometry* g, int force,
                                     char** out_json);
CGX_API cgx_status cgx_chief(const cgx_geometry* g, int force,
                             char** out_json);
/* text != 0 selects the human-readable report. *passed is 1 when no check
 * failed. */
CGX_API cgx_status cgx_verify_geometry(const cgx_geometry* g, int force,
                                       int text, char** out, int* passed);
CGX_API cgx_status cgx_verify_corpus(int max_n, int force, int text,
                                     char** out, int* passed);
/* Every labeled convex geometry on exactly n elements. */
CGX_API cgx_status cgx_corpus(int n, int force, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* CGX_CGX_H_ */
