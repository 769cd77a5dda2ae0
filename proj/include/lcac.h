/*
   Copyright 2026 The lcac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/* C interface to the lcac core (exact calculus for finite Lie conformal
 * algebras). Documents are parsed into opaque handles; every run function
 * produces a report rendered as text or JSON, owned by the caller and
 * released with lcac_string_free. */

#ifndef LCAC_H
#define LCAC_H

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes. The CLI maps them directly onto exit codes. */
#define LCAC_OK 0
#define LCAC_ERR_TASK_FAILED 1 /* a task ran and failed */
#define LCAC_ERR_PARSE 2       /* syntax / resolution error, position in errmsg */
#define LCAC_ERR_IO 3          /* file could not be read */
#define LCAC_ERR_INVALID 4     /* bad arguments (unknown names, bad options) */
#define LCAC_ERR_INTERNAL 5

typedef struct lcac_document lcac_document;

typedef struct lcac_options {
    int degree_bound;            /* < 0: default (10, or LCAC_DEGREE_BOUND) */
    int max_index;               /* < 0: default 10 */
    unsigned long long seed;     /* sampling seed for randomized sweeps */
    int json;                    /* nonzero: JSON report */
} lcac_options;

void lcac_options_init(lcac_options* opts);

/* Parsing. On failure returns LCAC_ERR_PARSE/LCAC_ERR_IO and, when errmsg is
 * non-null, stores a diagnostic ("line:col: message"). */
int lcac_parse_string(const char* text, lcac_document** out, char** errmsg);
int lcac_parse_file(const char* path, lcac_document** out, char** errmsg);
void lcac_document_free(lcac_document* doc);

/* Canonical .lca rendering of a parsed document. */
char* lcac_document_serialize(const lcac_document* doc);

/* Runs every task in the document, in declaration order. *report receives
 * the rendered report (text, or JSON when opts->json). Returns LCAC_OK when
 * all tasks complete, LCAC_ERR_TASK_FAILED otherwise. */
int lcac_run_tasks(const lcac_document* doc, const lcac_options* opts, char** report);

/* Targeted commands. */
int lcac_classify(const lcac_document* doc, const char* algebra, const lcac_options* opts, char** report);
int lcac_reduce(const lcac_document* doc, const char* extension, const char* shift_gen,
                int direction /* +1 or -1 */, const lcac_options* opts, char** report);
int lcac_annihilation_table(const lcac_document* doc, const char* algebra, const lcac_options* opts,
                            char** report);

/* The built-in reproduction suite; needs no input files. */
int lcac_paper_verify(const lcac_options* opts, char** report);

void lcac_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LCAC_H */
