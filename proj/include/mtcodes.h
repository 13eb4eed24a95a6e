/* mtcodes: C API for the multi-twisted code toolkit.
 *
 * The library parses line-oriented code-specification text
 * (field/block/gen directives), analyzes the code, and renders
 * deterministic reports. Handles are opaque; every entry point reports
 * failures through an mtx_status and an optional heap-allocated message.
 * Strings returned through char** are owned by the caller and must be
 * released with mtx_string_free.
 */
#ifndef MTCODES_H
#define MTCODES_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
    MTX_OK = 0,
    MTX_EUSAGE = 1,  /* bad arguments to the API itself */
    MTX_EINPUT = 2,  /* invalid input text or precondition violation */
    MTX_EVERIFY = 3, /* verification found a mismatch */
    MTX_EINTERNAL = 4,
} mtx_status;

typedef struct mtx_code mtx_code; /* parsed code: field, blocks, generators */

unsigned mtx_abi_version(void);
const char* mtx_status_name(mtx_status st);

mtx_status mtx_code_parse(const char* text, mtx_code** out, char** err);
void mtx_code_free(mtx_code* code);
void mtx_string_free(char* s);

/* Structured getters; return -1 on a null handle. */
int64_t mtx_code_length(const mtx_code* code);
int64_t mtx_code_dimension(const mtx_code* code);
int64_t mtx_code_generator_count(const mtx_code* code);

typedef struct {
    int kv;                /* machine-readable key-value lines */
    uint64_t exact_budget; /* codeword cap for exact distances; 0 = default 2^24 */
    int skip_exact;        /* skip exact-distance enumeration */
    const char* omega;     /* optional second twist vector, space-separated encodings */
} mtx_report_options;

mtx_status mtx_report_factor(const mtx_code* code, const mtx_report_options* opt, char** out,
                             char** err);
mtx_status mtx_report_analyze(const mtx_code* code, const mtx_report_options* opt, char** out,
                              char** err);
mtx_status mtx_report_census(const mtx_code* code, const mtx_report_options* opt, char** out,
                             char** err);
mtx_status mtx_report_bound(const mtx_code* code, const mtx_report_options* opt, char** out,
                            char** err);

/* Dual code in code-specification text (twists inverted). */
mtx_status mtx_dual_text(const mtx_code* code, char** out, char** err);

/* Build a code from constituent basis rows: the same grammar plus
 * `part <w> <elem> | ...` lines; emits code-specification text. */
mtx_status mtx_trace_build(const char* trace_text, char** out, char** err);

/* Enumerate all codes of the input's spectrum and list matches for
 * predicate "selfdual" | "selforthogonal" | "lcd"; refuses when the code
 * count exceeds cap. */
mtx_status mtx_search(const mtx_code* code, const char* predicate, uint64_t cap,
                      const mtx_report_options* opt, char** out, char** err);

/* Run every verification suite (oracle grids included when full_grid is
 * nonzero). The report is byte-identical for a fixed seed. Returns MTX_OK
 * when every suite passes, MTX_EVERIFY otherwise. */
mtx_status mtx_verify(uint64_t seed, int full_grid, char** out);

#ifdef __cplusplus
}
#endif

#endif /* MTCODES_H */
