/* l3kit C API: exact verification and construction toolkit for 3-Leibniz
 * algebras, twisted Rota-Baxter operators, their cohomology, deformations
 * and NS structures.
 *
 * All functions are thread-compatible: handles must not be shared between
 * threads without external synchronization, but distinct handles are
 * independent. Strings returned by the library stay owned by the handle
 * they came from and are valid until that handle is freed.
 */
#ifndef L3KIT_H
#define L3KIT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum l3k_status {
    L3K_OK = 0,
    L3K_CHECK_FAILED = 1, /* well-formed check evaluated to "not ok" */
    L3K_ERR_PARSE = 2,    /* malformed JSON, scalar, or schema violation */
    L3K_ERR_ARGS = 3,     /* bad arguments to an API call */
    L3K_ERR_NOT_FOUND = 4,
    L3K_ERR_PRECONDITION = 5, /* operation precondition failed */
    L3K_ERR_INTERNAL = 6
} l3k_status;

typedef struct l3k_manifest l3k_manifest; /* opaque: a named object graph */
typedef struct l3k_result l3k_result;     /* opaque: outcome of one command */

const char* l3k_version(void);

/* Parse a manifest from JSON text / load one from a file. On success stores
 * a new handle in *out. On failure returns a status and, if errbuf is not
 * NULL, copies a diagnostic into it (truncated to errbuf_len, always
 * NUL-terminated). */
l3k_status l3k_manifest_parse(const char* json_text, l3k_manifest** out, char* errbuf, unsigned long errbuf_len);
l3k_status l3k_manifest_load(const char* path, l3k_manifest** out, char* errbuf, unsigned long errbuf_len);

void l3k_manifest_free(l3k_manifest* m);

/* Canonical JSON text of the manifest; owned by the handle. */
const char* l3k_manifest_json(const l3k_manifest* m);

/* Run one command against a manifest.
 *   command:      e.g. "check-trbo", "ns-from-nijenhuis", "selftest"
 *   options_json: NULL or an object with optional fields
 *                 {"objects": ["name", ...],   command arguments, in order
 *                  "degree": n,
 *                  "lambda": "p/q",
 *                  "strict_ns": "corrected"|"printed",
 *                  "out": "artifact-name"}
 * A result handle is stored in *out on L3K_OK or L3K_CHECK_FAILED; error
 * statuses leave *out NULL and fill errbuf. */
l3k_status l3k_run(const l3k_manifest* m, const char* command, const char* options_json, l3k_result** out,
                   char* errbuf, unsigned long errbuf_len);

/* 1 when the command outcome was ok (checks passed / construction done). */
int l3k_result_ok(const l3k_result* r);

/* JSON body of the result (report or artifact); owned by the handle. */
const char* l3k_result_json(const l3k_result* r);

void l3k_result_free(l3k_result* r);

/* Number of known commands and their names (static storage). */
unsigned long l3k_command_count(void);
const char* l3k_command_name(unsigned long i);

#ifdef __cplusplus
}
#endif

#endif /* L3KIT_H */
