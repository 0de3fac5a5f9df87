#ifndef REALENDO_H
#define REALENDO_H

/* C interface to librealendo. Results are UTF-8 JSON documents owned by the
   caller (release with re_string_free). Status codes double as CLI exit codes. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct re_spec re_spec;

enum {
  RE_OK = 0,
  RE_EARG = 1,        /* null handle, missing form/parameter name */
  RE_EPARSE = 2,
  RE_EVALIDATION = 3,
  RE_EINTERNAL = 4
};

/* Message of the last failing call on this thread; never null. */
const char* re_last_error(void);

int re_spec_load_file(const char* path, re_spec** out);
int re_spec_load_string(const char* json_text, re_spec** out);
void re_spec_free(re_spec* spec);
/* Name given in the spec file. The pointer lives as long as the handle. */
const char* re_spec_name(const re_spec* spec);

/* param may be null (all parameters). Invalid parameters are reported in the
   document and make the call return RE_EVALIDATION. */
int re_check(const re_spec* spec, const char* param, char** out_json);
int re_cohomology(const re_spec* spec, char** out_json);
/* s may be null; otherwise a vector such as "[1/2, 0]" adds a Delta column. */
int re_packet(const re_spec* spec, const char* form, const char* param, const char* s, char** out_json);
/* form may be null (quasi-split form). */
int re_transfer(const re_spec* spec, const char* form, const char* param, const char* s, char** out_json);
/* Property suite; returns RE_EVALIDATION when a required property fails. */
int re_verify(const re_spec* spec, char** out_json);

void re_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif
