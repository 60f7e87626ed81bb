/* C interface to the hyperelliptic mapping class group oracle. */
#ifndef HMCG_H
#define HMCG_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HMCG_API __declspec(dllexport)
#else
#define HMCG_API __attribute__((visibility("default")))
#endif

typedef enum hmcg_status {
  HMCG_OK = 0,
  HMCG_ERR_USAGE = 1,
  HMCG_ERR_PARSE = 2,
  HMCG_ERR_INDEX = 3,
  HMCG_ERR_GENUS = 4,
  HMCG_ERR_RESOURCE_CAP = 5,
  HMCG_ERR_CONTRACT = 6,
  HMCG_ERR_ORDER_EXCEEDS_CAP = 7,
  HMCG_ERR_NULL_ARG = 8,
  HMCG_ERR_INTERNAL = 9
} hmcg_status;

typedef struct hmcg_oracle hmcg_oracle;
typedef struct hmcg_element hmcg_element;

typedef struct hmcg_verify_options {
  int genus_min;
  int genus_max;
  const char* const* claims; /* NULL or an array of claim ids */
  size_t claim_count;
  unsigned jobs;
  size_t letter_cap; /* 0 selects the default */
} hmcg_verify_options;

typedef struct hmcg_verify_summary {
  size_t pass;
  size_t fail;
  size_t skipped;
  size_t error;
  size_t resource_cap;
} hmcg_verify_summary;

/* Message for the last failed call on this thread; never NULL. */
HMCG_API const char* hmcg_last_error(void);
HMCG_API const char* hmcg_status_name(hmcg_status s);

/* Strings returned through char** out-parameters are released with this. */
HMCG_API void hmcg_string_free(char* s);

/* letter_cap = 0 selects the default cap of 10^6 letters. */
HMCG_API hmcg_status hmcg_oracle_create(int genus, size_t letter_cap, hmcg_oracle** out);
HMCG_API void hmcg_oracle_destroy(hmcg_oracle* o);
HMCG_API int hmcg_oracle_genus(const hmcg_oracle* o);

HMCG_API hmcg_status hmcg_evaluate(const hmcg_oracle* o, const char* word, hmcg_element** out);
HMCG_API void hmcg_element_destroy(hmcg_element* e);
HMCG_API int hmcg_element_orientation(const hmcg_element* e);
/* Side length of the square matrix (2g). */
HMCG_API size_t hmcg_element_dimension(const hmcg_element* e);
/* Copies the row-major matrix into buf, which holds at least dim*dim entries. */
HMCG_API hmcg_status hmcg_element_matrix(const hmcg_element* e, int64_t* buf, size_t len);

HMCG_API hmcg_status hmcg_equal(const hmcg_oracle* o, const hmcg_element* a, const hmcg_element* b,
                                int* out);
HMCG_API hmcg_status hmcg_is_identity(const hmcg_oracle* o, const hmcg_element* e, int* out);
HMCG_API hmcg_status hmcg_is_central(const hmcg_oracle* o, const hmcg_element* e, int* out);
/* cap <= 0 selects 8g+8. Returns HMCG_ERR_ORDER_EXCEEDS_CAP when no power up to cap is trivial. */
HMCG_API hmcg_status hmcg_order(const hmcg_oracle* o, const hmcg_element* e, int64_t cap,
                                int64_t* out);

/* Invariant factors of H_1, other than 1. */
HMCG_API hmcg_status hmcg_h1(int genus, int64_t* factors, size_t capacity, size_t* count);
HMCG_API hmcg_status hmcg_involution_index(int genus, int64_t* out);

/* {"genus":g,"checks":[{"relation":..,"passed":..}],"passed":bool} */
HMCG_API hmcg_status hmcg_selftest_json(const hmcg_oracle* o, char** json, int* all_passed);

/* Runs the claim registry. format: 0 text, 1 JSON. */
HMCG_API hmcg_status hmcg_verify(const hmcg_verify_options* options, int format, char** report,
                                 hmcg_verify_summary* summary);

/* JSON array of {"id","description","guard"}. */
HMCG_API hmcg_status hmcg_list_claims(char** json);

#ifdef __cplusplus
}
#endif

#endif
