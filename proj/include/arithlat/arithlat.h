#ifndef ARITHLAT_H
#define ARITHLAT_H

/* C interface to the arithlat library. All strings returned through out
 * parameters are owned by the caller and released with al_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define AL_API __declspec(dllexport)
#else
#define AL_API __attribute__((visibility("default")))
#endif

typedef enum al_status {
  AL_OK = 0,
  AL_CHECK_FAILED = 1, /* ran to completion, some check failed */
  AL_INVALID_INPUT = 2,
  AL_DOMAIN_ERROR = 3, /* refused by a mathematical precondition */
  AL_INTERNAL = 4
} al_status;

typedef struct al_config al_config;
typedef struct al_algebra al_algebra;

AL_API const char* al_version(void);

AL_API al_config* al_config_new(void);
AL_API void al_config_free(al_config* cfg);
/* Keys: a b n height max-iter spec suite seed kind r s m l unit word-length max-degree */
AL_API al_status al_config_set(al_config* cfg, const char* key, const char* value);
/* Lines of "key = value"; '#' starts a comment. */
AL_API al_status al_config_load_file(al_config* cfg, const char* path);

/* noun: algebra | units | rep | descend | build | verify.
 * On AL_OK and AL_CHECK_FAILED *out_json is the result document; on
 * other statuses it is an error document {"error": {...}}. */
AL_API al_status al_run(const al_config* cfg, const char* noun, char** out_json);

/* Detail of the last failure on this thread. The code is the library's
 * error number (0 when none); the message stays valid until the next call. */
AL_API int al_last_error_code(void);
AL_API const char* al_last_error_message(void);

AL_API void al_string_free(char* s);

/* Rational parameters as "p/q" or "p". */
AL_API al_status al_algebra_new(const char* a, const char* b, al_algebra** out);
AL_API void al_algebra_free(al_algebra* alg);
AL_API al_status al_algebra_is_division(const al_algebra* alg, int* out);
AL_API al_status al_algebra_split_at_infinity(const al_algebra* alg, int* out);
/* place: "inf" or a prime. */
AL_API al_status al_algebra_hilbert_symbol(const al_algebra* alg, const char* place, int* out);

#ifdef __cplusplus
}
#endif

#endif
