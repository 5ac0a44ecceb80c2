/*
 * permrank — rank/unrank codecs between natural numbers and five (signed)
 * permutation group families, the mixed-radix number systems behind them,
 * and a toy permutation-composition block cipher.
 *
 * Conventions:
 *   - Every fallible function returns a pr_status; PR_OK is zero. On failure
 *     pr_last_error() describes the problem (thread-local).
 *   - Out-parameters are written only on PR_OK.
 *   - Strings returned through char** and buffers returned through uint8_t**
 *     are owned by the caller; release them with pr_string_free() and
 *     pr_buffer_free().
 *   - Arbitrary-precision naturals cross this interface as decimal strings.
 *   - Signed permutations use window notation text "[w1,w2,...,wn]".
 *   - Digit strings are colon-separated, most significant digit first.
 */
#ifndef PERMRANK_H
#define PERMRANK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
  PR_OK = 0,
  PR_ERROR_INVALID_ARGUMENT = 1, /* null pointer, bad enum, misuse */
  PR_ERROR_FORMAT = 2,           /* unparseable text or malformed stream */
  PR_ERROR_DOMAIN = 3,           /* out-of-range value, non-member, bad size */
  PR_ERROR_OVERFLOW = 4,         /* fixed number system exceeded */
  PR_ERROR_INTERNAL = 5
} pr_status;

/*
 * B: all signed permutations        D: even number of negative entries
 * S: plain permutations             A: plain with even inversion number
 * F: signed with even inversion number
 */
typedef enum pr_family {
  PR_FAMILY_B = 0,
  PR_FAMILY_D = 1,
  PR_FAMILY_S = 2,
  PR_FAMILY_A = 3,
  PR_FAMILY_F = 4
} pr_family;

typedef struct pr_perm pr_perm;     /* signed permutation */
typedef struct pr_system pr_system; /* mixed-radix number system */
typedef struct pr_key pr_key;       /* cipher key */
typedef struct pr_enum pr_enum;     /* family enumeration cursor */

/* Message for the most recent failure on this thread; empty after success. */
const char* pr_last_error(void);
void pr_string_free(char* text);
void pr_buffer_free(uint8_t* buffer);

/* ---- families ---------------------------------------------------------- */

/* Smallest window size the family's codec supports, or -1 for a bad tag. */
int pr_family_min_size(pr_family family);
/* Group order |G_n| as a decimal string. */
pr_status pr_family_order(pr_family family, int n, char** out_decimal);

/* ---- signed permutations ----------------------------------------------- */

pr_status pr_perm_identity(int n, pr_perm** out);
pr_status pr_perm_from_window(const int32_t* window, size_t n, pr_perm** out);
pr_status pr_perm_parse(const char* text, pr_perm** out);
void pr_perm_free(pr_perm* perm);

/* Window size n, or 0 when perm is NULL. */
int pr_perm_size(const pr_perm* perm);
/* Copies the window into out_window, which must hold pr_perm_size entries. */
pr_status pr_perm_window(const pr_perm* perm, int32_t* out_window);
pr_status pr_perm_format(const pr_perm* perm, char** out_text);
/* Image of j, for j in {-n..-1, 1..n}. */
pr_status pr_perm_image(const pr_perm* perm, int32_t j, int32_t* out_image);

pr_status pr_perm_compose(const pr_perm* lhs, const pr_perm* rhs, pr_perm** out);
pr_status pr_perm_invert(const pr_perm* perm, pr_perm** out);
pr_status pr_perm_is_member(const pr_perm* perm, pr_family family, int* out_member);
/* Uniform member of the family, deterministic per seed. */
pr_status pr_perm_random(pr_family family, int n, uint64_t seed, pr_perm** out);

/* ---- inversion statistics ---------------------------------------------- */

pr_status pr_perm_inv(const pr_perm* perm, uint64_t* out_inv);
/* Per-position statistic, i in 1..n. */
pr_status pr_perm_inv_i(const pr_perm* perm, int i, uint64_t* out_inv);
/* Fills out_vector[0..n-1] with inv_1 .. inv_n. */
pr_status pr_perm_inv_vector(const pr_perm* perm, uint64_t* out_vector);

/* ---- number systems ----------------------------------------------------- */

/* Built-in family system truncated to window size n; extends on demand. */
pr_status pr_system_builtin(pr_family family, int n, pr_system** out);
/* Fixed system from explicit digit bounds (each in 1..2^32-2). */
pr_status pr_system_from_radices(int offset, const uint64_t* radices, size_t count,
                                 pr_system** out);
void pr_system_free(pr_system* system);

size_t pr_system_positions(const pr_system* system);
pr_status pr_system_radix(const pr_system* system, size_t position, uint64_t* out_radix);
pr_status pr_system_weight(const pr_system* system, size_t position, char** out_decimal);

/* True in *out_valid iff weights[0] = 1 and each weight obeys the product
 * rule weight[p+1] = weight[p] * (1 + radix[p]). Mismatched lengths are an
 * error, not "false". */
pr_status pr_validate_system(const char* const* weights_decimal, size_t weight_count,
                             const uint64_t* radices, size_t radix_count, int* out_valid);

pr_status pr_encode(const pr_system* system, const char* value_decimal, char** out_digits);
pr_status pr_decode(const pr_system* system, const char* digits, char** out_decimal);
pr_status pr_increment(const pr_system* system, const char* digits, char** out_digits);

/* ---- rank / unrank ------------------------------------------------------ */

/* Rank of a family member in [0, |G_n|). */
pr_status pr_rank(const pr_perm* perm, pr_family family, char** out_decimal);
/* The member's digit string in the family's number system. */
pr_status pr_digits(const pr_perm* perm, pr_family family, char** out_digits);
pr_status pr_unrank(pr_family family, int n, const char* rank_decimal, pr_perm** out);
pr_status pr_unrank_digits(pr_family family, int n, const char* digits, pr_perm** out);

/* ---- enumeration -------------------------------------------------------- */

pr_status pr_enum_create(pr_family family, int n, pr_enum** out);
/* Yields the next member, or sets *out_perm = NULL when exhausted. */
pr_status pr_enum_next(pr_enum* cursor, pr_perm** out_perm);
void pr_enum_free(pr_enum* cursor);

/* ---- cipher -------------------------------------------------------------- */

pr_status pr_key_generate(int n, uint64_t seed, pr_key** out);
pr_status pr_key_from_perm(const pr_perm* perm, pr_key** out);
/* The key's window, for printing or storage. */
pr_status pr_key_perm(const pr_key* key, pr_perm** out);
void pr_key_free(pr_key* key);

/* Block maps on [0, 2^n n!), mutually inverse bijections. */
pr_status pr_encrypt_block(const pr_key* key, const char* m_decimal, char** out_decimal);
pr_status pr_decrypt_block(const pr_key* key, const char* c_decimal, char** out_decimal);

/* Stream mode: 15-byte header (magic "PRNK", version 1, n as 2-byte
 * big-endian, plaintext length as 8-byte big-endian) followed by fixed-size
 * ciphertext blocks. Requires n >= 4. */
pr_status pr_encrypt(const pr_key* key, const uint8_t* data, size_t size, uint8_t** out,
                     size_t* out_size);
pr_status pr_decrypt(const pr_key* key, const uint8_t* data, size_t size, uint8_t** out,
                     size_t* out_size);

/* ---- selftest ------------------------------------------------------------ */

/* Runs the oracle-equivalence and bijection sweeps for n <= 4. Writes 1 to
 * *out_ok when every check passed and a line-per-check report to
 * *out_report. */
pr_status pr_selftest(int* out_ok, char** out_report);

#ifdef __cplusplus
}
#endif

#endif /* PERMRANK_H */
