/* C interface for the ABR codec library.
 *
 * ABR (Adaptive Base Representation) is a positional number system in which
 * index i carries base B_i and an even-indexed set digit is subtracted
 * instead of added when its left neighbour is also set. Width-n ABR strings
 * cover exactly the values 0 .. 2^n - 1, each once, like plain binary.
 *
 * Conventions:
 *   - widths are 1..62; bit strings are NUL-terminated ASCII '0'/'1',
 *     leftmost character = most significant index
 *   - functions return ABR_OK or a status code; on failure
 *     abr_last_error() holds a thread-local message
 *   - char* out-parameters are heap-allocated, release with abr_string_free
 *   - abr_report / abr_table are opaque handles with _free functions
 */

#ifndef ABR_H
#define ABR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ABR_BUILD_SHARED)
#    define ABR_API __declspec(dllexport)
#  else
#    define ABR_API __declspec(dllimport)
#  endif
#else
#  define ABR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum abr_status {
    ABR_OK = 0,
    ABR_ERR_RANGE = 1,   /* domain precondition violated (width/value/index) */
    ABR_ERR_THEOREM = 2, /* enumeration found a duplicate or gap; must never fire */
    ABR_ERR_DECODE = 3,  /* malformed compressed container */
    ABR_ERR_IO = 4,      /* file failure */
    ABR_ERR_ARG = 5,     /* null pointer, bad enum, or undersized buffer */
    ABR_STATUS_MAX_ENUM = 0x7fffffff /* keeps the enum int-sized */
} abr_status;

typedef enum abr_system {
    ABR_SYSTEM_ABR = 0,
    ABR_SYSTEM_BNS = 1,
    ABR_SYSTEM_MAX_ENUM = 0x7fffffff
} abr_system;

typedef enum abr_mask {
    ABR_MASK_NONE = 0,
    ABR_MASK_LOW_ABR = 1,
    ABR_MASK_HIGH_ABR = 2,
    ABR_MASK_BOTH_ABR = 3,
    ABR_MASK_MAX_ENUM = 0x7fffffff
} abr_mask;

typedef enum abr_format {
    ABR_FORMAT_PLAIN = 0,
    ABR_FORMAT_CSV = 1,
    ABR_FORMAT_MARKDOWN = 2,
    ABR_FORMAT_MAX_ENUM = 0x7fffffff
} abr_format;

typedef enum abr_table_kind {
    ABR_TABLE_BASES = 0,  /* rows (index, 2^i, B_i) */
    ABR_TABLE_CODEC = 1,  /* rows (value, bns bits, abr bits); width <= 16 */
    ABR_TABLE_PROFILE = 2, /* rows (value, abr popcount, bns popcount); width <= 24 */
    ABR_TABLE_KIND_MAX_ENUM = 0x7fffffff
} abr_table_kind;

ABR_API const char* abr_version(void);
ABR_API const char* abr_last_error(void);
ABR_API void abr_string_free(char* s);

/* ---- codec ---------------------------------------------------------- */

/* Fills bases[0..width-1] with B_0..B_{n-1}; capacity is the array size. */
ABR_API abr_status abr_compute_bases(uint32_t width, uint64_t* bases, size_t capacity);

ABR_API abr_status abr_encode(uint64_t value, uint32_t width, abr_system system,
                              char** bits_out);
/* Width is inferred from strlen(bits). */
ABR_API abr_status abr_decode(const char* bits, abr_system system, uint64_t* value_out);
/* Enumeration oracle; width <= 24. */
ABR_API abr_status abr_encode_exhaustive(uint64_t value, uint32_t width, char** bits_out);

/* ---- exhaustive verification ---------------------------------------- */

typedef struct abr_report abr_report;

/* Decodes all 2^width patterns (width <= 24); jobs = 0 picks the machine
 * parallelism. The report outcome is independent of jobs. */
ABR_API abr_status abr_verify_width(uint32_t width, uint32_t jobs, abr_report** report_out);
ABR_API void abr_report_free(abr_report* report);

ABR_API int abr_report_pass(const abr_report* report);
ABR_API uint32_t abr_report_width(const abr_report* report);
ABR_API uint64_t abr_report_distinct(const abr_report* report);
ABR_API uint64_t abr_report_min(const abr_report* report);
ABR_API uint64_t abr_report_max(const abr_report* report);
ABR_API uint64_t abr_report_duplicates(const abr_report* report);
ABR_API uint64_t abr_report_missing(const abr_report* report);
ABR_API uint64_t abr_report_elapsed_ms(const abr_report* report);
/* Human summary line (includes timing). */
ABR_API abr_status abr_report_to_text(const abr_report* report, char** text_out);
/* Byte-stable key=value line (no timing). */
ABR_API abr_status abr_report_to_kv(const abr_report* report, char** text_out);

/* agree_out = 1 iff the fast encoder equals the oracle on all 2^width
 * values; width <= 16. */
ABR_API abr_status abr_cross_check_encoders(uint32_t width, int* agree_out);

/* ---- reference tables ------------------------------------------------ */

typedef struct abr_table abr_table;

ABR_API abr_status abr_table_create(abr_table_kind kind, uint32_t width,
                                    abr_table** table_out);
ABR_API abr_status abr_table_render(const abr_table* table, abr_format format,
                                    char** text_out);
ABR_API void abr_table_free(abr_table* table);

/* Streams the profile table in CSV form to a file; width <= 24. */
ABR_API abr_status abr_profile_write_csv(uint32_t width, const char* path);

/* ---- hamming(7,4) ----------------------------------------------------
 * Codeword layout d4 d3 d2 p3 d1 p2 p1 over positions 7..1. Packed
 * arguments use bit k = position k+1 (codewords) and bit k = data bit
 * d_{k+1} (nibbles); string variants use '0'/'1' text, leftmost =
 * position 7 (codewords) or d4 (nibbles). */

ABR_API abr_status abr_h74_encode(uint8_t data_bits, uint8_t* codeword_out);
ABR_API abr_status abr_h74_syndrome(uint8_t codeword, uint8_t* error_position_out);
ABR_API abr_status abr_h74_correct(uint8_t codeword, uint8_t* corrected_out,
                                   uint8_t* data_bits_out, uint8_t* error_position_out);

ABR_API abr_status abr_h74_encode_str(const char* data_bits, char** codeword_out);
ABR_API abr_status abr_h74_correct_str(const char* codeword, char** corrected_out,
                                       char** data_bits_out, uint8_t* error_position_out);

/* Step-by-step worked example for value 0..15; flip_position 0 skips the
 * correction walk, 1..7 flips that position first. */
ABR_API abr_status abr_h74_demo(uint64_t value, abr_system system, uint32_t flip_position,
                                char** text_out);

/* ---- steganography ---------------------------------------------------
 * Masked nibbles of each byte are rewritten in width-4 ABR; each mask is a
 * bijection on bytes, so extract inverts embed exactly. */

ABR_API abr_status abr_stego_embed_byte(uint8_t byte_in, abr_mask mask, uint8_t* byte_out);
ABR_API abr_status abr_stego_extract_byte(uint8_t byte_in, abr_mask mask, uint8_t* byte_out);
ABR_API abr_status abr_stego_embed_buffer(const uint8_t* in, size_t len, uint8_t* out,
                                          abr_mask mask);
ABR_API abr_status abr_stego_extract_buffer(const uint8_t* in, size_t len, uint8_t* out,
                                            abr_mask mask);
ABR_API abr_status abr_stego_embed_file(const char* in_path, const char* out_path,
                                        abr_mask mask, uint64_t* count_out);
ABR_API abr_status abr_stego_extract_file(const char* in_path, const char* out_path,
                                          abr_mask mask, uint64_t* count_out);

/* ---- huffman demo ---------------------------------------------------- */

ABR_API abr_status abr_huffman_compress_file(const char* in_path, const char* out_path,
                                             uint64_t* in_bytes_out, uint64_t* out_bytes_out);
ABR_API abr_status abr_huffman_decompress_file(const char* in_path, const char* out_path,
                                               uint64_t* in_bytes_out, uint64_t* out_bytes_out);
/* Compressed payload bit-lengths of the file as-is and after the per-byte
 * mask transform; the two are equal for every mask. */
ABR_API abr_status abr_huffman_compare_file(const char* in_path, abr_mask mask,
                                            uint64_t* raw_bits_out,
                                            uint64_t* transformed_bits_out);

#ifdef __cplusplus
}
#endif

#endif /* ABR_H */
