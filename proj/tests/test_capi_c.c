/* Compiled as C99: proves the public header is usable from plain C. */

#include <stdio.h>
#include <string.h>

#include <abr/abr.h>

static int fail(const char* what) {
    fprintf(stderr, "c smoke: %s (%s)\n", what, abr_last_error());
    return 1;
}

int main(void) {
    char* bits = NULL;
    if (abr_encode(13, 4, ABR_SYSTEM_ABR, &bits) != ABR_OK)
        return fail("encode");
    if (strcmp(bits, "1011") != 0)
        return fail("encode value");
    abr_string_free(bits);

    uint64_t value = 0;
    if (abr_decode("1111", ABR_SYSTEM_ABR, &value) != ABR_OK || value != 9)
        return fail("decode");

    uint64_t bases[4];
    if (abr_compute_bases(4, bases, 4) != ABR_OK || bases[3] != 12)
        return fail("bases");

    abr_report* report = NULL;
    if (abr_verify_width(6, 1, &report) != ABR_OK)
        return fail("verify");
    const int pass = abr_report_pass(report);
    abr_report_free(report);
    if (!pass)
        return fail("verify pass flag");

    uint8_t codeword = 0;
    if (abr_h74_encode(0x0B, &codeword) != ABR_OK)
        return fail("hamming encode");
    uint8_t fixed = 0, nibble = 0, position = 0;
    if (abr_h74_correct(codeword ^ 0x40, &fixed, &nibble, &position) != ABR_OK)
        return fail("hamming correct");
    if (position != 7 || fixed != codeword || nibble != 0x0B)
        return fail("hamming correct result");

    uint8_t byte = 0;
    if (abr_stego_embed_byte(0x0D, ABR_MASK_LOW_ABR, &byte) != ABR_OK || byte != 0x0B)
        return fail("stego byte");

    if (abr_encode(16, 4, ABR_SYSTEM_ABR, &bits) != ABR_ERR_RANGE)
        return fail("range status");
    if (strstr(abr_last_error(), "15") == NULL)
        return fail("range message");

    abr_table* table = NULL;
    if (abr_table_create((abr_table_kind)42, 4, &table) != ABR_ERR_ARG)
        return fail("junk enum status");

    puts("ok");
    return 0;
}
