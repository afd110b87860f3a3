/*******************************************************************************
 * include/strsort/key_word.hpp
 *
 * Helpers on packed 8-character key words: LCP via XOR and leading-zero
 * count, terminator depth, character extraction.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_KEY_WORD_HEADER
#define STRSORT_KEY_WORD_HEADER

#include <bit>
#include <cstdint>

namespace strsort {

//! number of characters a key word holds
inline constexpr unsigned kKeyChars = 8;

//! number of equal leading characters of two key words
inline unsigned key_lcp_bytes(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t x = a ^ b;
    return x == 0 ? 8u : unsigned(std::countl_zero(x)) / 8u;
}

//! characters before the terminator inside a key word; 8 when none.
//! Key words are zero-padded after the terminator, so trailing zero bytes
//! mark the terminated tail.
inline unsigned key_terminated_depth(std::uint64_t a)
{
    if (a == 0) return 0;
    unsigned trailing = unsigned(std::countr_zero(a)) / 8u;
    return (a & 0xFF) ? 8u : 8u - trailing;
}

//! whether the key word contains the terminator
inline bool key_has_terminator(std::uint64_t a)
{
    return (a & 0xFF) == 0;
}

//! the d-th character in the key word, 0 <= d < 8
inline unsigned char key_char_at(std::uint64_t a, unsigned d)
{
    return static_cast<unsigned char>(a >> (8 * (7 - d)));
}

} // namespace strsort

#endif // STRSORT_KEY_WORD_HEADER
