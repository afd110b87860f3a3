/*******************************************************************************
 * include/strsort/string_set.hpp
 *
 * String set representation: a character arena of zero-terminated strings
 * plus an array of string handles (arena offsets). Sorting algorithms permute
 * handle arrays only, the arena is immutable after construction.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_STRING_SET_HEADER
#define STRSORT_STRING_SET_HEADER

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace strsort {

//! handle of a string: offset of its first character in the arena
using Handle = std::size_t;

//! per-position longest-common-prefix lengths (in characters) of
//! lexicographically adjacent strings; entry 0 is undefined and stored as 0
using LcpArray = std::vector<std::size_t>;

//! thrown by ingestion when the input contains a 0x00 byte
class EmbeddedZeroByte : public std::runtime_error
{
public:
    std::size_t offset;

    explicit EmbeddedZeroByte(std::size_t off)
        : std::runtime_error("embedded zero byte at offset " +
                             std::to_string(off)),
          offset(off) { }
};

/*!
 * An immutable arena of zero-terminated 8-bit strings together with the
 * canonical handle array in input order. The alphabet is {1..255}; the
 * terminator byte 0 never occurs inside a string body. |s| counts the
 * terminator, so total_chars() is the arena portion covered by strings.
 */
class StringSet
{
public:
    StringSet() = default;

    //! parse newline-delimited records into zero-terminated strings.
    //! Strips LF and CR+LF; a trailing record without newline is accepted.
    static StringSet from_lines(std::span<const unsigned char> bytes)
    {
        check_no_zero(bytes);
        StringSet ss;
        ss.arena_.reserve(bytes.size() + 1);
        std::size_t pos = 0;
        while (pos < bytes.size()) {
            std::size_t eol = pos;
            while (eol < bytes.size() && bytes[eol] != '\n') ++eol;
            std::size_t end = eol;
            if (end > pos && bytes[end - 1] == '\r') --end;
            ss.handles_.push_back(ss.arena_.size());
            ss.arena_.insert(ss.arena_.end(), bytes.begin() + pos,
                             bytes.begin() + end);
            ss.arena_.push_back(0);
            pos = eol + 1;
        }
        ss.total_chars_ = ss.arena_.size();
        return ss;
    }

    static StringSet from_lines(const std::string& text)
    {
        return from_lines(std::span<const unsigned char>(
            reinterpret_cast<const unsigned char*>(text.data()), text.size()));
    }

    //! all suffixes of the text as overlapping strings over one shared arena
    //! (text plus a single appended terminator)
    static StringSet from_suffixes(std::span<const unsigned char> text)
    {
        check_no_zero(text);
        StringSet ss;
        ss.arena_.assign(text.begin(), text.end());
        ss.arena_.push_back(0);
        ss.handles_.resize(text.size());
        for (std::size_t i = 0; i < text.size(); ++i)
            ss.handles_[i] = i;
        // suffix i has body length |text| - i plus its terminator
        std::size_t len = text.size();
        ss.total_chars_ = len * (len + 1) / 2 + len;
        return ss;
    }

    static StringSet from_suffixes(const std::string& text)
    {
        return from_suffixes(std::span<const unsigned char>(
            reinterpret_cast<const unsigned char*>(text.data()), text.size()));
    }

    //! build from explicit strings, mostly used by tests and generators
    static StringSet from_strings(const std::vector<std::string>& strs)
    {
        StringSet ss;
        std::size_t total = 0;
        for (const std::string& s : strs) total += s.size() + 1;
        ss.arena_.reserve(total);
        for (const std::string& s : strs) {
            for (char c : s)
                if (c == 0) throw EmbeddedZeroByte(ss.arena_.size());
            ss.handles_.push_back(ss.arena_.size());
            ss.arena_.insert(ss.arena_.end(), s.begin(), s.end());
            ss.arena_.push_back(0);
        }
        ss.total_chars_ = ss.arena_.size();
        return ss;
    }

    //! number of strings
    std::size_t size() const { return handles_.size(); }

    bool empty() const { return handles_.empty(); }

    //! total characters including terminators (N)
    std::size_t total_chars() const { return total_chars_; }

    //! canonical handles in input order
    std::span<const Handle> handles() const { return handles_; }

    //! fresh copy of the canonical handle array for a sorter to permute
    std::vector<Handle> make_order() const
    {
        return std::vector<Handle>(handles_.begin(), handles_.end());
    }

    const unsigned char* chars(Handle s) const { return arena_.data() + s; }

    unsigned char at(Handle s, std::size_t depth) const
    {
        return arena_[s + depth];
    }

    //! body length of a string (characters before the terminator)
    std::size_t length(Handle s) const
    {
        const unsigned char* p = chars(s);
        std::size_t i = 0;
        while (p[i] != 0) ++i;
        return i;
    }

    //! longest common prefix of two strings: index of the first mismatch;
    //! equal strings yield the body length
    std::size_t lcp(Handle a, Handle b) const
    {
        const unsigned char* pa = chars(a);
        const unsigned char* pb = chars(b);
        std::size_t i = 0;
        while (pa[i] == pb[i] && pa[i] != 0) ++i;
        return i;
    }

    //! three-way lexicographic comparison starting at a common depth
    int compare(Handle a, Handle b, std::size_t depth = 0) const
    {
        const unsigned char* pa = chars(a) + depth;
        const unsigned char* pb = chars(b) + depth;
        while (*pa != 0 && *pa == *pb) ++pa, ++pb;
        return int(*pa) - int(*pb);
    }

    /*!
     * Pack w = 8 characters starting at depth into one machine word, most
     * significant byte first, zero-padded after the terminator. Numeric
     * order of the words equals lexicographic order of the 8-character
     * substrings. Never reads past the terminator.
     */
    std::uint64_t key8(Handle s, std::size_t depth) const
    {
        const unsigned char* p = chars(s) + depth;
        std::uint64_t key = 0;
        for (unsigned i = 0; i < 8; ++i) {
            unsigned char c = p[i];
            key = (key << 8) | c;
            if (c == 0) {
                key <<= 8 * (7 - i);
                break;
            }
        }
        return key;
    }

    std::string str(Handle s) const
    {
        return std::string(reinterpret_cast<const char*>(chars(s)));
    }

private:
    std::vector<unsigned char> arena_;
    std::vector<Handle> handles_;
    std::size_t total_chars_ = 0;

    static void check_no_zero(std::span<const unsigned char> bytes)
    {
        for (std::size_t i = 0; i < bytes.size(); ++i)
            if (bytes[i] == 0) throw EmbeddedZeroByte(i);
    }
};

} // namespace strsort

#endif // STRSORT_STRING_SET_HEADER
