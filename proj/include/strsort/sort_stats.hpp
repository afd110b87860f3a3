/*******************************************************************************
 * include/strsort/sort_stats.hpp
 *
 * Instrumentation counters for the theorem-bound property tests. Counting is
 * enabled by passing a SortStats pointer into a sorter; a null pointer keeps
 * the hot paths free of bookkeeping.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_SORT_STATS_HEADER
#define STRSORT_SORT_STATS_HEADER

#include <algorithm>
#include <cstddef>

namespace strsort {

/*!
 * Exact operation counters.
 *
 * char_cmp counts ternary character comparisons: one unit per compared
 * position, where testing the same pair of characters for mismatch,
 * terminator and order counts once.
 *
 * string_access counts w-character fetch events (w = 8): every event that
 * loads a block of characters from a string into a cache word, and in the
 * merge algorithms every string whose characters are read by one compare.
 *
 * bytes_aux is the peak number of auxiliary bytes a sorter allocated beyond
 * the order array it permutes.
 */
struct SortStats
{
    std::size_t char_cmp = 0;
    std::size_t string_access = 0;
    std::size_t bytes_aux = 0;

    void reset() { *this = SortStats(); }

    //! fold a per-worker counter into a total
    void merge(const SortStats& o)
    {
        char_cmp += o.char_cmp;
        string_access += o.string_access;
        bytes_aux = std::max(bytes_aux, o.bytes_aux);
    }

    void note_aux_peak(std::size_t bytes)
    {
        bytes_aux = std::max(bytes_aux, bytes);
    }
};

//! helpers so call sites stay one-liners when stats may be null
inline void count_char_cmp(SortStats* s, std::size_t k = 1)
{
    if (s) s->char_cmp += k;
}

inline void count_string_access(SortStats* s, std::size_t k = 1)
{
    if (s) s->string_access += k;
}

} // namespace strsort

#endif // STRSORT_SORT_STATS_HEADER
