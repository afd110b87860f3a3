/*******************************************************************************
 * include/strsort/lcp_insertion_sort.hpp
 *
 * Insertion sort that maintains the LCP array while sorting and uses the
 * stored LCPs to skip over runs of strings whose mismatch position cannot
 * change. Needs at most L + n(n-1)/2 ternary character comparisons.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_LCP_INSERTION_SORT_HEADER
#define STRSORT_LCP_INSERTION_SORT_HEADER

#include <strsort/sort_stats.hpp>
#include <strsort/string_set.hpp>

#include <span>

namespace strsort {

/*!
 * Sort a region of handles sharing a common prefix of length hbar and fill
 * lcp[1..n) with the absolute LCPs of adjacent strings. lcp[0] is the
 * region-undefined slot and is left as hbar; callers stitching regions
 * together overwrite it. If cache is non-null, cache[i] receives the
 * distinguishing character s_i[lcp[i]] in a final pass.
 *
 * The scan keeps the candidate's common prefix h' with the remaining search
 * range. Three cases per visited position: stored LCP below h' ends the
 * scan, equal LCP compares more characters, larger LCP shifts without any
 * character comparison.
 */
inline void
lcp_insertion_sort(const StringSet& ss, std::span<Handle> order,
                   std::size_t hbar, std::size_t* lcp,
                   unsigned char* cache = nullptr, SortStats* stats = nullptr)
{
    std::size_t n = order.size();
    for (std::size_t j = 0; j < n; ++j) {
        Handle x = order[j];
        const unsigned char* xs = ss.chars(x);
        std::size_t h = hbar;
        std::size_t i = j;
        lcp[j] = hbar; // sentinel: case 2 always fires for the rightmost string

        while (i > 0) {
            if (lcp[i] < h) {
                break; // case 1: a smaller string precedes
            }
            else if (lcp[i] == h) {
                // case 2: compare more characters against s_{i-1}
                std::size_t p = h;
                const unsigned char* ps = ss.chars(order[i - 1]);
                while (xs[h] != 0 && xs[h] == ps[h]) ++h;
                count_char_cmp(stats, h - p + 1);
                if (xs[h] >= ps[h]) {
                    lcp[i] = h; // LCP of s_{i-1} and x
                    h = p;      // LCP of x and the string shifted to i+1
                    break;
                }
            }
            // case 3 (and failed case 2): shift right, no comparison
            order[i] = order[i - 1];
            if (i + 1 < n) lcp[i + 1] = lcp[i];
            --i;
        }
        order[i] = x;
        if (i + 1 < n) lcp[i + 1] = h;
    }

    if (cache) {
        for (std::size_t i = 0; i < n; ++i)
            cache[i] = ss.at(order[i], i == 0 ? hbar : lcp[i]);
    }
}

//! convenience form returning a fresh region-local LCP array
inline LcpArray
lcp_insertion_sort(const StringSet& ss, std::span<Handle> order,
                   std::size_t hbar = 0, SortStats* stats = nullptr)
{
    LcpArray h(order.size(), 0);
    lcp_insertion_sort(ss, order, hbar, h.data(), nullptr, stats);
    if (!h.empty()) h[0] = 0;
    return h;
}

} // namespace strsort

#endif // STRSORT_LCP_INSERTION_SORT_HEADER
