/*******************************************************************************
 * include/strsort/insertion_sort.hpp
 *
 * String insertion sort, the base case sorter for small string sets. Strings
 * are compared character-wise starting at the known common prefix.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_INSERTION_SORT_HEADER
#define STRSORT_INSERTION_SORT_HEADER

#include <strsort/string_set.hpp>

#include <span>

namespace strsort {

//! sort a region of handles whose strings share a prefix of length depth.
//! Stable: equal strings keep their relative order.
inline void
insertion_sort(const StringSet& ss, std::span<Handle> order, std::size_t depth)
{
    for (std::size_t i = 1; i < order.size(); ++i) {
        Handle x = order[i];
        const unsigned char* xs = ss.chars(x) + depth;
        std::size_t j = i;
        while (j > 0) {
            const unsigned char* ps = ss.chars(order[j - 1]) + depth;
            std::size_t p = 0;
            while (ps[p] != 0 && ps[p] == xs[p]) ++p;
            if (ps[p] <= xs[p]) break;
            order[j] = order[j - 1];
            --j;
        }
        order[j] = x;
    }
}

} // namespace strsort

#endif // STRSORT_INSERTION_SORT_HEADER
