/*******************************************************************************
 * include/strsort/multikey_quicksort.hpp
 *
 * Multikey quicksort: ternary partition of the region by a single pivot
 * character at the common prefix depth. The equal partition has common
 * prefix depth+1 and is only recursed while the pivot character is not the
 * terminator.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_MULTIKEY_QUICKSORT_HEADER
#define STRSORT_MULTIKEY_QUICKSORT_HEADER

#include <strsort/insertion_sort.hpp>
#include <strsort/string_set.hpp>

#include <algorithm>
#include <span>

namespace strsort {

namespace detail {

//! index of the median of three values; ties prefer the middle argument
template <typename T>
inline unsigned med3_index(T a, T b, T c)
{
    if (a == b || b == c) return 1;
    if (a == c) return 0;
    if (a < b) return b < c ? 1 : (a < c ? 2 : 0);
    return b > c ? 1 : (a > c ? 2 : 0);
}

} // namespace detail

inline void
multikey_quicksort(const StringSet& ss, std::span<Handle> order,
                   std::size_t depth, std::size_t inssort_threshold = 32)
{
    while (true) {
        std::size_t n = order.size();
        if (n < inssort_threshold) {
            insertion_sort(ss, order, depth);
            return;
        }

        // pseudo-median of first/middle/last characters at this depth
        unsigned char c0 = ss.at(order[0], depth);
        unsigned char cm = ss.at(order[n / 2], depth);
        unsigned char cl = ss.at(order[n - 1], depth);
        unsigned m = detail::med3_index(c0, cm, cl);
        std::size_t pidx = m == 0 ? 0 : (m == 1 ? n / 2 : n - 1);
        std::swap(order[0], order[pidx]);
        int x = ss.at(order[0], depth);

        // ternary partition, equal elements swapped to both ends
        std::size_t a = 1, b = 1, c = n - 1, d = n - 1;
        while (true) {
            int r;
            while (b <= c && (r = int(ss.at(order[b], depth)) - x) <= 0) {
                if (r == 0) std::swap(order[a++], order[b]);
                ++b;
            }
            while (b <= c && (r = int(ss.at(order[c], depth)) - x) >= 0) {
                if (r == 0) std::swap(order[c], order[d--]);
                --c;
            }
            if (b > c) break;
            std::swap(order[b++], order[c--]);
        }

        // move the equal elements from the ends to the middle
        std::size_t p = std::min(a, b - a);
        std::swap_ranges(order.begin(), order.begin() + p,
                         order.begin() + (b - p));
        std::size_t q = std::min(d - c, n - 1 - d);
        std::swap_ranges(order.begin() + b, order.begin() + b + q,
                         order.begin() + (n - q));

        std::size_t num_lt = b - a;
        std::size_t num_gt = d - c;
        std::size_t num_eq = n - num_lt - num_gt;

        std::span<Handle> lt = order.subspan(0, num_lt);
        std::span<Handle> eq = order.subspan(num_lt, num_eq);
        std::span<Handle> gt = order.subspan(num_lt + num_eq, num_gt);

        // recurse into the two smaller parts, loop on the largest to keep
        // the call stack shallow; the equal part is done when x is the
        // terminator
        bool eq_recurse = (x != 0);
        std::span<Handle> parts[3] = { lt, eq, gt };
        std::size_t dep[3] = { depth, depth + 1, depth };
        bool run[3] = { num_lt > 1, eq_recurse && num_eq > 1, num_gt > 1 };

        unsigned largest = 0;
        for (unsigned i = 1; i < 3; ++i)
            if (parts[i].size() > parts[largest].size()) largest = i;

        for (unsigned i = 0; i < 3; ++i)
            if (i != largest && run[i])
                multikey_quicksort(ss, parts[i], dep[i], inssort_threshold);

        if (!run[largest]) return;
        order = parts[largest];
        depth = dep[largest];
    }
}

} // namespace strsort

#endif // STRSORT_MULTIKEY_QUICKSORT_HEADER
