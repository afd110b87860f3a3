/*******************************************************************************
 * include/strsort/oracle.hpp
 *
 * Independent reference implementations used to test and verify the sorters:
 * a naive comparison sort, pairwise LCP array construction, D/L metrics, and
 * the permutation/order/LCP verifier.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_ORACLE_HEADER
#define STRSORT_ORACLE_HEADER

#include <strsort/string_set.hpp>

#include <algorithm>
#include <optional>
#include <span>

namespace strsort {

//! thrown by lcp_array_oracle when the input order is not sorted
class NotSorted : public std::runtime_error
{
public:
    std::size_t index;

    explicit NotSorted(std::size_t i)
        : std::runtime_error("strings not in sorted order at index " +
                             std::to_string(i)),
          index(i) { }
};

//! ground-truth sort: std::sort with naive lexicographic string comparison
inline std::vector<Handle>
oracle_sort(const StringSet& ss, std::span<const Handle> order)
{
    std::vector<Handle> out(order.begin(), order.end());
    std::stable_sort(out.begin(), out.end(),
                     [&ss](Handle a, Handle b) {
                         return ss.compare(a, b) < 0;
                     });
    return out;
}

inline std::vector<Handle> oracle_sort(const StringSet& ss)
{
    return oracle_sort(ss, ss.handles());
}

//! LCP array of a sorted order built from pairwise lcp; h[0] is the
//! undefined slot and stored as 0
inline LcpArray
lcp_array_oracle(const StringSet& ss, std::span<const Handle> sorted)
{
    LcpArray h(sorted.size(), 0);
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (ss.compare(sorted[i - 1], sorted[i]) > 0) throw NotSorted(i);
        h[i] = ss.lcp(sorted[i - 1], sorted[i]);
    }
    return h;
}

//! distinguishing prefix and LCP sum of a sorted string set
struct MetricsReport
{
    std::size_t n = 0;
    std::size_t total_chars = 0;      // N
    std::size_t distinguishing = 0;   // D
    std::size_t lcp_sum = 0;          // L
    std::size_t max_lcp = 0;
    double avg_length = 0.0;          // including terminators
};

/*!
 * Compute D and L from a sorted set and its LCP array:
 * D = sum_i (max(h_i, h_{i+1}) + 1) with boundary sentinels h_0 = h_n = 0,
 * L = sum_{i>=1} h_i. The report always satisfies n + L <= D <= 2L + n.
 */
inline MetricsReport
metrics(const StringSet& ss, std::span<const Handle> sorted, const LcpArray& h)
{
    MetricsReport r;
    r.n = sorted.size();
    r.total_chars = ss.total_chars();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        std::size_t hi = (i == 0) ? 0 : h[i];
        std::size_t hnext = (i + 1 < sorted.size()) ? h[i + 1] : 0;
        r.distinguishing += std::max(hi, hnext) + 1;
        if (i > 0) {
            r.lcp_sum += h[i];
            r.max_lcp = std::max(r.max_lcp, h[i]);
        }
    }
    r.avg_length = r.n ? double(r.total_chars) / double(r.n) : 0.0;
    return r;
}

inline MetricsReport
metrics(const StringSet& ss, std::span<const Handle> sorted)
{
    return metrics(ss, sorted, lcp_array_oracle(ss, sorted));
}

//! result of verify(); passes iff failure == None
struct VerifyReport
{
    enum Kind { None, NotPermutation, OrderViolation, LcpMismatch };

    Kind failure = None;
    std::size_t index = 0;

    bool ok() const { return failure == None; }
};

/*!
 * Check that result is a permutation of the original handle multiset, that
 * adjacent strings are non-descending, and (if given) that lcp equals the
 * pairwise LCP oracle of the result. Reports the first violation.
 */
inline VerifyReport
verify(const StringSet& ss, std::span<const Handle> result,
       std::span<const Handle> original, const LcpArray* lcp = nullptr)
{
    VerifyReport r;
    if (result.size() != original.size()) {
        r.failure = VerifyReport::NotPermutation;
        r.index = std::min(result.size(), original.size());
        return r;
    }
    std::vector<Handle> a(result.begin(), result.end());
    std::vector<Handle> b(original.begin(), original.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) {
            r.failure = VerifyReport::NotPermutation;
            r.index = i;
            return r;
        }
    }
    for (std::size_t i = 1; i < result.size(); ++i) {
        if (ss.compare(result[i - 1], result[i]) > 0) {
            r.failure = VerifyReport::OrderViolation;
            r.index = i;
            return r;
        }
    }
    if (lcp) {
        if (lcp->size() != result.size()) {
            r.failure = VerifyReport::LcpMismatch;
            r.index = lcp->size();
            return r;
        }
        for (std::size_t i = 1; i < result.size(); ++i) {
            if ((*lcp)[i] != ss.lcp(result[i - 1], result[i])) {
                r.failure = VerifyReport::LcpMismatch;
                r.index = i;
                return r;
            }
        }
    }
    return r;
}

} // namespace strsort

#endif // STRSORT_ORACLE_HEADER
