/*******************************************************************************
 * include/strsort/caching_mkqs.hpp
 *
 * Caching multikey quicksort: ternary partitioning on whole 8-character key
 * words kept in a cache array aligned with the region. Cached words are
 * refetched only for the equal partition, so the sorter needs at most
 * floor(D/8) + n fetches of string characters in total.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_CACHING_MKQS_HEADER
#define STRSORT_CACHING_MKQS_HEADER

#include <strsort/key_word.hpp>
#include <strsort/multikey_quicksort.hpp>
#include <strsort/sort_ptr.hpp>
#include <strsort/sort_stats.hpp>
#include <strsort/string_set.hpp>

#include <cassert>
#include <limits>
#include <vector>

namespace strsort {

namespace detail {

//! no-op work sharing hook for purely sequential sorting
struct NoSharing
{
    bool wants_work() const { return false; }
    void take(const SortPtr&, std::size_t) { }
};

/*!
 * Explicit-stack driver of caching multikey quicksort over a SortPtr region.
 * The key cache is aligned with region positions and permuted alongside the
 * active handle slice. With an LCP-emitting SortPtr the partition tracks the
 * extreme keys of the < and > parts, so bucket-boundary LCPs come from key
 * XOR without further string access.
 *
 * The Share hook may steal the unprocessed children of the bottom stack
 * level; their boundary fills are then deferred until the owner calls
 * replay_pending_fills() (after the stolen children completed).
 */
class MkqsCacheEngine
{
public:
    struct Step
    {
        SortPtr ptr;
        std::uint64_t* keys;
        std::size_t depth;
        std::size_t num_lt = 0, num_eq = 0, num_gt = 0;
        std::uint64_t pivot = 0;
        std::uint64_t max_lt = 0;
        std::uint64_t min_gt = std::numeric_limits<std::uint64_t>::max();
        bool eq_recurse = false;
        unsigned idx = 0;
    };

    MkqsCacheEngine(const StringSet& ss, std::size_t inssort_threshold,
                    SortStats* stats)
        : ss_(ss), inssort_threshold_(inssort_threshold), stats_(stats) { }

    template <typename Share>
    void sort(const SortPtr& ptr, std::uint64_t* keys, std::size_t depth,
              bool keys_dirty, Share&& share)
    {
        if (ptr.size() < inssort_threshold_) {
            base_case(ptr, keys, depth, keys_dirty);
            return;
        }

        stack_.push_back(make_step(ptr, keys, depth, keys_dirty));

        while (stack_.size() > pop_front_) {
            // copy the child description first: pushing invalidates s
            Step& s = stack_.back();
            unsigned idx = s.idx++;

            if (idx == 0 && s.num_lt > 0) {
                SortPtr sub = s.ptr.sub(0, s.num_lt);
                std::uint64_t* k = s.keys;
                std::size_t d = s.depth;
                if (sub.size() < inssort_threshold_)
                    base_case(sub, k, d, false);
                else
                    stack_.push_back(make_step(sub, k, d, false));
            }
            else if (idx == 1) {
                SortPtr sub = s.ptr.sub(s.num_lt, s.num_eq);
                std::uint64_t* k = s.keys + s.num_lt;
                std::size_t d = s.depth;
                std::uint64_t pivot = s.pivot;
                if (!s.eq_recurse) {
                    SortPtr spb = sub.copy_back();
                    spb.fill_lcp(d + key_terminated_depth(pivot));
                }
                else if (sub.size() < 2) {
                    sub.copy_back();
                }
                else if (sub.size() < inssort_threshold_) {
                    refresh_keys(sub, k, d + kKeyChars);
                    base_case(sub, k, d + kKeyChars, false);
                }
                else {
                    refresh_keys(sub, k, d + kKeyChars);
                    stack_.push_back(make_step(sub, k, d + kKeyChars, false));
                }
            }
            else if (idx == 2 && s.num_gt > 0) {
                SortPtr sub = s.ptr.sub(s.num_lt + s.num_eq, s.num_gt);
                std::uint64_t* k = s.keys + s.num_lt + s.num_eq;
                std::size_t d = s.depth;
                if (sub.size() < inssort_threshold_)
                    base_case(sub, k, d, false);
                else
                    stack_.push_back(make_step(sub, k, d, false));
            }
            else if (idx >= 3) {
                fill_boundaries(stack_.back());
                stack_.pop_back();
            }

            if (share.wants_work())
                free_bottom_level(share);
        }
    }

    //! run the deferred boundary fills of levels given away by sharing
    void replay_pending_fills()
    {
        while (pop_front_ > 0)
            fill_boundaries(stack_[--pop_front_]);
        stack_.clear();
    }

    bool has_pending_fills() const { return pop_front_ > 0; }

    //! hand the unprocessed children of the bottom stack level to the share
    //! hook; the level's boundary fill is deferred to replay_pending_fills()
    template <typename Share>
    void free_bottom_level(Share& share)
    {
        if (stack_.size() <= pop_front_) return;
        Step& s = stack_[pop_front_];
        while (s.idx < 3) {
            unsigned idx = s.idx++;
            if (idx == 0 && s.num_lt > 0) {
                share.take(s.ptr.sub(0, s.num_lt), s.depth);
            }
            else if (idx == 1) {
                SortPtr sub = s.ptr.sub(s.num_lt, s.num_eq);
                if (!s.eq_recurse) {
                    SortPtr spb = sub.copy_back();
                    spb.fill_lcp(s.depth + key_terminated_depth(s.pivot));
                }
                else {
                    share.take(sub, s.depth + kKeyChars);
                }
            }
            else if (idx == 2 && s.num_gt > 0) {
                share.take(s.ptr.sub(s.num_lt + s.num_eq, s.num_gt), s.depth);
            }
        }
        ++pop_front_;
    }

private:
    const StringSet& ss_;
    std::size_t inssort_threshold_;
    SortStats* stats_;
    std::vector<Step> stack_;
    std::size_t pop_front_ = 0;

    void refresh_keys(const SortPtr& ptr, std::uint64_t* keys,
                      std::size_t depth)
    {
        Handle* strs = ptr.active();
        for (std::size_t i = 0; i < ptr.size(); ++i)
            keys[i] = ss_.key8(strs[i], depth);
        count_string_access(stats_, ptr.size());
    }

    Step make_step(const SortPtr& ptr, std::uint64_t* keys, std::size_t depth,
                   bool keys_dirty)
    {
        Step s;
        s.ptr = ptr;
        s.keys = keys;
        s.depth = depth;
        if (keys_dirty) refresh_keys(ptr, keys, depth);

        std::size_t n = ptr.size();
        Handle* strs = ptr.active();

        unsigned m = med3_index(keys[0], keys[n / 2], keys[n - 1]);
        std::size_t pidx = m == 0 ? 0 : (m == 1 ? n / 2 : n - 1);
        std::swap(strs[0], strs[pidx]);
        std::swap(keys[0], keys[pidx]);
        std::uint64_t pivot = s.pivot = keys[0];

        // layout: [0,leq) eq | [leq,llt) lt | [llt..rgt] ? | (rgt,req] gt | (req,n) eq
        std::size_t leq = 1, llt = 1, rgt = n - 1, req = n - 1;
        while (true) {
            while (llt <= rgt) {
                if (keys[llt] > pivot) {
                    s.min_gt = std::min(s.min_gt, keys[llt]);
                    break;
                }
                if (keys[llt] == pivot) {
                    std::swap(strs[leq], strs[llt]);
                    std::swap(keys[leq], keys[llt]);
                    ++leq;
                }
                else {
                    s.max_lt = std::max(s.max_lt, keys[llt]);
                }
                ++llt;
            }
            while (llt <= rgt) {
                if (keys[rgt] < pivot) {
                    s.max_lt = std::max(s.max_lt, keys[rgt]);
                    break;
                }
                if (keys[rgt] == pivot) {
                    std::swap(strs[req], strs[rgt]);
                    std::swap(keys[req], keys[rgt]);
                    --req;
                }
                else {
                    s.min_gt = std::min(s.min_gt, keys[rgt]);
                }
                --rgt;
            }
            if (llt > rgt) break;
            std::swap(strs[llt], strs[rgt]);
            std::swap(keys[llt], keys[rgt]);
            ++llt;
            --rgt;
        }

        std::size_t num_leq = leq, num_req = n - 1 - req;
        s.num_eq = num_leq + num_req;
        s.num_lt = llt - leq;
        s.num_gt = req - rgt;
        assert(s.num_eq > 0);
        assert(s.num_lt + s.num_eq + s.num_gt == n);

        std::size_t size1 = std::min(num_leq, s.num_lt);
        std::swap_ranges(strs, strs + size1, strs + llt - size1);
        std::swap_ranges(keys, keys + size1, keys + llt - size1);
        std::size_t size2 = std::min(num_req, s.num_gt);
        std::swap_ranges(strs + llt, strs + llt + size2, strs + n - size2);
        std::swap_ranges(keys + llt, keys + llt + size2, keys + n - size2);

        s.eq_recurse = !key_has_terminator(pivot);
        return s;
    }

    void fill_boundaries(const Step& s)
    {
        if (!s.ptr.with_lcp()) return;
        if (s.num_lt > 0) {
            unsigned r = key_lcp_bytes(s.max_lt, s.pivot);
            s.ptr.set_lcp(s.num_lt, s.depth + r);
            s.ptr.set_cache(s.num_lt, key_char_at(s.pivot, r));
        }
        if (s.num_gt > 0) {
            unsigned r = key_lcp_bytes(s.pivot, s.min_gt);
            s.ptr.set_lcp(s.num_lt + s.num_eq, s.depth + r);
            s.ptr.set_cache(s.num_lt + s.num_eq, key_char_at(s.min_gt, r));
        }
    }

    //! stable insertion sort by cached words, then handle runs of equal
    //! words: refetch groups of two or more at depth+8 and recurse, or mark
    //! them fully equal when the word holds the terminator
    void insertion_sort_by_cache(const SortPtr& ptr, std::uint64_t* keys,
                                 std::size_t depth)
    {
        std::size_t n = ptr.size();
        if (n < 2) return;
        Handle* strs = ptr.origin();

        for (std::size_t i = 1; i < n; ++i) {
            Handle h = strs[i];
            std::uint64_t k = keys[i];
            std::size_t j = i;
            while (j > 0 && keys[j - 1] > k) {
                strs[j] = strs[j - 1];
                keys[j] = keys[j - 1];
                --j;
            }
            strs[j] = h;
            keys[j] = k;
        }

        std::size_t start = 0;
        for (std::size_t i = 1; i <= n; ++i) {
            if (i < n && keys[i] == keys[start]) continue;
            if (start > 0) {
                unsigned r = key_lcp_bytes(keys[start - 1], keys[start]);
                ptr.set_lcp(start, depth + r);
                ptr.set_cache(start, key_char_at(keys[start], r));
            }
            std::size_t len = i - start;
            if (len > 1) {
                SortPtr sub = ptr.sub(start, len);
                if (key_has_terminator(keys[start])) {
                    sub.fill_lcp(depth + key_terminated_depth(keys[start]));
                }
                else {
                    refresh_keys(sub, keys + start, depth + kKeyChars);
                    insertion_sort_by_cache(sub, keys + start,
                                            depth + kKeyChars);
                }
            }
            start = i;
        }
    }

    void base_case(const SortPtr& ptr, std::uint64_t* keys, std::size_t depth,
                   bool keys_dirty)
    {
        SortPtr p = ptr.copy_back();
        if (p.size() < 2) {
            if (keys_dirty && p.size() == 1)
                refresh_keys(p, keys, depth);
            return;
        }
        if (keys_dirty) refresh_keys(p, keys, depth);
        insertion_sort_by_cache(p, keys, depth);
    }
};

} // namespace detail

/*!
 * Sort a handle region by caching multikey quicksort. With stats enabled,
 * string_access counts every 8-character fetch; the total is bounded by
 * floor(D/8) + n.
 */
inline void
caching_mkqs(const StringSet& ss, std::span<Handle> order,
             std::size_t depth = 0, SortStats* stats = nullptr,
             std::size_t inssort_threshold = 32)
{
    if (order.empty()) return;
    std::vector<std::uint64_t> keys(order.size());
    if (stats) stats->note_aux_peak(keys.size() * sizeof(std::uint64_t));
    SortPtr ptr(order.data(), order.data(), order.size());
    detail::MkqsCacheEngine engine(ss, inssort_threshold, stats);
    engine.sort(ptr, keys.data(), depth, true, detail::NoSharing());
}

//! caching multikey quicksort that additionally emits the region's LCP
//! array (absolute depths) and optionally the distinguishing characters
inline void
caching_mkqs_lcp(const StringSet& ss, std::span<Handle> order,
                 std::size_t depth, std::size_t* lcp,
                 unsigned char* cache = nullptr, SortStats* stats = nullptr,
                 std::size_t inssort_threshold = 32)
{
    if (order.empty()) return;
    std::vector<std::uint64_t> keys(order.size());
    if (stats) stats->note_aux_peak(keys.size() * sizeof(std::uint64_t));
    SortPtr ptr(order.data(), order.data(), order.size(), lcp, cache);
    detail::MkqsCacheEngine engine(ss, inssort_threshold, stats);
    engine.sort(ptr, keys.data(), depth, true, detail::NoSharing());
    lcp[0] = depth;
    if (cache) cache[0] = ss.at(order[0], depth);
}

} // namespace strsort

#endif // STRSORT_CACHING_MKQS_HEADER
