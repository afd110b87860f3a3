/*******************************************************************************
 * include/strsort/sort_ptr.hpp
 *
 * A sortable region: a slice of the order array, the matching slice of a
 * shadow array for out-of-place distribution, and optional LCP/cache output
 * slices. The active side alternates between origin and shadow across
 * distribution levels; copy_back() materializes results in the origin array.
 * LCP and cache slices always refer to origin positions.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_SORT_PTR_HEADER
#define STRSORT_SORT_PTR_HEADER

#include <strsort/string_set.hpp>

#include <algorithm>
#include <cstddef>

namespace strsort {

class SortPtr
{
public:
    SortPtr() = default;

    SortPtr(Handle* origin, Handle* shadow, std::size_t size,
            std::size_t* lcp = nullptr, unsigned char* cache = nullptr,
            bool flipped = false)
        : origin_(origin), shadow_(shadow), size_(size),
          lcp_(lcp), cache_(cache), flipped_(flipped) { }

    std::size_t size() const { return size_; }
    bool flipped() const { return flipped_; }

    Handle* active() const { return flipped_ ? shadow_ : origin_; }
    Handle* passive() const { return flipped_ ? origin_ : shadow_; }
    Handle* origin() const { return origin_; }

    bool with_lcp() const { return lcp_ != nullptr; }
    bool with_cache() const { return cache_ != nullptr; }

    //! sub-region on the same side
    SortPtr sub(std::size_t off, std::size_t sz) const
    {
        return SortPtr(origin_ + off, shadow_ + off, sz,
                       lcp_ ? lcp_ + off : nullptr,
                       cache_ ? cache_ + off : nullptr, flipped_);
    }

    //! sub-region with active and passive side exchanged
    SortPtr flip(std::size_t off, std::size_t sz) const
    {
        return SortPtr(origin_ + off, shadow_ + off, sz,
                       lcp_ ? lcp_ + off : nullptr,
                       cache_ ? cache_ + off : nullptr, !flipped_);
    }

    //! ensure the region's handles are in the origin array
    SortPtr copy_back() const
    {
        if (flipped_)
            std::copy(shadow_, shadow_ + size_, origin_);
        return SortPtr(origin_, shadow_, size_, lcp_, cache_, false);
    }

    void set_lcp(std::size_t i, std::size_t v) const
    {
        if (lcp_) lcp_[i] = v;
    }

    void set_cache(std::size_t i, unsigned char c) const
    {
        if (cache_) cache_[i] = c;
    }

    //! mark all strings of the region as equal from depth v on: entries
    //! 1..size get LCP v and a terminator distinguishing character
    void fill_lcp(std::size_t v) const
    {
        if (size_ < 2) return;
        if (lcp_)
            std::fill(lcp_ + 1, lcp_ + size_, v);
        if (cache_)
            std::fill(cache_ + 1, cache_ + size_, 0);
    }

private:
    Handle* origin_ = nullptr;
    Handle* shadow_ = nullptr;
    std::size_t size_ = 0;
    std::size_t* lcp_ = nullptr;
    unsigned char* cache_ = nullptr;
    bool flipped_ = false;
};

} // namespace strsort

#endif // STRSORT_SORT_PTR_HEADER
