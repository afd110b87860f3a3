/*******************************************************************************
 * include/strsort/generators.hpp
 *
 * Deterministic input generators for benchmarks and tests.
 *
 * Part of strsort, a parallel string sorting library.
 ******************************************************************************/

#ifndef STRSORT_GENERATORS_HEADER
#define STRSORT_GENERATORS_HEADER

#include <strsort/string_set.hpp>

#include <random>

namespace strsort {

//! random strings of length [0..20) over the printable ASCII alphabet
//! [33..127), lengths and characters uniform, deterministic per seed
inline StringSet gen_random(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::string> strs;
    strs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t len = rng() % 20;
        std::string s(len, 0);
        for (std::size_t j = 0; j < len; ++j)
            s[j] = char(33 + rng() % 94);
        strs.push_back(std::move(s));
    }
    return StringSet::from_strings(strs);
}

//! like gen_random but over the two-character alphabet {'0','1'}
inline StringSet gen_random2(std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::string> strs;
    strs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t len = rng() % 20;
        std::string s(len, 0);
        for (std::size_t j = 0; j < len; ++j)
            s[j] = char('0' + rng() % 2);
        strs.push_back(std::move(s));
    }
    return StringSet::from_strings(strs);
}

//! synthetic URL-like strings with long shared prefixes. This is a local
//! test fixture, not a reproduction of any published corpus.
inline StringSet gen_url_like(std::size_t n, std::uint64_t seed)
{
    static const char* hosts[] = {
        "http://www.example.org/", "http://www.example.org/news/",
        "http://mirror.example.net/pub/", "https://files.example.com/a/b/",
    };
    std::mt19937_64 rng(seed);
    std::vector<std::string> strs;
    strs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::string s = hosts[rng() % 4];
        std::size_t segments = 1 + rng() % 3;
        for (std::size_t k = 0; k < segments; ++k) {
            if (k > 0) s += '/';
            std::size_t len = 3 + rng() % 8;
            for (std::size_t j = 0; j < len; ++j)
                s += char('a' + rng() % 26);
        }
        strs.push_back(std::move(s));
    }
    return StringSet::from_strings(strs);
}

} // namespace strsort

#endif // STRSORT_GENERATORS_HEADER
