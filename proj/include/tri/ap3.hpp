#pragma once

// Sets of integers in [1, n] free of nontrivial 3-term arithmetic
// progressions. "Nontrivial" means common difference d >= 1; the trivial
// progression a, a, a is always allowed (see docs/notes.md).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "tri/int128.hpp"

namespace tri {

struct Ap3Set {
    u64 n = 0;                   // universe bound, elements live in [1, n]
    std::vector<u64> elements;   // strictly increasing
    bool verified = false;       // set once a freeness check has passed
};

inline void check_well_formed(const Ap3Set& s) {
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        u64 e = s.elements[i];
        if (e < 1 || e > s.n) throw std::invalid_argument("element outside [1, n]");
        if (i > 0 && s.elements[i - 1] >= e)
            throw std::invalid_argument("elements not strictly increasing");
    }
}

// Returns a progression (a, a+d, a+2d), d >= 1, contained in the set, or
// nullopt if the set is 3AP-free. O(k^2) with a membership bitmap.
inline std::optional<std::array<u64, 3>> find_3ap(const Ap3Set& s) {
    check_well_formed(s);
    std::vector<char> in(s.n + 1, 0);
    for (u64 e : s.elements) in[e] = 1;
    for (std::size_t i = 0; i < s.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < s.elements.size(); ++j) {
            u64 a = s.elements[i], b = s.elements[j];
            u64 c = 2 * b - a;  // a < b so c > b, no wrap for n in u64/2 range
            if (c <= s.n && in[c]) return std::array<u64, 3>{a, b, c};
        }
    }
    return std::nullopt;
}

inline bool verify_3ap_free(Ap3Set& s) {
    if (find_3ap(s)) return false;
    s.verified = true;
    return true;
}

inline bool is_3ap_free(const Ap3Set& s) {
    Ap3Set copy = s;
    return verify_3ap_free(copy);
}

namespace detail {

// One cell of the sphere-construction grid: integers in [0, base^dim)
// whose base-(2d+1) digit vectors have all digits <= d and squared norm r.
// Digits below half the base rule out carries, and a fixed Euclidean norm
// rules out nontrivial progressions among the digit vectors.
inline std::vector<u64> best_sphere_set(u64 n, u64 d, unsigned dim) {
    u64 base = 2 * d + 1;
    std::vector<u64> pow(dim, 1);
    for (unsigned i = 1; i < dim; ++i) pow[i] = pow[i - 1] * base;

    u64 max_norm = dim * d * d;
    std::vector<std::vector<u64>> bucket(max_norm + 1);
    std::vector<u64> digit(dim, 0);
    while (true) {
        u64 value = 0, norm = 0;
        for (unsigned i = 0; i < dim; ++i) {
            value += digit[i] * pow[i];
            norm += digit[i] * digit[i];
        }
        if (value + 1 <= n) bucket[norm].push_back(value + 1);
        unsigned pos = 0;
        while (pos < dim && digit[pos] == d) digit[pos++] = 0;
        if (pos == dim) break;
        ++digit[pos];
    }
    std::size_t best = 0;
    for (std::size_t r = 1; r <= max_norm; ++r)  // r=0 is the all-zero vector only
        if (bucket[r].size() > bucket[best].size()) best = r;
    return bucket[best];
}

}  // namespace detail

// Behrend-style construction: scan a small grid of dimensions and digit
// bounds, keep the largest sphere set that fits in [1, n]. Output is
// re-verified before returning.
inline Ap3Set behrend_construct(u64 n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    Ap3Set best{n, {1}, false};
    for (unsigned dim = 2; dim <= 40; ++dim) {
        bool any = false;
        for (u64 d = 1;; ++d) {
            u64 base = 2 * d + 1;
            // reject if base^dim > n
            u64 cap = 1;
            bool fits = true;
            for (unsigned i = 0; i < dim; ++i) {
                if (cap > n / base) { fits = false; break; }
                cap *= base;
            }
            if (!fits) break;
            any = true;
            std::vector<u64> cand = detail::best_sphere_set(n, d, dim);
            if (cand.size() > best.elements.size()) {
                std::sort(cand.begin(), cand.end());
                best.elements = std::move(cand);
            }
        }
        if (!any) break;
    }
    if (!verify_3ap_free(best))
        throw std::logic_error("sphere construction produced a 3AP");  // unreachable
    return best;
}

// Floor the construction is expected to meet: ceil(n / 2^sqrt(8 log2 n)).
inline u64 behrend_size_floor(u64 n) {
    if (n < 2) return 1;
    double log2n = std::log2(double(n));
    double denom = std::pow(2.0, std::sqrt(8.0 * log2n));
    return u64(std::ceil(double(n) / denom));
}

// Exhaustive maximum 3AP-free subset of [1, n]. Branch and bound over
// elements in increasing order; guarded at n <= 30.
inline Ap3Set exact_max_ap3(u64 n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n > 30) throw std::invalid_argument("exact_max_ap3 guard: n > 30");
    std::vector<char> chosen(n + 1, 0);
    std::vector<u64> cur, best;
    auto creates_ap = [&](u64 e) {
        // e is the largest element so far; an AP ending at e has midpoint b
        // with 2b - e = a chosen.
        for (u64 b : cur)
            if (2 * b > e && 2 * b - e < b && chosen[2 * b - e]) return true;
        return false;
    };
    // recursive lambda via explicit stack-free recursion
    auto dfs = [&](auto&& self, u64 next) -> void {
        if (cur.size() + (n - next + 1) <= best.size()) return;
        if (next > n) {
            if (cur.size() > best.size()) best = cur;
            return;
        }
        if (!creates_ap(next)) {
            chosen[next] = 1;
            cur.push_back(next);
            self(self, next + 1);
            cur.pop_back();
            chosen[next] = 0;
        }
        self(self, next + 1);
    };
    dfs(dfs, 1);
    Ap3Set out{n, best, false};
    verify_3ap_free(out);
    return out;
}

// First-fit scan keeping every element that closes no progression.
inline Ap3Set greedy_ap3(u64 n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::vector<char> in(n + 1, 0);
    std::vector<u64> kept;
    for (u64 e = 1; e <= n; ++e) {
        bool bad = false;
        for (u64 b : kept) {
            if (2 * b > e && 2 * b - e < b && in[2 * b - e]) { bad = true; break; }
        }
        if (!bad) {
            in[e] = 1;
            kept.push_back(e);
        }
    }
    Ap3Set out{n, kept, false};
    verify_3ap_free(out);
    return out;
}

// File format: line 1 "n k", line 2 the k elements in increasing order.
inline void write_ap3(std::ostream& os, const Ap3Set& s) {
    os << s.n << ' ' << s.elements.size() << '\n';
    for (std::size_t i = 0; i < s.elements.size(); ++i)
        os << s.elements[i] << (i + 1 == s.elements.size() ? '\n' : ' ');
    if (s.elements.empty()) os << '\n';
}

inline Ap3Set read_ap3(std::istream& is) {
    Ap3Set s;
    std::size_t k = 0;
    if (!(is >> s.n >> k)) throw std::runtime_error("bad set file header");
    s.elements.resize(k);
    for (auto& e : s.elements)
        if (!(is >> e)) throw std::runtime_error("truncated set file");
    check_well_formed(s);
    return s;
}

inline void write_ap3_file(const std::string& path, const Ap3Set& s) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_ap3(f, s);
}

inline Ap3Set read_ap3_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_ap3(f);
}

}  // namespace tri
