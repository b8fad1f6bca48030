#include "hnt/hamming.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <sstream>

namespace hnt {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in checked_mul");
    return r;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
    return r;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i) {
        r = checked_mul(r, static_cast<std::uint64_t>(n - i));
        r /= static_cast<std::uint64_t>(i + 1);
    }
    return r;
}

namespace {

// Returns (p, d) with q = p^d, or throws.
std::pair<int, int> factor_prime_power(int q) {
    for (int p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        int d = 0;
        int r = q;
        while (r % p == 0) {
            r /= p;
            ++d;
        }
        if (r != 1)
            throw std::invalid_argument("alphabet size " + std::to_string(q) +
                                        " is not a prime power");
        return {p, d};
    }
    throw std::invalid_argument("alphabet size must be >= 2");
}

}  // namespace

HammingScheme::HammingScheme(int m_, int q_) : m(m_), q(q_) {
    if (m < 2) throw std::invalid_argument("entry count m must be >= 2");
    if (q < 2) throw std::invalid_argument("alphabet size q must be >= 2");
    std::tie(p, d) = factor_prime_power(q);
}

Vertex::Vertex(HammingScheme scheme, std::vector<std::uint8_t> symbols)
    : scheme_(scheme), symbols_(std::move(symbols)) {
    if (static_cast<int>(symbols_.size()) != scheme_.m)
        throw std::invalid_argument("vertex length does not match scheme");
    for (std::uint8_t s : symbols_)
        if (s >= scheme_.q)
            throw std::invalid_argument("vertex symbol out of range");
}

Vertex Vertex::zero(const HammingScheme& s) {
    return Vertex(s, std::vector<std::uint8_t>(static_cast<std::size_t>(s.m), 0));
}

Vertex Vertex::constant(const HammingScheme& s, int symbol) {
    if (symbol < 0 || symbol >= s.q) throw std::invalid_argument("symbol out of range");
    return Vertex(s, std::vector<std::uint8_t>(static_cast<std::size_t>(s.m),
                                               static_cast<std::uint8_t>(symbol)));
}

Vertex Vertex::from_ints(const HammingScheme& s, const std::vector<int>& symbols) {
    std::vector<std::uint8_t> v;
    v.reserve(symbols.size());
    for (int x : symbols) {
        if (x < 0 || x > std::numeric_limits<std::uint8_t>::max())
            throw std::invalid_argument("vertex symbol out of range");
        v.push_back(static_cast<std::uint8_t>(x));
    }
    return Vertex(s, std::move(v));
}

Vertex Vertex::from_rank(const HammingScheme& s, std::uint64_t rank) {
    std::vector<std::uint8_t> v(static_cast<std::size_t>(s.m));
    for (int i = s.m - 1; i >= 0; --i) {
        v[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(rank % s.q);
        rank /= s.q;
    }
    if (rank != 0) throw std::invalid_argument("rank exceeds q^m");
    return Vertex(s, std::move(v));
}

int Vertex::weight() const {
    int w = 0;
    for (std::uint8_t s : symbols_) w += (s != 0);
    return w;
}

std::vector<int> Vertex::support() const {
    std::vector<int> out;
    for (int i = 0; i < scheme_.m; ++i)
        if (symbols_[static_cast<std::size_t>(i)] != 0) out.push_back(i);
    return out;
}

std::uint64_t Vertex::rank() const {
    std::uint64_t r = 0;
    for (std::uint8_t s : symbols_) r = r * scheme_.q + s;
    return r;
}

std::string Vertex::to_string() const {
    std::ostringstream os;
    for (int i = 0; i < scheme_.m; ++i) {
        if (i) os << ' ';
        os << static_cast<int>(symbols_[static_cast<std::size_t>(i)]);
    }
    return os.str();
}

bool operator<(const Vertex& a, const Vertex& b) {
    if (!(a.scheme_ == b.scheme_))
        throw std::invalid_argument("cannot order vertices from different schemes");
    return a.symbols_ < b.symbols_;
}

int distance(const Vertex& a, const Vertex& b) {
    if (!(a.scheme() == b.scheme()))
        throw std::invalid_argument("distance requires a common scheme");
    if (a.scheme().q == 2)
        return std::popcount(a.rank() ^ b.rank());
    int dist = 0;
    for (int i = 0; i < a.size(); ++i) dist += (a[i] != b[i]);
    return dist;
}

std::vector<int> support_diff(const Vertex& a, const Vertex& b) {
    if (!(a.scheme() == b.scheme()))
        throw std::invalid_argument("support_diff requires a common scheme");
    std::vector<int> out;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) out.push_back(i);
    return out;
}

std::uint64_t sphere_size(const HammingScheme& s, int radius) {
    if (radius < 0 || radius > s.m) throw std::invalid_argument("sphere radius out of range");
    return checked_mul(binomial(s.m, radius),
                       checked_pow(static_cast<std::uint64_t>(s.q - 1), radius));
}

void for_each_in_sphere(const Vertex& centre, int radius,
                        const std::function<void(const Vertex&)>& fn,
                        std::uint64_t budget) {
    const HammingScheme& s = centre.scheme();
    if (radius < 0 || radius > s.m) throw std::invalid_argument("sphere radius out of range");
    if (sphere_size(s, radius) > budget)
        throw budget_error("sphere enumeration exceeds budget");
    if (radius == 0) {
        fn(centre);
        return;
    }
    // Support subsets in lexicographic order; substituted symbols by odometer.
    std::vector<int> pos(static_cast<std::size_t>(radius));
    for (int i = 0; i < radius; ++i) pos[static_cast<std::size_t>(i)] = i;
    std::vector<std::uint8_t> work = centre.symbols();
    for (;;) {
        std::vector<int> delta(static_cast<std::size_t>(radius), 1);
        for (;;) {
            for (int i = 0; i < radius; ++i) {
                int e = pos[static_cast<std::size_t>(i)];
                int sub = (centre[e] + delta[static_cast<std::size_t>(i)]) % s.q;
                work[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>(sub);
            }
            fn(Vertex(s, work));
            int j = radius - 1;
            while (j >= 0 && delta[static_cast<std::size_t>(j)] == s.q - 1) {
                delta[static_cast<std::size_t>(j)] = 1;
                --j;
            }
            if (j < 0) break;
            ++delta[static_cast<std::size_t>(j)];
        }
        for (int i = 0; i < radius; ++i)
            work[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] =
                static_cast<std::uint8_t>(centre[pos[static_cast<std::size_t>(i)]]);
        int j = radius - 1;
        while (j >= 0 && pos[static_cast<std::size_t>(j)] == s.m - radius + j) --j;
        if (j < 0) break;
        ++pos[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < radius; ++i)
            pos[static_cast<std::size_t>(i)] = pos[static_cast<std::size_t>(i - 1)] + 1;
    }
}

std::vector<Vertex> sphere(const Vertex& centre, int radius, std::uint64_t budget) {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(sphere_size(centre.scheme(), radius)));
    for_each_in_sphere(centre, radius, [&](const Vertex& v) { out.push_back(v); }, budget);
    return out;
}

Vertex project(const Vertex& v, std::span<const int> entries) {
    const HammingScheme& s = v.scheme();
    if (entries.size() < 2)
        throw std::invalid_argument("projection needs at least two entries (H(k,q) has k >= 2)");
    std::vector<bool> seen(static_cast<std::size_t>(s.m), false);
    std::vector<std::uint8_t> out;
    out.reserve(entries.size());
    for (int e : entries) {
        if (e < 0 || e >= s.m) throw std::invalid_argument("projection entry out of range");
        if (seen[static_cast<std::size_t>(e)])
            throw std::invalid_argument("projection entries must be distinct");
        seen[static_cast<std::size_t>(e)] = true;
        out.push_back(static_cast<std::uint8_t>(v[e]));
    }
    HammingScheme target(static_cast<int>(entries.size()), s.q);
    return Vertex(target, std::move(out));
}

void enumerate_vertices(const HammingScheme& s,
                        const std::function<void(const Vertex&)>& fn,
                        std::uint64_t budget) {
    std::uint64_t n = s.vertex_count();
    if (n > budget) throw budget_error("vertex enumeration exceeds budget");
    std::vector<std::uint8_t> work(static_cast<std::size_t>(s.m), 0);
    for (;;) {
        fn(Vertex(s, work));
        int j = s.m - 1;
        while (j >= 0 && work[static_cast<std::size_t>(j)] == s.q - 1) {
            work[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
        ++work[static_cast<std::size_t>(j)];
    }
}

}  // namespace hnt
