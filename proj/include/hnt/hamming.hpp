#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hnt {

/// Raised when an operation would exceed an enumeration or degree budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Default cap on enumerable vertex universes (q^m).
inline constexpr std::uint64_t kVertexBudget = std::uint64_t{1} << 24;

/// Default cap on the degree of a stabiliser chain domain.
inline constexpr std::uint64_t kChainDegreeBudget = std::uint64_t{1} << 20;

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, int exp);
std::uint64_t binomial(int n, int k);

/// Parameters of the Hamming graph H(m,q), q = p^d with p prime.
/// Entries are indexed 0..m-1, the alphabet is {0,...,q-1} with 0 distinguished.
struct HammingScheme {
    int m = 2;
    int q = 2;
    int p = 2;
    int d = 1;

    HammingScheme(int m_, int q_);

    std::uint64_t vertex_count() const { return checked_pow(q, m); }

    friend bool operator==(const HammingScheme& a, const HammingScheme& b) {
        return a.m == b.m && a.q == b.q;
    }
};

/// An m-tuple over {0,...,q-1}. Immutable after construction.
/// rank() is the lexicographic index of the tuple; for q = 2 this doubles as
/// a packed machine word (entry i at bit m-1-i), so distances reduce to popcount.
class Vertex {
public:
    Vertex(HammingScheme scheme, std::vector<std::uint8_t> symbols);

    static Vertex zero(const HammingScheme& s);
    static Vertex constant(const HammingScheme& s, int symbol);
    static Vertex from_ints(const HammingScheme& s, const std::vector<int>& symbols);
    static Vertex from_rank(const HammingScheme& s, std::uint64_t rank);

    const HammingScheme& scheme() const { return scheme_; }
    int size() const { return scheme_.m; }
    int operator[](int i) const { return symbols_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& symbols() const { return symbols_; }

    int weight() const;
    std::vector<int> support() const;
    std::uint64_t rank() const;

    std::string to_string() const;

    friend bool operator==(const Vertex& a, const Vertex& b) {
        return a.scheme_ == b.scheme_ && a.symbols_ == b.symbols_;
    }
    friend bool operator<(const Vertex& a, const Vertex& b);

private:
    HammingScheme scheme_;
    std::vector<std::uint8_t> symbols_;
};

/// Hamming distance |diff(a,b)|. Schemes must match.
int distance(const Vertex& a, const Vertex& b);

/// diff(a,b) = entries where a and b differ.
std::vector<int> support_diff(const Vertex& a, const Vertex& b);

/// |Γ_s(α)| = C(m,s)(q-1)^s.
std::uint64_t sphere_size(const HammingScheme& s, int radius);

/// Streams Γ_s(centre), each vertex exactly once. Single-consumer.
void for_each_in_sphere(const Vertex& centre, int radius,
                        const std::function<void(const Vertex&)>& fn,
                        std::uint64_t budget = kVertexBudget);

std::vector<Vertex> sphere(const Vertex& centre, int radius,
                           std::uint64_t budget = kVertexBudget);

/// π_J(α) = (α_{j1},...,α_{jk}); J must be nonempty, distinct, in range.
Vertex project(const Vertex& v, std::span<const int> entries);

/// Streams all q^m vertices in lexicographic order.
void enumerate_vertices(const HammingScheme& s,
                        const std::function<void(const Vertex&)>& fn,
                        std::uint64_t budget = kVertexBudget);

}  // namespace hnt
