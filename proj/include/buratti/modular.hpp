#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "buratti/errors.hpp"

namespace buratti {

// Vertex labels live in {0..p-1}; cyclic edge lengths in {1..n} with
// n = floor(p/2). For odd p this is (p-1)/2. Even moduli are admitted so
// that the two-length law and the oracle can exercise composite orders;
// operations that genuinely need an odd prime declare that precondition.
struct Modulus {
    int p = 0;
    int n = 0;
    bool is_prime = false;

    static Modulus of(int p);

    bool operator==(const Modulus& other) const { return p == other.p; }
};

bool is_prime_trial(int p);

// min(|u-v|, p-|u-v|), the cyclic length of edge (u,v).
int cyclic_length(const Modulus& m, int u, int v);

// |u-v| on plain integer labels, ignoring wraparound.
int linear_length(int u, int v);

// phi_k(i) = min(k*i mod p, p - k*i mod p). Bijective on [1..n] when
// gcd(k, p) = 1.
int phi(const Modulus& m, int k, int i);

// sigma_k(v) = k*v mod p, the vertex relabeling underlying phi_k.
int sigma(const Modulus& m, int k, int v);

// Which range of lengths a multiset may use: cyclic realizations and trees
// use [1..n], linear realizations use [1..p-1].
enum class length_bound { cyclic, linear };

// A multiset of edge lengths over a fixed modulus. Keys are validated on
// entry; totals are only pinned to p-1 where a realization target is
// required, so intermediate algebra can hold any size.
class LengthMultiset {
public:
    explicit LengthMultiset(Modulus m, length_bound bound = length_bound::cyclic);

    // Grammar: term ("," term)*, term = <int> or <int>^<int>. Repeated
    // lengths sum: "1^3,2,2" -> {1^3, 2^2}.
    static LengthMultiset parse(const std::string& text, Modulus m,
                                length_bound bound = length_bound::cyclic);

    void add(int length, long long count = 1);
    void remove_one(int length);
    long long count(int length) const;
    long long total() const { return total_; }
    int support_size() const { return static_cast<int>(counts_.size()); }
    bool empty() const { return counts_.empty(); }
    int max_length() const { return max_length_; }

    const std::map<int, long long>& counts() const { return counts_; }
    const Modulus& modulus() const { return mod_; }

    // Ascending "d^a" terms joined by commas; exponent always explicit.
    std::string canonical() const;

    bool operator==(const LengthMultiset& other) const {
        return mod_ == other.mod_ && counts_ == other.counts_;
    }
    bool operator<(const LengthMultiset& other) const { return counts_ < other.counts_; }

private:
    Modulus mod_;
    int max_length_;
    long long total_ = 0;
    std::map<int, long long> counts_;
};

// {phi_k(d)^{a_d}}; multiplicities merge if images collide (impossible for
// gcd(k,p)=1, kept total anyway).
LengthMultiset map_multiset(const Modulus& m, int k, const LengthMultiset& lengths);

// { map_multiset(m, k, L) : k = 1..n }, duplicates removed. Requires prime p.
std::set<LengthMultiset> multiset_orbit(const Modulus& m, const LengthMultiset& lengths);

// Visits every multiset of the given total size over [1..n] in ascending
// lexicographic order of the underlying sorted length vector. Backbone of
// the exhaustive sweeps; count is C(size + n - 1, size).
void for_each_multiset(const Modulus& m, int size,
                       const std::function<void(const LengthMultiset&)>& visit);

long long count_multisets(const Modulus& m, int size);

}  // namespace buratti
