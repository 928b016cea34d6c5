#include "buratti/modular.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace buratti {

bool is_prime_trial(int p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (int d = 3; static_cast<long long>(d) * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

Modulus Modulus::of(int p) {
    if (p < 3) fail(errc::domain, "modulus must be at least 3, got " + std::to_string(p));
    Modulus m;
    m.p = p;
    m.n = p / 2;
    m.is_prime = is_prime_trial(p);
    return m;
}

static void check_label(const Modulus& m, int v) {
    if (v < 0 || v >= m.p)
        fail(errc::domain,
             "vertex label " + std::to_string(v) + " outside [0," + std::to_string(m.p - 1) + "]");
}

int cyclic_length(const Modulus& m, int u, int v) {
    check_label(m, u);
    check_label(m, v);
    if (u == v) fail(errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
    int diff = std::abs(u - v);
    return std::min(diff, m.p - diff);
}

int linear_length(int u, int v) {
    if (u == v) fail(errc::invalid_edge, "self-loop at vertex " + std::to_string(u));
    return std::abs(u - v);
}

static void check_multiplier(const Modulus& m, int k) {
    if (k < 1 || k > m.n)
        fail(errc::domain, "multiplier k=" + std::to_string(k) + " outside [1," +
                               std::to_string(m.n) + "]");
    if (std::gcd(k, m.p) != 1)
        fail(errc::non_invertible, "multiplier k=" + std::to_string(k) +
                                       " shares a factor with p=" + std::to_string(m.p));
}

int phi(const Modulus& m, int k, int i) {
    check_multiplier(m, k);
    if (i < 1 || i > m.n)
        fail(errc::domain,
             "length " + std::to_string(i) + " outside [1," + std::to_string(m.n) + "]");
    int ki = static_cast<int>((static_cast<long long>(k) * i) % m.p);
    return std::min(ki, m.p - ki);
}

int sigma(const Modulus& m, int k, int v) {
    if (std::gcd(k, m.p) != 1)
        fail(errc::non_invertible, "multiplier k=" + std::to_string(k) +
                                       " shares a factor with p=" + std::to_string(m.p));
    check_label(m, v);
    return static_cast<int>((static_cast<long long>(k) * v) % m.p);
}

LengthMultiset::LengthMultiset(Modulus m, length_bound bound)
    : mod_(m), max_length_(bound == length_bound::cyclic ? m.n : m.p - 1) {}

void LengthMultiset::add(int length, long long count) {
    if (length < 1 || length > max_length_)
        fail(errc::domain, "length " + std::to_string(length) + " outside [1," +
                               std::to_string(max_length_) + "] for p=" + std::to_string(mod_.p));
    if (count < 1) fail(errc::domain, "multiplicity must be positive");
    counts_[length] += count;
    total_ += count;
}

void LengthMultiset::remove_one(int length) {
    auto it = counts_.find(length);
    if (it == counts_.end())
        fail(errc::usage, "length " + std::to_string(length) + " not present in multiset");
    if (--it->second == 0) counts_.erase(it);
    --total_;
}

long long LengthMultiset::count(int length) const {
    auto it = counts_.find(length);
    return it == counts_.end() ? 0 : it->second;
}

LengthMultiset LengthMultiset::parse(const std::string& text, Modulus m, length_bound bound) {
    LengthMultiset result(m, bound);
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> long long {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail(errc::parse, "expected integer at position " + std::to_string(start) +
                                                " in \"" + text + "\"");
        if (pos - start > 9) fail(errc::parse, "integer too large in \"" + text + "\"");
        return std::stoll(text.substr(start, pos - start));
    };
    while (true) {
        long long length = read_int();
        long long count = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            count = read_int();
            skip_ws();
        }
        if (count == 0) fail(errc::parse, "zero multiplicity in \"" + text + "\"");
        result.add(static_cast<int>(length), count);
        if (pos == text.size()) break;
        if (text[pos] != ',')
            fail(errc::parse, "expected ',' at position " + std::to_string(pos) + " in \"" + text + "\"");
        ++pos;
    }
    return result;
}

std::string LengthMultiset::canonical() const {
    std::string out;
    for (const auto& [length, count] : counts_) {
        if (!out.empty()) out += ',';
        out += std::to_string(length);
        out += '^';
        out += std::to_string(count);
    }
    return out;
}

LengthMultiset map_multiset(const Modulus& m, int k, const LengthMultiset& lengths) {
    LengthMultiset image(m);
    for (const auto& [length, count] : lengths.counts()) image.add(phi(m, k, length), count);
    return image;
}

std::set<LengthMultiset> multiset_orbit(const Modulus& m, const LengthMultiset& lengths) {
    if (!m.is_prime)
        fail(errc::precondition, "multiset orbit requires prime p, got " + std::to_string(m.p));
    std::set<LengthMultiset> orbit;
    for (int k = 1; k <= m.n; ++k) orbit.insert(map_multiset(m, k, lengths));
    return orbit;
}

void for_each_multiset(const Modulus& m, int size,
                       const std::function<void(const LengthMultiset&)>& visit) {
    if (size < 1) fail(errc::usage, "multiset size must be positive");
    // Non-decreasing length vectors of the given size over [1..n].
    std::vector<int> pick(size, 1);
    while (true) {
        LengthMultiset current(m);
        for (int v : pick) current.add(v);
        visit(current);
        int i = size - 1;
        while (i >= 0 && pick[i] == m.n) --i;
        if (i < 0) break;
        int next = pick[i] + 1;
        for (int j = i; j < size; ++j) pick[j] = next;
    }
}

long long count_multisets(const Modulus& m, int size) {
    // C(size + n - 1, size) by stars and bars.
    long long result = 1;
    for (int i = 1; i <= m.n - 1; ++i) {
        result = result * (size + i) / i;
    }
    return result;
}

}  // namespace buratti
