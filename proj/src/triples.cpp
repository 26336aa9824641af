#include "holes/triples.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace holes {

namespace {

// squares stay below 2^63 for values up to this bound
constexpr long long kValueCap = 3'000'000'000LL;

void check_range(long long v) {
    if (v <= 0) throw std::invalid_argument("triple values must be positive, got " + std::to_string(v));
    if (v > kValueCap)
        throw std::invalid_argument("triple value " + std::to_string(v) +
                                    " exceeds the 64-bit-safe bound " + std::to_string(kValueCap));
}

constexpr std::array<std::array<long long, 3>, 5> kTTypes = {{
    {3, 4, 5},
    {20, 21, 29},
    {28, 45, 53},
    {48, 55, 73},
    {65, 72, 97},
}};

}  // namespace

bool is_pythagorean(long long a, long long b, long long c) {
    check_range(a);
    check_range(b);
    check_range(c);
    long long v[3] = {a, b, c};
    std::sort(v, v + 3);
    return v[0] * v[0] + v[1] * v[1] == v[2] * v[2];
}

Triple make_triple(long long a, long long b, long long c) {
    if (!is_pythagorean(a, b, c)) {
        long long v[3] = {a, b, c};
        std::sort(v, v + 3);
        throw std::invalid_argument("(" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," +
                                    std::to_string(v[2]) + ") is not Pythagorean: " +
                                    std::to_string(v[0]) + "^2 + " + std::to_string(v[1]) +
                                    "^2 != " + std::to_string(v[2]) + "^2");
    }
    long long v[3] = {a, b, c};
    std::sort(v, v + 3);
    Triple t;
    t.a = v[0];
    t.b = v[1];
    t.c = v[2];
    t.scale = std::gcd(std::gcd(t.a, t.b), t.c);
    t.root_a = t.a / t.scale;
    t.root_b = t.b / t.scale;
    t.root_c = t.c / t.scale;
    t.primitive = t.scale == 1;
    return t;
}

std::vector<Triple> primitive_triples_up_to(long long c_max) {
    if (c_max > kValueCap)
        throw std::invalid_argument("c_max " + std::to_string(c_max) +
                                    " exceeds the 64-bit-safe bound " + std::to_string(kValueCap));
    std::vector<Triple> out;
    if (c_max < 5) return out;
    for (long long m = 2; m * m + 1 <= c_max; ++m) {
        for (long long k = 1 + (m % 2); k < m; k += 2) {  // opposite parity
            if (std::gcd(m, k) != 1) continue;
            long long c = m * m + k * k;
            if (c > c_max) break;
            long long a = m * m - k * k;
            long long b = 2 * m * k;
            out.push_back(make_triple(a, b, c));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Triple& x, const Triple& y) { return std::tie(x.c, x.a) < std::tie(y.c, y.a); });
    return out;
}

TripleType classify(const Triple& t) {
    std::array<long long, 3> root = {t.root_a, t.root_b, t.root_c};
    for (int i = 0; i < 5; ++i)
        if (root == kTTypes[i]) return {TripleType::Kind::t, i + 1};
    // e-rank: position of the root among non-t primitives in (c, a) order
    int rank = 0;
    for (const Triple& p : primitive_triples_up_to(t.root_c)) {
        std::array<long long, 3> cand = {p.a, p.b, p.c};
        bool is_t = false;
        for (const auto& tt : kTTypes)
            if (cand == tt) is_t = true;
        if (is_t) continue;
        ++rank;
        if (cand == root) return {TripleType::Kind::e, rank};
    }
    throw std::logic_error("classify: root triple not reproduced by the generator");
}

std::string to_string(const TripleType& type) {
    return (type.kind == TripleType::Kind::t ? "t" : "e") + std::to_string(type.index);
}

}  // namespace holes
