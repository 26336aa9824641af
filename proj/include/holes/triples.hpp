#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holes {

/// A Pythagorean triple a < b < c with its primitive root and scale:
/// (a, b, c) = scale * (root_a, root_b, root_c), gcd(root) = 1.
struct Triple {
    long long a = 0, b = 0, c = 0;
    long long root_a = 0, root_b = 0, root_c = 0;
    long long scale = 1;
    bool primitive = false;
    friend bool operator==(const Triple&, const Triple&) = default;
};

/// True iff the values, sorted, satisfy x^2 + y^2 = z^2 exactly.
/// Zero or negative inputs are rejected.
bool is_pythagorean(long long a, long long b, long long c);

/// Normalizes any Pythagorean triple (order-insensitive) into a Triple.
Triple make_triple(long long a, long long b, long long c);

/// All primitive triples with c <= c_max, ascending by (c, a), generated by
/// the m/k parameterization (m^2-k^2, 2mk, m^2+k^2) over coprime m > k of
/// opposite parity. c_max below 5 yields an empty list.
std::vector<Triple> primitive_triples_up_to(long long c_max);

/// Type labels over primitive roots: five fixed t-types, every other
/// primitive gets e(m) with m its ascending-(c,a) rank among non-t
/// primitives. Multiples inherit the type of their root.
struct TripleType {
    enum class Kind { t, e } kind = Kind::e;
    int index = 0;
    friend bool operator==(const TripleType&, const TripleType&) = default;
};

TripleType classify(const Triple& t);

std::string to_string(const TripleType& type);

}  // namespace holes
