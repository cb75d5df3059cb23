// Monomials as dense exponent vectors, and the one term order used anywhere
// in this library: the graded reverse lexicographic order with x1 > x2 > ...
#pragma once

#include <compare>
#include <numeric>
#include <vector>

#include "ginlex/errors.hpp"

namespace ginlex {

struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    int vars() const { return static_cast<int>(exponents.size()); }
    int degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }
    bool is_one() const { return degree() == 0; }

    bool operator==(const Monomial&) const = default;
};

/// Constant monomial 1 in n variables.
Monomial unit_monomial(int n);

/// The variable x_i (1-based index) as a monomial in n variables.
Monomial variable_monomial(int n, int i);

/// Graded revlex comparison. u > v iff deg u > deg v, or the degrees agree
/// and the last nonzero entry of u - v is negative.
/// Throws dimension_error when u and v have different variable counts.
std::strong_ordering revlex_cmp(const Monomial& u, const Monomial& v);

inline bool revlex_less(const Monomial& u, const Monomial& v) {
    return revlex_cmp(u, v) == std::strong_ordering::less;
}
inline bool revlex_greater(const Monomial& u, const Monomial& v) {
    return revlex_cmp(u, v) == std::strong_ordering::greater;
}

/// Comparator object for descending-revlex containers.
struct RevlexGreater {
    bool operator()(const Monomial& u, const Monomial& v) const {
        return revlex_greater(u, v);
    }
};

bool divides(const Monomial& u, const Monomial& v);

Monomial mul(const Monomial& u, const Monomial& v);

/// Exact quotient v / u. Pre: divides(u, v).
Monomial quotient(const Monomial& v, const Monomial& u);

Monomial lcm(const Monomial& u, const Monomial& v);

/// True when u and v have disjoint supports (lcm == u * v).
bool coprime(const Monomial& u, const Monomial& v);

/// All C(d+n-1, n-1) monomials of degree d in n variables, strictly
/// descending in revlex. Throws domain_error unless n >= 1 and d >= 0.
std::vector<Monomial> monomials_of_degree(int n, int d);

std::string to_string(const Monomial& m);

} // namespace ginlex
