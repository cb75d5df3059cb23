#include "ginlex/monomial.hpp"

#include <algorithm>
#include <sstream>

namespace ginlex {

namespace {

void check_same_vars(const Monomial& u, const Monomial& v) {
    if (u.vars() != v.vars()) {
        throw dimension_error("monomials live in different variable counts");
    }
}

} // namespace

Monomial unit_monomial(int n) {
    if (n < 0) throw domain_error("negative variable count");
    return Monomial(std::vector<int>(static_cast<size_t>(n), 0));
}

Monomial variable_monomial(int n, int i) {
    if (i < 1 || i > n) throw domain_error("variable index out of range");
    Monomial m = unit_monomial(n);
    m.exponents[static_cast<size_t>(i - 1)] = 1;
    return m;
}

std::strong_ordering revlex_cmp(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    const int du = u.degree(), dv = v.degree();
    if (du != dv) return du <=> dv;
    for (int i = u.vars() - 1; i >= 0; --i) {
        const int d = u.exponents[static_cast<size_t>(i)] - v.exponents[static_cast<size_t>(i)];
        if (d != 0) {
            return d < 0 ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return std::strong_ordering::equal;
}

bool divides(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    for (int i = 0; i < u.vars(); ++i) {
        if (u.exponents[static_cast<size_t>(i)] > v.exponents[static_cast<size_t>(i)]) return false;
    }
    return true;
}

Monomial mul(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Monomial w = u;
    for (int i = 0; i < u.vars(); ++i) {
        w.exponents[static_cast<size_t>(i)] += v.exponents[static_cast<size_t>(i)];
    }
    return w;
}

Monomial quotient(const Monomial& v, const Monomial& u) {
    check_same_vars(u, v);
    Monomial w = v;
    for (int i = 0; i < v.vars(); ++i) {
        w.exponents[static_cast<size_t>(i)] -= u.exponents[static_cast<size_t>(i)];
        if (w.exponents[static_cast<size_t>(i)] < 0) {
            throw domain_error("monomial quotient is not exact");
        }
    }
    return w;
}

Monomial lcm(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    Monomial w = u;
    for (int i = 0; i < u.vars(); ++i) {
        w.exponents[static_cast<size_t>(i)] =
            std::max(u.exponents[static_cast<size_t>(i)], v.exponents[static_cast<size_t>(i)]);
    }
    return w;
}

bool coprime(const Monomial& u, const Monomial& v) {
    check_same_vars(u, v);
    for (int i = 0; i < u.vars(); ++i) {
        if (u.exponents[static_cast<size_t>(i)] > 0 && v.exponents[static_cast<size_t>(i)] > 0) {
            return false;
        }
    }
    return true;
}

std::vector<Monomial> monomials_of_degree(int n, int d) {
    if (n < 1) throw domain_error("variable count must be positive");
    if (d < 0) throw domain_error("degree must be nonnegative");
    std::vector<Monomial> out;
    std::vector<int> e(static_cast<size_t>(n), 0);
    // Enumerate all compositions of d, then sort once.
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == n - 1) {
            e[static_cast<size_t>(pos)] = rest;
            out.emplace_back(e);
            return;
        }
        for (int k = rest; k >= 0; --k) {
            e[static_cast<size_t>(pos)] = k;
            self(self, pos + 1, rest - k);
        }
        e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, d);
    std::sort(out.begin(), out.end(), RevlexGreater{});
    return out;
}

std::string to_string(const Monomial& m) {
    if (m.is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < m.vars(); ++i) {
        const int e = m.exponents[static_cast<size_t>(i)];
        if (e == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

} // namespace ginlex
