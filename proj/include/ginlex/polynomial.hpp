// Multivariate polynomials over the rationals. Terms are kept sorted in
// strictly descending revlex, with no zero coefficients stored, so the
// leading term is terms().front() and iteration order is canonical.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ginlex/linalg.hpp"
#include "ginlex/monomial.hpp"
#include "ginlex/rational.hpp"

namespace ginlex {

struct Term {
    Monomial mono;
    Rational coeff;

    bool operator==(const Term&) const = default;
};

class Polynomial {
public:
    Polynomial() : n_(0) {}
    explicit Polynomial(int n) : n_(n) {}

    static Polynomial zero(int n) { return Polynomial(n); }
    static Polynomial constant(int n, const Rational& c);
    static Polynomial one(int n) { return constant(n, Rational(1)); }
    static Polynomial variable(int n, int i);
    static Polynomial from_monomial(const Monomial& m, const Rational& c = Rational(1));
    /// Normalizing constructor: merges duplicates, drops zeros, sorts.
    static Polynomial from_terms(int n, std::vector<Term> terms);

    int vars() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }

    /// Throws domain_error on the zero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coeff() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    Rational coeff(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

    Polynomial scaled(const Rational& c) const;
    /// this * c * m, in one pass.
    Polynomial scaled_shift(const Rational& c, const Monomial& m) const;
    Polynomial pow(int k) const;

    /// Leading coefficient 1.
    Polynomial monic() const;
    /// Integer coefficients with content 1 and positive leading coefficient.
    Polynomial primitive() const;

    bool operator==(const Polynomial&) const = default;

private:
    int n_;
    std::vector<Term> terms_; // descending revlex, no zero coefficients
};

/// A degree-one form sum c_i x_i, stored by its coefficient vector.
struct LinearForm {
    std::vector<Rational> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<Rational> c) : coeffs(std::move(c)) {}

    int vars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    Polynomial to_polynomial() const;

    /// The i-th variable (1-based) as a linear form.
    static LinearForm variable(int n, int i);

    bool operator==(const LinearForm&) const = default;
};

/// Substitution x_i -> sum_j M[i][j] x_j, exact. M must be n x n where n is
/// the variable count of p. Degree is preserved; the map is linear in p.
Polynomial apply_linear_change(const Polynomial& p, const Matrix& m);

std::string to_string(const Polynomial& p);

} // namespace ginlex
