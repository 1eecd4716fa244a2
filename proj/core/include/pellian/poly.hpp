#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pellian/integer.hpp"

namespace pellian {

/// Dense univariate polynomial with exact integer coefficients,
/// stored lowest degree first. The zero polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<i64> coeffs_low_first);
    explicit IntPolynomial(std::vector<mpz_class> coeffs_low_first);

    static IntPolynomial constant(mpz_class c);
    static IntPolynomial identity();  // x

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const mpz_class& coeff(std::size_t i) const;
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }

    mpz_class eval(const mpz_class& x) const;

    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const mpz_class& s) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

}  // namespace pellian
