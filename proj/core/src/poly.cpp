#include "pellian/poly.hpp"

#include <sstream>

namespace pellian {

IntPolynomial::IntPolynomial(std::initializer_list<i64> coeffs_low_first) {
    coeffs_.reserve(coeffs_low_first.size());
    for (i64 c : coeffs_low_first) coeffs_.emplace_back(static_cast<long>(c));
    trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs_low_first)
    : coeffs_(std::move(coeffs_low_first)) {
    trim();
}

IntPolynomial IntPolynomial::constant(mpz_class c) {
    IntPolynomial p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPolynomial IntPolynomial::identity() { return IntPolynomial{0, 1}; }

const mpz_class& IntPolynomial::coeff(std::size_t i) const {
    static const mpz_class zero = 0;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
    mpz_class acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] += o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    std::vector<mpz_class> r(std::max(coeffs_.size(), o.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) r[i] -= o.coeffs_[i];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<mpz_class> r(coeffs_.size() + o.coeffs_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::operator*(const mpz_class& s) const {
    if (s == 0) return {};
    std::vector<mpz_class> r = coeffs_;
    for (auto& c : r) c *= s;
    return IntPolynomial(std::move(r));
}

std::string IntPolynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << (coeffs_[i] > 0 ? " + " : " - ");
        else if (coeffs_[i] < 0) os << "-";
        mpz_class a = abs(coeffs_[i]);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << var;
            if (i >= 2) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace pellian
