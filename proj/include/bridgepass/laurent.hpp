#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <string>

namespace bridgepass {

/// Integer Laurent polynomial in one variable A.
///
/// Coefficients are 64-bit. For the state sums computed in this library the
/// coefficient magnitudes are bounded by 2^c * 2^(c-1) for a diagram with c
/// crossings, so with the bracket cap of 18 crossings every intermediate
/// value fits comfortably.
class LaurentPolynomial {
public:
    using Coeff = std::int64_t;

    LaurentPolynomial() = default;

    static LaurentPolynomial zero() { return {}; }

    static LaurentPolynomial one() { return monomial(1, 0); }

    static LaurentPolynomial monomial(Coeff coeff, int exponent) {
        LaurentPolynomial p;
        if (coeff != 0) p.terms_[exponent] = coeff;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    bool operator==(const LaurentPolynomial& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPolynomial& rhs) const { return !(*this == rhs); }

    LaurentPolynomial& operator+=(const LaurentPolynomial& rhs) {
        for (auto [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }

    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }

    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial out;
        for (auto [ea, ca] : a.terms_)
            for (auto [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    LaurentPolynomial& operator*=(const LaurentPolynomial& rhs) {
        *this = *this * rhs;
        return *this;
    }

    void add_term(int exponent, Coeff coeff) {
        if (coeff == 0) return;
        auto it = terms_.find(exponent);
        if (it == terms_.end()) {
            terms_[exponent] = coeff;
        } else {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Substitute A -> A^-1.
    LaurentPolynomial mirrored() const {
        LaurentPolynomial out;
        for (auto [e, c] : terms_) out.terms_[-e] = c;
        return out;
    }

    const std::map<int, Coeff>& terms() const { return terms_; }

    /// Renders terms exponent-descending, e.g. "-A^-4 - A^-12 + A^-16".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            auto [e, c] = *it;
            if (first) {
                if (c < 0) out << "-";
            } else {
                out << (c < 0 ? " - " : " + ");
            }
            Coeff mag = c < 0 ? -c : c;
            if (mag != 1 || e == 0) out << mag;
            if (e != 0) {
                if (mag != 1) out << "*";
                out << "A";
                if (e != 1) out << "^" << e;
            }
            first = false;
        }
        return out.str();
    }

private:
    std::map<int, Coeff> terms_; // exponent -> nonzero coefficient
};

} // namespace bridgepass
