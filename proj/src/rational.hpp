#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace l3kit {

/// Error raised by malformed scalar strings ("1/0", "abc", ...).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error raised when operand shapes are inconsistent.
struct dim_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Error raised when an operation's precondition fails (invalid algebra,
/// non-closed cocycle, operator that is not a twisted Rota-Baxter operator...).
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational scalar. Always in lowest terms with positive denominator;
// arithmetic never rounds.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(static_cast<long>(n)) {}
    Scalar(long n, long d) : v_(n, d) {
        if (d == 0) throw parse_error("zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    // Parses "p" or "p/q" with optional sign; q must be nonzero.
    static Scalar parse(const std::string& s);

    // "p" when the value is integral, "p/q" otherwise.
    std::string str() const;

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw std::domain_error("division by zero scalar");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

    const mpq_class& raw() const { return v_; }

  private:
    mpq_class v_;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar(a) * b; }

} // namespace l3kit
