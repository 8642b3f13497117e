#pragma once

#include <boost/rational.hpp>
#include <string>

namespace tropmod {

using Rational = boost::rational<long long>;

/// A rational number extended by the symbol `inf`.
///
/// Used both for edge lengths of extended tropical curves (where finite
/// values must be strictly positive; callers enforce that) and for
/// coordinates of points in extended orthants (finite values >= 0).
/// Addition is absorbing: q + inf = inf + inf = inf.
class ExtRat {
 public:
  ExtRat() : inf_(false), q_(0) {}
  ExtRat(long long num, long long den = 1) : inf_(false), q_(num, den) {}
  explicit ExtRat(Rational q) : inf_(false), q_(q) {}

  static ExtRat inf() {
    ExtRat r;
    r.inf_ = true;
    return r;
  }

  /// Parses "p", "p/q" or "inf". Throws std::invalid_argument on anything else.
  static ExtRat parse(const std::string& s);

  bool is_inf() const { return inf_; }
  bool is_finite() const { return !inf_; }

  /// Finite value; throws std::logic_error when infinite.
  const Rational& value() const;

  // Sign tests go through the numerator: comparing boost::rational against a
  // raw integer trips C++20 rewritten-candidate recursion in boost 1.74.
  bool is_zero() const { return !inf_ && q_.numerator() == 0; }
  bool is_positive() const { return inf_ || q_.numerator() > 0; }
  bool is_negative() const { return !inf_ && q_.numerator() < 0; }

  ExtRat operator+(const ExtRat& o) const;
  ExtRat half() const;

  bool operator==(const ExtRat& o) const {
    return inf_ == o.inf_ && (inf_ || q_ == o.q_);
  }
  bool operator!=(const ExtRat& o) const { return !(*this == o); }

  /// Total order with inf greater than every finite value.
  bool operator<(const ExtRat& o) const {
    if (inf_) return false;
    if (o.inf_) return true;
    return q_ < o.q_;
  }
  bool operator<=(const ExtRat& o) const { return *this < o || *this == o; }
  bool operator>(const ExtRat& o) const { return o < *this; }
  bool operator>=(const ExtRat& o) const { return o <= *this; }

  /// "p/q" (always with explicit denominator) or "inf".
  std::string str() const;

 private:
  bool inf_;
  Rational q_;
};

}  // namespace tropmod
