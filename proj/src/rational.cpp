#include "rational.hpp"

#include <cctype>
#include <stdexcept>

namespace tropmod {

ExtRat ExtRat::parse(const std::string& s) {
  if (s == "inf") return ExtRat::inf();
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::size_t pos = 0;
  bool neg = false;
  if (s[pos] == '-') {
    neg = true;
    ++pos;
  }
  auto read_int = [&](long long& out) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument("bad rational literal: " + s);
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v < 0) throw std::invalid_argument("rational literal overflow: " + s);
      ++pos;
    }
    out = v;
  };
  long long num = 0, den = 1;
  read_int(num);
  if (pos < s.size()) {
    if (s[pos] != '/') throw std::invalid_argument("bad rational literal: " + s);
    ++pos;
    read_int(den);
    if (pos != s.size()) throw std::invalid_argument("bad rational literal: " + s);
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
  }
  ExtRat r;
  r.q_ = Rational(neg ? -num : num, den);
  return r;
}

const Rational& ExtRat::value() const {
  if (inf_) throw std::logic_error("value() on infinite ExtRat");
  return q_;
}

ExtRat ExtRat::operator+(const ExtRat& o) const {
  if (inf_ || o.inf_) return ExtRat::inf();
  return ExtRat(q_ + o.q_);
}

ExtRat ExtRat::half() const {
  if (inf_) return *this;
  return ExtRat(q_ / 2);
}

std::string ExtRat::str() const {
  if (inf_) return "inf";
  return std::to_string(q_.numerator()) + "/" + std::to_string(q_.denominator());
}

}  // namespace tropmod
