#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace qc {

// Arbitrary-precision rational. Thin strong type over
// boost::multiprecision::cpp_rational; the wrapper keeps the constructor set
// small so the type can be used as an Eigen scalar (the raw boost number has
// greedy template constructors that clash with Eigen expression types).
// Always stored reduced, denominator positive.
class Rat {
 public:
  using Backend = boost::multiprecision::cpp_rational;
  using Int = boost::multiprecision::cpp_int;

  Rat() : v_(0) {}
  Rat(int n) : v_(n) {}
  Rat(long n) : v_(n) {}
  Rat(long long n) : v_(static_cast<std::int64_t>(n)) {}
  Rat(long long num, long long den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = Backend(Int(num), Int(den));
  }
  explicit Rat(Backend b) : v_(std::move(b)) {}
  explicit Rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("Rat: zero denominator");
    v_ = Backend(std::move(num), std::move(den));
  }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ + b.v_)); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ - b.v_)); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(Backend(a.v_ * b.v_)); }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(Backend(a.v_ / b.v_));
  }
  Rat operator-() const { return Rat(Backend(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
  friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
  friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_ == 1; }
  Rat inverse() const {
    if (is_zero()) throw std::domain_error("Rat: inverse of zero");
    return Rat(Backend(1) / v_);
  }
  Int numerator() const { return boost::multiprecision::numerator(v_); }
  Int denominator() const { return boost::multiprecision::denominator(v_); }
  const Backend& value() const { return v_; }

  // "p" or "p/q"; the external JSON form.
  std::string str() const;
  static Rat parse(const std::string& s);

 private:
  Backend v_;
};

inline Rat abs(const Rat& a) { return a < Rat(0) ? -a : a; }

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace qc
