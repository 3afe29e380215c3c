#include "qc/rational.hpp"

#include <ostream>
#include <sstream>

namespace qc {

std::string Rat::str() const {
  std::ostringstream os;
  os << numerator();
  if (denominator() != 1) os << "/" << denominator();
  return os.str();
}

Rat Rat::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s), Int(1));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("zero denominator");
    return Rat(std::move(num), std::move(den));
  } catch (const std::exception&) {
    throw std::invalid_argument("Rat: cannot parse '" + s + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace qc
