#include "spectra/rational.hpp"

#include <ostream>

namespace spectra {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("bad rational: \"" + text + "\"");
  }
}

}  // namespace spectra
