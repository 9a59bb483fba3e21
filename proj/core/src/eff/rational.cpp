#include "platek/eff/rational.hpp"

namespace platek::eff {

Rat rat_parse(const std::string& text) {
  if (text.empty()) throw Error("empty rational literal");
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int p(text.substr(0, slash));
    Int q(text.substr(slash + 1));
    if (q == 0) throw Error("rational with zero denominator: " + text);
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw Error("bad rational literal: " + text);
  }
}

std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rat pow2_inv(unsigned n) {
  Int den = Int(1) << n;
  return Rat(Int(1), den);
}

Int rat_floor(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  Int q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace platek::eff
