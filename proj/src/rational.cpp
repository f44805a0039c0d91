#include "stkl/rational.hpp"

namespace stkl {

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact at every step
  }
  return r;
}

std::string fraction_str(const Rational& r) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string decimal_str(const Rational& r, int places) {
  BigInt num = numerator(r);
  BigInt den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  BigInt scaled = (num * scale * 2 + den) / (den * 2);
  BigInt whole = scaled / scale;
  BigInt frac = scaled % scale;
  std::string fs = frac.str();
  fs.insert(fs.begin(), places - fs.size(), '0');
  std::string out = whole.str();
  if (places > 0) out += "." + fs;
  if (neg && (whole != 0 || frac != 0)) out.insert(out.begin(), '-');
  return out;
}

}  // namespace stkl
