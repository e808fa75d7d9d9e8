#include "cpda/rational.hpp"

#include <limits>
#include <sstream>

namespace cpda {

std::string rat_to_string(const Rat& r) {
  std::ostringstream out;
  out << rat_num(r) << "/" << rat_den(r);
  return out.str();
}

Rat rat_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(text));
    }
    Int num(text.substr(0, slash));
    Int den(text.substr(slash + 1));
    require(den != 0, ErrorCode::ParseError, "rational with zero denominator",
            text);
    return Rat(num, den);
  } catch (const CpdaError&) {
    throw;
  } catch (const std::exception&) {
    fail(ErrorCode::ParseError, "not a rational", text);
  }
}

std::string rat_to_decimal(const Rat& r, int digits) {
  bool negative = r < 0;
  Rat a = negative ? Rat(-r) : r;
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // Round half up on the scaled numerator.
  Int scaled = (rat_num(a) * scale * 2 + rat_den(a)) / (rat_den(a) * 2);
  Int whole = scaled / scale;
  Int frac = scaled % scale;
  std::ostringstream out;
  if (negative) out << '-';
  out << whole;
  if (digits > 0) {
    std::string f = frac.str();
    out << '.' << std::string(digits - static_cast<int>(f.size()), '0') << f;
  }
  return out.str();
}

std::int64_t int_to_i64(const Int& value) {
  require(value >= std::numeric_limits<std::int64_t>::min() &&
              value <= std::numeric_limits<std::int64_t>::max(),
          ErrorCode::ParamOutOfRange, "integer does not fit in 64 bits",
          value.str());
  return static_cast<std::int64_t>(value);
}

}  // namespace cpda
