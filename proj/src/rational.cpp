#include "liewild/rational.hpp"

#include <stdexcept>

#include "liewild/errors.hpp"

namespace liewild {

Rat rat(long num, long den) {
  if (den == 0) throw InternalError("rat(): zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat rat_parse(const std::string& text) {
  auto strip = [](const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return std::string();
    return s.substr(b, e - b + 1);
  };
  const std::string s = strip(text);
  if (s.empty()) throw ParseError("empty rational literal");

  std::string num_part = s, den_part = "1";
  if (auto slash = s.find('/'); slash != std::string::npos) {
    num_part = strip(s.substr(0, slash));
    den_part = strip(s.substr(slash + 1));
  }
  Int num, den;
  try {
    num = Int(num_part);
    den = Int(den_part);
  } catch (const std::invalid_argument&) {
    throw ParseError("malformed rational literal '" + s + "'");
  }
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  Rat q(num);
  q /= Rat(den);
  return q;
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace liewild
