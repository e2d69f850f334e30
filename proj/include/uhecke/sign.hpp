#pragma once

#include <stdexcept>
#include <string>

namespace uhecke {

// The sign epsilon distinguishing the two families: + (unramified) and
// - (almost unramified).
enum class Sign { plus, minus };

// The value (eps 1): +1 or -1.
inline int sign_one(Sign e) { return e == Sign::plus ? 1 : -1; }

inline char sign_char(Sign e) { return e == Sign::plus ? '+' : '-'; }

inline Sign sign_from_string(const std::string& s) {
  if (s == "+" || s == "plus") return Sign::plus;
  if (s == "-" || s == "minus") return Sign::minus;
  throw std::invalid_argument("sign must be '+' or '-'");
}

}  // namespace uhecke
