#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "beal/algebra.hpp"
#include "beal/nstructure.hpp"
#include "beal/rational.hpp"
#include "oracle.hpp"

namespace testing {

inline beal::Rational q(const char* s) { return beal::Rational::parse(s); }

inline beal::NFunction fn(std::initializer_list<const char*> values) {
  std::vector<beal::Rational> v;
  for (const char* s : values) v.push_back(q(s));
  return beal::NFunction(std::move(v));
}

inline oracle::Cayley cayley(const beal::BEAlgebra& a) { return {a.table().begin(), a.table().end()}; }

// f and k must be exact multiples of 1/denominator.
inline oracle::Scaled scaled(const beal::BEAlgebra& a, const beal::NFunction& f, const beal::Rational& k,
                             long denominator) {
  oracle::Scaled s{static_cast<unsigned>(a.size()), cayley(a), {}, 0, denominator};
  auto as_units = [&](const beal::Rational& v) {
    const beal::Rational u = v * beal::Rational(denominator);
    return u.raw().get_num().get_si();
  };
  for (const auto& v : f.values()) s.f.push_back(as_units(v));
  s.k = as_units(k);
  return s;
}

inline std::string data_path(const std::string& rel) { return std::string(BEAL_DATA_DIR) + "/" + rel; }

}  // namespace testing
