#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "translatio/errors.hpp"

namespace translatio {

// Exact rational scalar.  Everything in the library is exact; there is no
// floating point anywhere.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline long to_long(const Rat& r) {
  if (!is_integer(r)) throw DomainError("expected an integer, got " + r.get_str());
  if (!r.get_num().fits_slong_p()) throw ResourceError("integer too large: " + r.get_str());
  return r.get_num().get_si();
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r;
  if (r.set_str(s, 10) != 0) throw ConfigError("malformed rational: '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace translatio
