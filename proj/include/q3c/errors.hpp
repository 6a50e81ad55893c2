#pragma once

#include <stdexcept>
#include <string>

namespace q3c {

/* Invalid input from the caller (bad pair, bad prime, pole, ...).
 * The CLI maps this to exit code 2. */
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/* A violated internal invariant: something that is supposed to be
 * mathematically impossible happened.  The CLI maps this to exit code 3. */
struct internal_error : std::logic_error {
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw domain_error(what);
}

inline void invariant(bool cond, const std::string& what) {
  if (!cond) throw internal_error(what);
}

}  // namespace q3c
