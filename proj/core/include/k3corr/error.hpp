#pragma once

#include <stdexcept>
#include <string>

namespace k3corr {

enum class errc {
  invalid_input,
  incompatible_invariants,
  invalid_mu,
  invalid_d,
  invalid_vector,
  invalid_witness,
  invalid_t,
  inconsistent_candidate,
  inconsistent_h1,
  square_discriminant,
  invalid_pairing,
  theorem_inapplicable,
  invariant_violation,
  internal_error,
};

const char* errc_name(errc code);

class k3_error : public std::runtime_error {
public:
  k3_error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw k3_error(code, what); }

}  // namespace k3corr
