#include <stdexcept>
#include <vector>

#include "psc/rep_ring.hpp"

namespace psc {
namespace {

// Newton's identity  d X_d = sum_{i=1..d} eps^(i-1) psi^i(a) X_{d-i}
// with eps = +1 for symmetric and -1 for exterior powers.  The products are
// taken with Brauer-Klimyk against the Adams-scaled character of a, so no
// large character is ever expanded.
std::vector<VirtualRep> newton_powers(const VirtualRep& a, int d_max, int eps) {
  if (d_max < 0) throw std::invalid_argument("power degree must be nonnegative");
  const auto& sig = a.signature();
  std::vector<VirtualRep> x;
  x.reserve(d_max + 1);
  x.push_back(VirtualRep::trivial(sig));
  if (d_max == 0) return x;

  const Character ch = character(a);
  std::vector<Character> psi(d_max + 1);
  for (int i = 1; i <= d_max; ++i) psi[i] = ch.adams(i);

  for (int d = 1; d <= d_max; ++d) {
    VirtualRep acc(sig);
    for (int i = 1; i <= d; ++i) {
      VirtualRep term = tensor_with_character(x[d - i], psi[i]);
      if ((i - 1) % 2 == 1 && eps < 0) term *= -1;
      acc += term;
    }
    VirtualRep xd(sig);
    for (const auto& [w, c] : acc.terms()) {
      if (c % d != 0) throw std::logic_error("Newton recursion produced a non-integral coefficient");
      xd.add_term(w, c / d);
    }
    x.push_back(std::move(xd));
  }
  return x;
}

}  // namespace

std::vector<VirtualRep> sym_powers(const VirtualRep& a, int d_max) {
  return newton_powers(a, d_max, +1);
}

std::vector<VirtualRep> ext_powers(const VirtualRep& a, int d_max) {
  return newton_powers(a, d_max, -1);
}

VirtualRep sym_power(const VirtualRep& a, int d) { return newton_powers(a, d, +1).back(); }

VirtualRep ext_power(const VirtualRep& a, int d) { return newton_powers(a, d, -1).back(); }

}  // namespace psc
