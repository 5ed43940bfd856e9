// Runs the fixed-point construction on every named CPO and each continuous
// self-map of 2, printing either the fixed point or why it is unavailable.

#include <iostream>
#include <variant>

#include "cpo/cpo.hpp"

int main() {
  for (auto name : {cpo::CpoName::phi, cpo::CpoName::theta, cpo::CpoName::lambda, cpo::CpoName::lambda_prime,
                    cpo::CpoName::lambda_hat_prime, cpo::CpoName::v}) {
    const auto c = cpo::named_cpo(name);
    std::cout << c.symbol() << " (" << cpo::to_string(c.word()) << ")\n";
    for (auto mu : {cpo::Mu::const0, cpo::Mu::const1, cpo::Mu::id}) {
      const auto r = cpo::fpt(c, mu);
      std::cout << "  " << cpo::to_string(mu) << ": ";
      if (const auto* p = std::get_if<cpo::FixedPointReport>(&r)) {
        std::cout << cpo::segment_name(c, p->g) << "(" << c.label(p->preimage) << ") = " << p->value << "\n";
      } else {
        std::cout << std::get<cpo::FptInapplicable>(r).reason << "\n";
      }
    }
  }
}
