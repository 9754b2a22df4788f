// Derives the hook and two-row closed forms for a few fixed parts and prints
// them next to the direct sums they were checked against.

#include <iostream>

#include <snchar/closedform.hpp>

int main()
{
  using namespace snchar;
  for (const Partition& mu0 : {Partition{}, Partition{2}, Partition{3}, Partition{3, 2}}) {
    const ClosedForm phi = derive_phi2(mu0);
    const ClosedForm psi = derive_psi2(mu0);
    std::cout << "mu0 = (" << mu0.to_string() << ")\n"
              << "  phi2: " << to_pretty_string(phi.factor) << " * " << to_string(phi.base) << "\n"
              << "  psi2: " << to_pretty_string(psi.factor) << " * " << to_string(psi.base) << "\n";
    const long n = psi.valid_from + 6;
    std::cout << "  psi2 at n=" << n << ": " << eval_closed_form(psi, n) << " (direct " << psi2(mu0, static_cast<int>(n))
              << ")\n";
  }
}
