// Builds the prefix-product extremal instances for a small rational weight
// vector and checks that the exact engine hits each candidate bound.

#include <smalldev/smalldev.hpp>

#include <iostream>

int main() {
  using namespace smalldev;
  const auto w = make_weight_vector<Rational>({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  const auto d = make_delta(Rational(1, 10));

  const auto s = samuels_bound(w, d);
  std::cout << "samuels bound " << format_number(s.value) << " at i = " << s.argmin_index << '\n';
  std::cout << "feige bound   " << feige_bound(w, d) << '\n';

  const auto report = verify_extremal_equality(w, d);
  for (const auto& c : report.checks) {
    std::cout << c.kind << " i=" << c.index << "  engine " << format_number(c.engine) << "  closed form "
              << format_number(c.closed_form) << (c.equal ? "  equal" : "  MISMATCH") << '\n';
  }
  return report.all_equal() ? 0 : 1;
}
