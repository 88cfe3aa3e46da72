#include "kohnert/polynomial.hpp"

namespace kohnert {

Monomial trim_monomial(Monomial exponents) {
  while (!exponents.empty() && exponents.back() == 0) exponents.pop_back();
  return exponents;
}

KohnertPolynomial kohnert_polynomial(const KohnertPoset& p) {
  KohnertPolynomial f;
  for (const Diagram& d : p.nodes()) ++f[trim_monomial(row_weight(d))];
  return f;
}

std::pair<bool, std::optional<Monomial>> is_monomial_multiplicity_free(const KohnertPolynomial& f) {
  for (const auto& [m, c] : f) {
    if (c > 1) return {false, m};
  }
  return {true, std::nullopt};
}

std::string render_monomial(const Monomial& m, std::uint64_t coefficient) {
  std::string out;
  if (coefficient != 1) out = std::to_string(coefficient);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string render_polynomial(const KohnertPolynomial& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : f) {
    if (!out.empty()) out += " + ";
    out += render_monomial(m, c);
  }
  return out;
}

}  // namespace kohnert
