#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "kohnert/diagram.hpp"
#include "kohnert/poset.hpp"

namespace kohnert {

/// Exponent vector of x_1^e_1 x_2^e_2 ..., trailing zeros trimmed.
using Monomial = std::vector<int>;

/// Descending lexicographic order on exponent vectors.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return a > b; }
};

/// Monomial -> coefficient. Coefficients sum to the number of poset nodes, so
/// they stay below the node safety bound and 64 bits cannot overflow.
using KohnertPolynomial = std::map<Monomial, std::uint64_t, MonomialDescending>;

Monomial trim_monomial(Monomial exponents);

/// Sum over all poset nodes of x^{row weight}.
KohnertPolynomial kohnert_polynomial(const KohnertPoset& p);

/// True when every coefficient is 1; otherwise the first monomial (in
/// descending order) with a larger coefficient.
std::pair<bool, std::optional<Monomial>> is_monomial_multiplicity_free(const KohnertPolynomial& f);

/// "c*x1^a1*x2^a2..." terms joined by " + ", descending lexicographic order,
/// with coefficient 1 and exponent 1 elided. The zero polynomial renders "0"
/// and the constant monomial "1".
std::string render_monomial(const Monomial& m, std::uint64_t coefficient = 1);
std::string render_polynomial(const KohnertPolynomial& f);

}  // namespace kohnert
