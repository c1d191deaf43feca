#include "takagi/sets.hpp"

#include <stdexcept>

#include "takagi/differentials.hpp"
#include "takagi/errors.hpp"
#include "takagi/evaluator.hpp"

namespace takagi {

std::string to_string(SetId id) {
  switch (id) {
    case SetId::M: return "M";
    case SetId::A: return "A";
    case SetId::ScriptA: return "ScriptA";
  }
  return "ScriptA";
}

bool in_M(const DigitExpansion& e) { return pairs_sum_to_one_from(e, 1); }

std::optional<std::size_t> in_A(const DigitExpansion& e) { return min_alternating_witness(e); }

Rational a_identity_member(std::size_t m, const Integer& k) {
  if (m == 0) throw DomainError("A-identity index starts at 1");
  return Rational(Integer(4), 3 * pow2(m)) + Rational(k).scaled_pow2(-static_cast<long>(m - 1));
}

std::optional<std::pair<std::size_t, Integer>> a_identity_preimage(const DigitExpansion& e) {
  const auto m = in_A(e);
  if (!m) return std::nullopt;
  // a tail 1010... from index m is worth (4/3) 2^-m; a tail 0101... is worth
  // (4/3) 2^-(m+1)
  const std::size_t index = e.digit(*m) == 1 ? *m : *m + 1;
  const Rational offset = expansion_to_rational(e) - a_identity_member(index, 0);
  const Rational k = offset.scaled_pow2(static_cast<long>(index - 1));
  if (!k.is_integer()) return std::nullopt;
  return std::make_pair(index, k.num());
}

std::optional<SetWitness> in_script_A(const DigitExpansion& e) {
  const Classification c = classify(e);
  if (!c.witness) return std::nullopt;
  const std::size_t m = *c.witness;
  SetWitness w;
  w.set = SetId::ScriptA;
  w.m = m;
  w.dyadic_part = Rational(e.int_part()) + digit_head(e, m);
  w.scaled_point = shifted_tail(e, m - 1);
  if (!in_M(rational_to_expansion(w.scaled_point))) {
    throw std::logic_error("scaled tail of " + e.to_string() + " is not in M");
  }
  return w;
}

bool max_value_check(const DigitExpansion& e) { return takagi_exact(e) == Rational(2, 3); }

}  // namespace takagi
