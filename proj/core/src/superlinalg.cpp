#include "superschur/superlinalg.hpp"

namespace superschur {

int KoszulContext::total_parity() const {
  int total = 0;
  for (int p : parities_) total ^= (p & 1);
  return total;
}

int KoszulContext::sign_before(std::size_t k, int p) const {
  if (!(p & 1)) return 1;
  int before = 0;
  for (std::size_t i = 0; i < k && i < parities_.size(); ++i) before ^= (parities_[i] & 1);
  return before ? -1 : 1;
}

int KoszulContext::permutation_sign(const std::vector<std::size_t>& order) const {
  if (order.size() != parities_.size()) {
    throw std::invalid_argument("KoszulContext::permutation_sign: order has wrong length");
  }
  // Each pair of factors whose relative order is reversed contributes (-1)^{|a||b|}.
  int exponent = 0;
  for (std::size_t s = 0; s < order.size(); ++s)
    for (std::size_t t = s + 1; t < order.size(); ++t)
      if (order[s] > order[t]) exponent ^= (parities_[order[s]] & parities_[order[t]] & 1);
  return exponent ? -1 : 1;
}

}  // namespace superschur
