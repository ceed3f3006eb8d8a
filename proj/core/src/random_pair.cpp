#include <random>
#include <set>

#include "toric/error.hpp"
#include "toric/io.hpp"

namespace toric {

namespace {

constexpr int kMaxAttempts = 10000;

long draw(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  return lo + static_cast<long>(rng() % span);
}

}  // namespace

ToricPair random_pair(std::size_t dim, std::size_t ray_count, unsigned denominator_bound,
                      std::uint64_t seed) {
  if (dim < 1 || dim > 4) throw ContractError("random pairs support dimension 1 to 4");
  if (ray_count < dim + 1) throw ContractError("need at least dim + 1 rays");
  if (dim == 1 && ray_count != 2) throw ContractError("dimension 1 has exactly two primitive rays");
  if (denominator_bound < 1) throw ContractError("denominator bound must be positive");

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    ToricPair pair;
    pair.dim = dim;
    pair.name = "random-d" + std::to_string(dim) + "-s" + std::to_string(seed);
    std::set<LatticeVector> seen;
    int draws = 0;
    while (pair.rays.size() < ray_count && draws++ < kMaxAttempts) {
      std::vector<Integer> coords;
      for (std::size_t k = 0; k < dim; ++k) coords.emplace_back(draw(rng, -2, 2));
      LatticeVector ray(std::move(coords));
      if (!is_primitive(ray) || !seen.insert(ray).second) continue;
      pair.rays.push_back(std::move(ray));
    }
    for (std::size_t i = 0; i < pair.rays.size(); ++i) {
      const long q = draw(rng, 1, denominator_bound);
      const long k = draw(rng, 1, q);
      pair.coeffs.push_back(make_rational(Integer(k), Integer(q)));
    }
    if (pair.rays.size() == ray_count && validate(pair).empty()) return pair;
  }
  throw Error("generation", "no valid pair after bounded retries");
}

}  // namespace toric
