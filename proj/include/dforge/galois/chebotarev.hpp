#ifndef DFORGE_GALOIS_CHEBOTAREV_HPP
#define DFORGE_GALOIS_CHEBOTAREV_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "dforge/cover/cover.hpp"
#include "dforge/galois/factor.hpp"
#include "dforge/galois/oracle.hpp"

namespace dforge {

struct ChebotarevConfig {
  int trials = 500;
  std::uint64_t seed = 1;
  /// residue field degrees k of the specializations over F_{q^k}
  std::vector<unsigned> ext_degrees{1, 2, 3, 4};
  /// 0: hardware concurrency capped by DRINFELD_FORGE_THREADS
  unsigned threads = 0;
};

struct ChebotarevReport {
  std::map<CycleType, std::uint64_t> observed;
  GroupOracle oracle;
  bool containment;
  bool coverage;  // every non-identity oracle type observed
  double distance;  // chi-square statistic over oracle classes
  double max_deviation;  // largest |observed - expected| frequency, identity exempt
  std::uint64_t discarded;
  std::uint64_t samples;
  std::vector<CycleType> outside;
  std::vector<CycleType> missing;
};

inline unsigned trial_threads(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DRINFELD_FORGE_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
  }
  return n;
}

/// One specialization: random k, then T -> t0 avoiding 0 and the roots of N,
/// x -> x0, factor in y. Empty if the sample drops degree or is not squarefree.
inline std::optional<CycleType> chebotarev_sample(const CoverPoly& cp, const std::vector<const Embedding*>& embeds,
                                                  const std::vector<const GaloisField*>& fields, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, fields.size() - 1);
  const std::size_t idx = pick(rng);
  const GaloisField& big = *fields[idx];
  const Embedding& e = *embeds[idx];
  std::uniform_int_distribution<std::uint64_t> el(0, big.order() - 1);
  Gf t0 = Gf::zero(&big);
  do {
    t0 = Gf(&big, static_cast<Gf::Code>(el(rng)));
  } while (t0.is_zero() || cp.n.eval_in(t0, e).is_zero());
  const Gf x0(&big, static_cast<Gf::Code>(el(rng)));
  const Poly<Gf> f = specialize(cp, e, t0, x0);
  if (f.degree() != cp.poly.y_degree() || !is_squarefree(f)) return std::nullopt;
  std::vector<int> degs;
  for (const auto& [g, m] : factor_ff(f).factors) degs.push_back(g.degree());
  return CycleType(std::move(degs));
}

/// Frobenius cycle types of random specializations against the PSL(2, q^2) oracle.
inline ChebotarevReport chebotarev_report(const CoverPoly& cp, const ChebotarevConfig& cfg,
                                          const GroupOracle& oracle) {
  if (cfg.trials < 1) throw PreconditionError("trials must be positive");
  if (cfg.ext_degrees.empty()) throw PreconditionError("no extension degrees to sample from");
  const GaloisField& small = *cp.n.context();
  std::vector<const GaloisField*> fields;
  std::vector<Embedding> embed_store;
  embed_store.reserve(cfg.ext_degrees.size());
  for (unsigned k : cfg.ext_degrees) {
    if (k == 0) throw PreconditionError("extension degree must be positive");
    fields.push_back(&GaloisField::get(small.characteristic(), small.degree() * k));
    embed_store.emplace_back(small, *fields.back());
  }
  std::vector<const Embedding*> embeds;
  for (const auto& e : embed_store) embeds.push_back(&e);

  const auto trials = static_cast<std::size_t>(cfg.trials);
  std::vector<std::optional<CycleType>> results(trials);
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t i = start; i < trials; i += stride) {
      std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32U),
                        static_cast<std::uint32_t>(i)};
      std::mt19937_64 rng(seq);
      results[i] = chebotarev_sample(cp, embeds, fields, rng);
    }
  };
  const unsigned nthreads = std::min<unsigned>(trial_threads(cfg.threads), static_cast<unsigned>(trials));
  if (nthreads <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work, t, nthreads);
    for (auto& th : pool) th.join();
  }

  ChebotarevReport r{{}, oracle, true, true, 0.0, 0.0, 0, 0, {}, {}};
  for (const auto& res : results) {
    if (!res) {
      ++r.discarded;
      continue;
    }
    ++r.observed[*res];
    ++r.samples;
  }
  if (r.samples == 0) throw ConsistencyError("every specialization was degenerate");
  for (const auto& [ct, n] : r.observed)
    if (!oracle.classes.count(ct)) {
      r.containment = false;
      r.outside.push_back(ct);
    }
  const auto total = static_cast<double>(r.samples);
  for (const auto& [ct, n] : oracle.classes) {
    const auto it = r.observed.find(ct);
    const double obs = it == r.observed.end() ? 0.0 : static_cast<double>(it->second);
    const double expected = total * static_cast<double>(n) / static_cast<double>(oracle.order);
    r.distance += (obs - expected) * (obs - expected) / expected;
    if (ct.is_identity()) continue;
    if (obs == 0.0) {
      r.coverage = false;
      r.missing.push_back(ct);
    }
    r.max_deviation = std::max(r.max_deviation, std::abs(obs - expected) / total);
  }
  return r;
}

inline ChebotarevReport chebotarev_report(const CoverPoly& cp, const ChebotarevConfig& cfg) {
  const std::uint64_t q = cp.q();
  return chebotarev_report(cp, cfg, psl_oracle(q * q));
}

}  // namespace dforge

#endif
