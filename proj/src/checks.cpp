#include "precedent/checks.hpp"

#include <algorithm>
#include <set>

#include "precedent/generators.hpp"
#include "precedent/goal.hpp"
#include "precedent/oracle.hpp"

namespace precedent {

namespace {

template <typename CaseBase>
std::vector<CaseBase> neighbourhood_bases(const CaseBase& cb) {
  std::vector<CaseBase> out{cb};
  if (cb.size() > 1)
    for (std::size_t i = 0; i < cb.size(); ++i) {
      const std::size_t pick[] = {i};
      out.push_back(cb.subset(pick));
    }
  return out;
}

std::string case_list(const FactorCaseBase& cb) {
  std::string out;
  for (const auto& c : cb.cases()) out += "\n  case " + c.name + ": " + describe(cb.hierarchy(), c.facts);
  return out;
}

std::string case_list(const DimCaseBase& cb) {
  std::string out;
  for (const auto& c : cb.cases()) out += "\n  case " + c.name + ": " + describe(cb.hierarchy(), c.values);
  return out;
}

std::string case_list(const FlatCaseBase& cb) {
  std::string out;
  for (const auto& c : cb.cases()) {
    out += "\n  case " + c.name + " (" + std::string(to_string(c.outcome)) + "):";
    for (std::size_t i = 0; i < cb.factor_count(); ++i)
      out += " " + cb.factor(i) + "=" + (*c.facts[i] ? "t" : "f");
  }
  return out;
}

// Subsets of the case positions as bitmasks, capped at 2^10 case bases.
std::vector<std::vector<std::size_t>> subsets(std::size_t n) {
  const std::size_t m = std::min<std::size_t>(n, 10);
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < m; ++i)
      if ((mask >> i) & 1U) pick.push_back(i);
    out.push_back(std::move(pick));
  }
  return out;
}

// All partial assignments (t, f, undefined) to the given factors; 3^n situations.
template <typename Fn>
void for_each_partial(std::size_t factor_count, std::span<const std::size_t> factors, Fn&& fn) {
  std::vector<int> digit(factors.size(), 0);
  while (true) {
    FactSituation f(factor_count);
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (digit[i] > 0) f.set(factors[i], digit[i] == 2);
    fn(f);
    std::size_t k = 0;
    while (k < digit.size() && ++digit[k] == 3) digit[k++] = 0;
    if (k == digit.size()) break;
  }
}

}  // namespace

CheckReport check_oracle(const FactorCaseBase& cb, std::span<const FactSituation> queries,
                         const CheckOptions& options) {
  CheckReport report{"oracle", true, 0, {}};
  const auto& h = cb.hierarchy();
  auto compare = [&](const FactorCaseBase& base, const FactSituation& f, Literal l) {
    ++report.instances;
    const bool fast = hrm_verdict(base, f, l);
    const bool slow = reference_hrm_forces(base, f, l);
    if (fast == slow || !report.passed) return;
    report.passed = false;
    report.counterexample = "goal " + format_literal(h, l) + ": hrm_forces=" + (fast ? "true" : "false") +
                            " reference=" + (slow ? "true" : "false") + "\n  situation " +
                            describe(h, f) + case_list(base);
  };
  std::vector<FactSituation> situations(queries.begin(), queries.end());
  std::size_t basic = 0;
  for (std::size_t i = 0; i < h.size(); ++i) basic += h.is_basic(i) ? 1 : 0;
  if (basic <= options.exhaustive_cap)
    for (auto f : enumerate_query_situations(h, options.exhaustive_cap)) situations.push_back(std::move(f));
  for (const auto& base : neighbourhood_bases(cb))
    for (const auto& f : situations)
      for (std::size_t i = 0; i < h.size(); ++i) {
        compare(base, f, {i, false});
        compare(base, f, {i, true});
      }
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto base = random_factor_case_base(h, rng, 1 + rng.below(4));
    for (int q = 0; q < 4; ++q) compare(base, random_query_situation(h, rng), random_literal(h, rng));
  }
  return report;
}

CheckReport check_oracle(const DimCaseBase& cb, std::span<const DimSituation> queries,
                         const CheckOptions& options) {
  CheckReport report{"oracle", true, 0, {}};
  const auto& h = cb.hierarchy();
  auto compare = [&](const DimCaseBase& base, const DimSituation& x, const BoundClaim& c) {
    ++report.instances;
    const bool fast = dhrm_bound_verdict(base, x, c);
    const bool slow = reference_dhrm_bound(base, x, c);
    if (fast == slow || !report.passed) return;
    report.passed = false;
    report.counterexample = "claim " + format_bound(h, c) + ": dhrm_bound=" + (fast ? "true" : "false") +
                            " reference=" + (slow ? "true" : "false") + "\n  situation " +
                            describe(h, x) + case_list(base);
  };
  // Claim values: the whole value set when finite, else every value seen in the document plus 0..4.
  std::vector<std::vector<Value>> claim_values(h.size());
  for (std::size_t d = 0; d < h.size(); ++d) {
    const auto& order = h.order(d);
    if (order.bounded()) {
      claim_values[d] = order.values();
      continue;
    }
    std::set<Value> seen{0, 1, 2, 3, 4};
    for (const auto& c : cb.cases()) seen.insert(*c.values[d]);
    for (const auto& x : queries)
      if (x.defined(d)) seen.insert(*x[d]);
    claim_values[d].assign(seen.begin(), seen.end());
  }
  for (const auto& base : neighbourhood_bases(cb))
    for (const auto& x : queries)
      for (std::size_t d = 0; d < h.size(); ++d)
        for (Value v : claim_values[d]) {
          compare(base, x, {d, v, BoundDirection::Lower});
          compare(base, x, {d, v, BoundDirection::Upper});
        }
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto base = random_dim_case_base(h, rng, 1 + rng.below(4));
    for (int q = 0; q < 4; ++q) compare(base, random_dim_situation(h, rng, 85, 20), random_claim(h, rng));
  }
  return report;
}

CheckReport check_flat_reduction(const FactorCaseBase& cb, const CheckOptions& options) {
  CheckReport report{"flat-reduction", true, 0, {}};
  const auto& h = cb.hierarchy();
  const auto flat = flatten(cb);  // throws ModelError for non-flat shapes
  const Literal pi = h.pi();
  auto compare = [&](const FactorCaseBase& base, const FlatCaseBase& flat_base, const FactSituation& f) {
    const auto projected = project(f, flat.factors);
    for (Side side : {Side::Pi, Side::Delta}) {
      ++report.instances;
      const bool hier = hrm_verdict(base, f, side == Side::Pi ? pi : negate(pi));
      const bool rm = rm_verdict(flat_base, projected, side);
      if (hier == rm || !report.passed) continue;
      report.passed = false;
      report.counterexample = "side " + std::string(to_string(side)) + ": hrm=" + (hier ? "true" : "false") +
                              " rm=" + (rm ? "true" : "false") + "\n  situation " + describe(h, f) +
                              case_list(base);
    }
  };
  if (flat.factors.size() <= std::min<std::size_t>(options.exhaustive_cap, 8)) {
    for (const auto& pick : subsets(cb.size())) {
      const auto base = cb.subset(pick);
      const auto flat_base = flat.cb.subset(pick);
      for_each_partial(h.size(), flat.factors, [&](const FactSituation& f) { compare(base, flat_base, f); });
    }
  }
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto base = random_factor_case_base(h, rng, 1 + rng.below(4));
    const auto flat_base = flatten(base).cb;
    for (int q = 0; q < 4; ++q) {
      auto f = random_query_situation(h, rng, 85, 0);
      compare(base, flat_base, f);
    }
  }
  return report;
}

CheckReport check_flat_reduction(const DimCaseBase& cb, const CheckOptions& options) {
  CheckReport report{"flat-reduction", true, 0, {}};
  const auto& h = cb.hierarchy();
  const auto flat = flatten(cb);
  auto compare = [&](const DimCaseBase& base, const FlatDimCaseBase& flat_base, const DimSituation& x) {
    const auto projected = project(x, flat.dimensions);
    for (Side side : {Side::Pi, Side::Delta}) {
      ++report.instances;
      const bool hier = dhrm_outcome_verdict(base, x, side);
      const bool drm = drm_verdict(flat_base, projected, side);
      if (hier == drm || !report.passed) continue;
      report.passed = false;
      report.counterexample = "side " + std::string(to_string(side)) + ": dhrm=" + (hier ? "true" : "false") +
                              " drm=" + (drm ? "true" : "false") + "\n  situation " + describe(h, x) +
                              case_list(base);
    }
  };
  // Exhaustive over completions of the basic dimensions when every one is finite.
  std::uint64_t product = 1;
  bool finite = true;
  for (std::size_t d : flat.dimensions) {
    if (!h.order(d).bounded()) {
      finite = false;
      break;
    }
    product *= h.order(d).values().size();
    if (product > 4096) {
      finite = false;
      break;
    }
  }
  if (finite) {
    for (const auto& pick : subsets(cb.size())) {
      const auto base = cb.subset(pick);
      const auto flat_base = flat.cb.subset(pick);
      for (std::uint64_t code = 0; code < product; ++code) {
        DimSituation x(h.size());
        std::uint64_t rest = code;
        for (std::size_t d : flat.dimensions) {
          const auto values = h.order(d).values();
          x.set(d, values[rest % values.size()]);
          rest /= values.size();
        }
        compare(base, flat_base, x);
      }
    }
  }
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    const auto base = random_dim_case_base(h, rng, 1 + rng.below(4));
    const auto flat_base = flatten(base).cb;
    for (int q = 0; q < 4; ++q) compare(base, flat_base, random_dim_situation(h, rng, 100, 0));
  }
  return report;
}

CheckReport check_encoding(const FlatCaseBase& cb, const CheckOptions& options) {
  CheckReport report{"encoding", true, 0, {}};
  const std::size_t n = cb.factor_count();
  auto compare = [&](const FlatCaseBase& base, const FlatDimCaseBase& encoded, const FactSituation& f) {
    const auto x = encode_situation(f);
    for (Side side : {Side::Pi, Side::Delta}) {
      ++report.instances;
      const bool rm = rm_verdict(base, f, side);
      const bool drm = drm_verdict(encoded, x, side);
      if (rm == drm || !report.passed) continue;
      report.passed = false;
      std::string sit;
      for (std::size_t i = 0; i < n; ++i) sit += " " + base.factor(i) + "=" + (*f[i] ? "t" : "f");
      report.counterexample = "side " + std::string(to_string(side)) + ": rm=" + (rm ? "true" : "false") +
                              " drm=" + (drm ? "true" : "false") + "\n  situation" + sit + case_list(base);
    }
  };
  auto truth_table = [&](const FlatCaseBase& base) {
    const auto encoded = encode_factors_as_dimensions(base);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      FactSituation f(n);
      for (std::size_t i = 0; i < n; ++i) f.set(i, ((mask >> i) & 1U) != 0);
      compare(base, encoded, f);
    }
  };
  if (n <= options.exhaustive_cap) {
    for (const auto& pick : subsets(cb.size())) truth_table(cb.subset(pick));
  }
  Rng rng(options.seed);
  std::vector<Polarity> polarity(n);
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) {
    polarity[i] = cb.polarity(i);
    names[i] = cb.factor(i);
  }
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<FlatCase> cases;
    for (std::size_t c = 0, k = 1 + rng.below(4); c < k; ++c)
      cases.push_back({"C" + std::to_string(c + 1), random_complete_situation(n, rng),
                       rng.percent(50) ? Side::Pi : Side::Delta});
    const FlatCaseBase base(names, polarity, std::move(cases));
    const auto encoded = encode_factors_as_dimensions(base);
    for (int q = 0; q < 4; ++q) compare(base, encoded, random_complete_situation(n, rng));
  }
  return report;
}

}  // namespace precedent
