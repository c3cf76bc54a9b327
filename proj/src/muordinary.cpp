#include "newtonkit/muordinary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace newtonkit {

SlopeProfile::SlopeProfile(std::vector<Rational> slopes, std::vector<std::int64_t> mults, bool polarized)
    : slopes_(std::move(slopes)), mults_(std::move(mults)), polarized_(polarized) {
  if (slopes_.empty()) throw DomainError("slope profile is empty");
  if (slopes_.size() != mults_.size()) throw DomainError("slopes and multiplicities differ in length");
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (slopes_[i] < 0 || slopes_[i] > 1) throw DomainError("slope " + to_string(slopes_[i]) + " outside [0, 1]");
    if (mults_[i] <= 0) throw DomainError("multiplicities must be positive");
    if (i > 0 && !(slopes_[i - 1] > slopes_[i])) throw DomainError("slopes must be strictly descending");
  }
  if (polarized_ && !is_self_dual()) {
    throw DomainError("profile is flagged polarized but lambda_i + lambda_{r+1-i} != 1");
  }
}

SlopeProfile SlopeProfile::normalized(std::vector<std::pair<Rational, std::int64_t>> parts, bool polarized) {
  std::map<Rational, std::int64_t, std::greater<>> merged;
  for (auto& [slope, mult] : parts) {
    if (mult < 0) throw DomainError("negative multiplicity");
    merged[slope] += mult;
  }
  std::vector<Rational> slopes;
  std::vector<std::int64_t> mults;
  for (const auto& [slope, mult] : merged) {
    if (mult == 0) continue;
    slopes.push_back(slope);
    mults.push_back(mult);
  }
  return SlopeProfile(std::move(slopes), std::move(mults), polarized);
}

bool SlopeProfile::is_self_dual() const {
  const std::size_t r = slopes_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (slopes_[i] + slopes_[r - 1 - i] != 1 || mults_[i] != mults_[r - 1 - i]) return false;
  }
  return true;
}

std::vector<std::int64_t> SlopeProfile::heights() const {
  std::vector<std::int64_t> h(mults_.size());
  std::partial_sum(mults_.begin(), mults_.end(), h.begin());
  return h;
}

std::int64_t SlopeProfile::total_height() const { return heights().back(); }

SlopeProfile profile_from_newton(const RatVec& nu, std::size_t embedding_dim) {
  std::vector<std::pair<Rational, std::int64_t>> parts;
  if (2 * nu.size() == embedding_dim) {
    const Rational half(1, 2);
    for (const auto& x : nu) {
      parts.emplace_back(half + x, 1);
      parts.emplace_back(half - x, 1);
    }
  } else if (nu.size() == embedding_dim) {
    for (const auto& x : nu) parts.emplace_back(x, 1);
  } else {
    throw DomainError("Newton point has " + std::to_string(nu.size()) + " coordinates; expected " +
                      std::to_string(embedding_dim / 2) + " or " + std::to_string(embedding_dim));
  }
  auto p = SlopeProfile::normalized(std::move(parts), false);
  if (p.is_self_dual()) p = SlopeProfile(p.slopes(), p.mults(), true);
  return p;
}

DegreeData degrees(const SlopeProfile& profile) {
  DegreeData dd{profile, {}, std::nullopt};
  Rational acc = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    acc += profile.slopes()[k] * profile.mults()[k];
    dd.d.push_back(acc);
  }
  if (profile.size() >= 2) {
    Rational gap = profile.slopes()[0] - profile.slopes()[1];
    for (std::size_t k = 1; k + 1 < profile.size(); ++k) {
      gap = std::min(gap, Rational(profile.slopes()[k] - profile.slopes()[k + 1]));
    }
    dd.delta = gap / 4;
  }
  return dd;
}

Rational max_degree_bound(const SlopeProfile& profile, std::int64_t h) {
  if (h < 0 || h > profile.total_height()) {
    throw DomainError("height " + std::to_string(h) + " outside [0, " + std::to_string(profile.total_height()) + "]");
  }
  Rational acc = 0;
  std::int64_t below = 0;
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const std::int64_t take = std::min(profile.mults()[k], h - below);
    if (take <= 0) break;
    acc += profile.slopes()[k] * take;
    below += take;
  }
  return acc;
}

UniquenessCheck check_uniqueness(const DegreeData& dd, std::size_t i) {
  const auto& profile = dd.profile;
  if (i >= profile.size()) throw DomainError("index " + std::to_string(i + 1) + " out of range");
  UniquenessCheck result;
  if (!dd.delta) return result;

  const auto hi = profile.heights()[i];
  const auto total = profile.total_height();
  const Rational budget = 2 * (dd.d[i] - *dd.delta);
  for (std::int64_t h = 0; h < hi; ++h) {
    if (2 * hi - h > total) continue;
    if (max_degree_bound(profile, h) + max_degree_bound(profile, 2 * hi - h) > budget) {
      result.holds = false;
      result.violating_height = h;
      return result;
    }
  }
  return result;
}

SplitProfile next_to_max_profile(const SlopeProfile& profile, std::size_t i, std::int64_t dh) {
  if (!profile.polarized()) throw DomainError("next-to-maximal split needs a polarized profile");
  const std::size_t r = profile.size();
  if (r < 2 || i + 1 >= r) throw DomainError("split index " + std::to_string(i + 1) + " out of range");
  if (dh <= 0) throw DomainError("split height must be positive");

  std::vector<std::pair<Rational, std::int64_t>> parts;
  for (std::size_t k = 0; k < r; ++k) parts.emplace_back(profile.slopes()[k], profile.mults()[k]);

  const auto split_at = [&](std::size_t k) {
    parts[k].second -= dh;
    parts[k + 1].second -= dh;
    parts.emplace_back((profile.slopes()[k] + profile.slopes()[k + 1]) / 2, 2 * dh);
  };
  const std::size_t dual = r - 2 - i;
  split_at(i);
  if (dual != i) split_at(dual);
  for (const auto& [slope, mult] : parts) {
    if (mult < 0) throw DomainError("split height " + std::to_string(dh) + " exceeds a neighbouring multiplicity");
  }
  return {SlopeProfile::normalized(std::move(parts), true), SplitProvenance{profile, i, dh}};
}

std::vector<ModifiedDegree> modified_degrees(const SplitProfile& split) {
  if (!split.provenance) throw DomainError("profile has no split provenance");
  const auto& [original, i0, dh] = *split.provenance;
  const std::size_t r = original.size();
  if (i0 + 1 >= r) throw DomainError("split index out of range");

  const auto d = degrees(original).d;
  const auto h = original.heights();
  const auto& lambda = original.slopes();
  const std::size_t dual = r - 2 - i0;

  std::map<std::int64_t, ModifiedDegree> by_height;
  const auto put = [&](std::int64_t height, Rational value, std::string label) {
    by_height.try_emplace(height, ModifiedDegree{height, std::move(value), std::move(label)});
  };
  for (std::size_t k = 0; k < r; ++k) {
    const auto name = std::to_string(k + 1);
    if (k == i0 || k == dual) {
      put(h[k] - dh, d[k] - dh * lambda[k], "s_" + name);
      put(h[k] + dh, d[k] + dh * lambda[k + 1], "s'_" + name);
    } else {
      put(h[k], d[k], "s_" + name);
    }
  }
  std::vector<ModifiedDegree> out;
  for (auto& [height, s] : by_height) {
    if (height > 0) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace newtonkit
