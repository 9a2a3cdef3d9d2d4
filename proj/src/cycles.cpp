#include "lcylab/cycles.hpp"

#include <algorithm>
#include <limits>
#include <thread>

namespace lcylab::cycles {

const char* to_string(CycleErrorKind kind) {
  switch (kind) {
    case CycleErrorKind::TooShort: return "TooShort";
    case CycleErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case CycleErrorKind::NotMinusOne: return "NotMinusOne";
    case CycleErrorKind::LengthMismatch: return "LengthMismatch";
    case CycleErrorKind::BudgetExceeded: return "BudgetExceeded";
    case CycleErrorKind::InvalidSeed: return "InvalidSeed";
    case CycleErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "CycleError";
}

CurveCycle::CurveCycle(std::vector<Entry> selfints) : selfints_(std::move(selfints)) {
  if (selfints_.size() < 3)
    throw CycleError(CycleErrorKind::TooShort,
                     "cycle of length " + std::to_string(selfints_.size()));
}

std::string to_string(const CurveCycle& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

CurveCycle CycleSeed::cycle() const {
  if (kind == Kind::Hirzebruch) {
    if (n < 0) throw CycleError(CycleErrorKind::InvalidSeed, "Hirzebruch n = " + std::to_string(n));
    return CurveCycle({0, n, 0, -n});
  }
  if (b1 > -1 || b2 > -1 || b3 > -1)
    throw CycleError(CycleErrorKind::InvalidSeed, "triple entries must be <= -1");
  return CurveCycle({b1, b2, b3});
}

CurveCycle blow_up_node(const CurveCycle& cycle, std::size_t node_index) {
  const std::size_t k = cycle.size();
  if (node_index >= k)
    throw CycleError(CycleErrorKind::IndexOutOfRange,
                     "node " + std::to_string(node_index) + " of a " + std::to_string(k) +
                         "-cycle");
  std::vector<Entry> v(cycle.selfints());
  v[node_index] -= 1;
  v[(node_index + 1) % k] -= 1;
  v.insert(v.begin() + static_cast<long>(node_index + 1), -1);
  return CurveCycle(std::move(v));
}

CurveCycle contract_at(const CurveCycle& cycle, std::size_t index) {
  const std::size_t k = cycle.size();
  if (index >= k)
    throw CycleError(CycleErrorKind::IndexOutOfRange,
                     "index " + std::to_string(index) + " of a " + std::to_string(k) + "-cycle");
  if (k < 4) throw CycleError(CycleErrorKind::TooShort, "cannot contract a 3-cycle");
  if (cycle[index] != -1)
    throw CycleError(CycleErrorKind::NotMinusOne,
                     "entry " + std::to_string(index) + " is " + std::to_string(cycle[index]));
  std::vector<Entry> v(cycle.selfints());
  v[(index + k - 1) % k] += 1;
  v[(index + 1) % k] += 1;
  v.erase(v.begin() + static_cast<long>(index));
  return CurveCycle(std::move(v));
}

namespace {

// Writes the dihedral image (rotation, reflected) of src into dst.
void dihedral_image(const std::vector<Entry>& src, std::size_t rotation, bool reflected,
                    std::vector<Entry>& dst) {
  const std::size_t k = src.size();
  dst.resize(k);
  for (std::size_t i = 0; i < k; ++i)
    dst[i] = reflected ? src[(rotation + k - i) % k] : src[(rotation + i) % k];
}

}  // namespace

CurveCycle canonical_form(const CurveCycle& cycle) {
  const auto& src = cycle.selfints();
  std::vector<Entry> best(src), candidate;
  for (int refl = 0; refl < 2; ++refl)
    for (std::size_t r = 0; r < src.size(); ++r) {
      dihedral_image(src, r, refl == 1, candidate);
      if (candidate < best) best = candidate;
    }
  return CurveCycle(std::move(best));
}

namespace {

// Mismatch count for one alignment, giving up once it reaches cutoff.
std::size_t aligned_mismatch(const std::vector<Entry>& a, const std::vector<Entry>& b,
                             std::size_t rotation, bool reflected, std::size_t cutoff) {
  const std::size_t k = a.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < k && count < cutoff; ++i) {
    const Entry other = reflected ? b[(rotation + k - i) % k] : b[(rotation + i) % k];
    if (a[i] != other) ++count;
  }
  return count;
}

Alignment best_alignment_below(const std::vector<Entry>& a, const std::vector<Entry>& b,
                               std::size_t cutoff) {
  Alignment best{cutoff, 0, false};
  for (int refl = 0; refl < 2; ++refl)
    for (std::size_t r = 0; r < a.size(); ++r) {
      const std::size_t m = aligned_mismatch(a, b, r, refl == 1, best.mismatch);
      if (m < best.mismatch) best = {m, r, refl == 1};
    }
  return best;
}

}  // namespace

Alignment best_alignment(const CurveCycle& c1, const CurveCycle& c2) {
  if (c1.size() != c2.size())
    throw CycleError(CycleErrorKind::LengthMismatch,
                     std::to_string(c1.size()) + " vs " + std::to_string(c2.size()));
  return best_alignment_below(c1.selfints(), c2.selfints(), c1.size() + 1);
}

std::size_t dihedral_mismatch(const CurveCycle& c1, const CurveCycle& c2) {
  return best_alignment(c1, c2).mismatch;
}

Entry noether_invariant(const CurveCycle& cycle) {
  Entry sum = 0;
  for (Entry e : cycle.selfints()) sum += e;
  return sum + 3 * static_cast<Entry>(cycle.size());
}

namespace {

std::vector<CurveCycle> children_of(const std::vector<CurveCycle>& level, std::size_t begin,
                                    std::size_t end) {
  std::vector<CurveCycle> out;
  for (std::size_t c = begin; c < end; ++c)
    for (std::size_t node = 0; node < level[c].size(); ++node)
      out.push_back(canonical_form(blow_up_node(level[c], node)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<CurveCycle> next_level(const std::vector<CurveCycle>& level, unsigned jobs) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, level.size()));
  std::vector<std::vector<CurveCycle>> parts(workers);
  if (workers == 1) {
    parts[0] = children_of(level, 0, level.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(level.size(), w * chunk);
      const std::size_t end = std::min(level.size(), begin + chunk);
      threads.emplace_back([&, w, begin, end] { parts[w] = children_of(level, begin, end); });
    }
    for (auto& t : threads) t.join();
  }
  std::vector<CurveCycle> merged;
  for (auto& p : parts) merged.insert(merged.end(), p.begin(), p.end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace

std::vector<CurveCycle> enumerate_from_seed(const CycleSeed& seed, std::size_t max_len,
                                            const EnumerationOptions& options) {
  const CurveCycle start = seed.cycle();
  if (max_len < start.size())
    throw CycleError(CycleErrorKind::InvalidArgument,
                     "max_len " + std::to_string(max_len) + " below seed length");
  std::vector<CurveCycle> result;
  std::vector<CurveCycle> level{canonical_form(start)};
  while (true) {
    if (result.size() + level.size() > options.budget)
      throw CycleError(CycleErrorKind::BudgetExceeded,
                       "more than " + std::to_string(options.budget) + " canonical cycles");
    result.insert(result.end(), level.begin(), level.end());
    if (level.front().size() >= max_len) break;
    level = next_level(level, options.jobs);
  }
  return result;
}

std::vector<CurveCycle> enumerate_hirzebruch_family(std::size_t max_len, Entry n_max,
                                                    const EnumerationOptions& options) {
  if (max_len < 4 || n_max < 0)
    throw CycleError(CycleErrorKind::InvalidArgument, "need max_len >= 4 and n_max >= 0");
  std::vector<CurveCycle> all;
  for (Entry n = 0; n <= n_max; ++n) {
    EnumerationOptions remaining = options;
    remaining.budget = options.budget - std::min(options.budget, all.size());
    auto part = enumerate_from_seed(CycleSeed::hirzebruch(n), max_len, remaining);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

namespace {

struct LengthResult {
  std::size_t min_mismatch = std::numeric_limits<std::size_t>::max();
  std::size_t left = 0, right = 0;
  Alignment alignment;
};

LengthResult min_mismatch_at_length(const std::vector<const CurveCycle*>& lefts,
                                    const std::vector<const CurveCycle*>& rights, unsigned jobs) {
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, lefts.size()));
  std::vector<LengthResult> parts(workers);
  auto scan = [&](std::size_t w, std::size_t begin, std::size_t end) {
    LengthResult best;
    for (std::size_t l = begin; l < end; ++l)
      for (std::size_t r = 0; r < rights.size(); ++r) {
        const std::size_t cutoff = std::min(best.min_mismatch, lefts[l]->size() + 1);
        Alignment a = best_alignment_below(lefts[l]->selfints(), rights[r]->selfints(), cutoff);
        if (a.mismatch < best.min_mismatch) best = {a.mismatch, l, r, a};
      }
    parts[w] = best;
  };
  if (workers == 1) {
    scan(0, 0, lefts.size());
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (lefts.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = std::min(lefts.size(), w * chunk);
      threads.emplace_back(scan, w, begin, std::min(lefts.size(), begin + chunk));
    }
    for (auto& t : threads) t.join();
  }
  // Earlier chunks win ties, which matches the single-threaded scan order.
  LengthResult best = parts[0];
  for (std::size_t w = 1; w < workers; ++w)
    if (parts[w].min_mismatch < best.min_mismatch) best = parts[w];
  return best;
}

}  // namespace

LemmaReport verify_lemma(Entry b1, Entry b2, Entry b3, std::size_t max_len, Entry n_max,
                         const EnumerationOptions& options) {
  if (max_len < 4) throw CycleError(CycleErrorKind::InvalidArgument, "max_len must be >= 4");
  const auto left = enumerate_from_seed(CycleSeed::triple(b1, b2, b3), max_len, options);
  const auto right = enumerate_hirzebruch_family(max_len, n_max, options);

  std::map<std::size_t, std::vector<const CurveCycle*>> left_by_len, right_by_len;
  for (const auto& c : left) left_by_len[c.size()].push_back(&c);
  for (const auto& c : right) right_by_len[c.size()].push_back(&c);

  LemmaReport report;
  report.b1 = b1;
  report.b2 = b2;
  report.b3 = b3;
  report.max_len = max_len;
  report.n_max = n_max;
  report.ok = true;
  std::size_t global_min = std::numeric_limits<std::size_t>::max();
  for (std::size_t k = 4; k <= max_len; ++k) {
    const auto& ls = left_by_len[k];
    const auto& rs = right_by_len[k];
    report.family_sizes[k] = {ls.size(), rs.size()};
    if (ls.empty() || rs.empty()) continue;
    const LengthResult res = min_mismatch_at_length(ls, rs, options.jobs);
    report.per_length[k] = res.min_mismatch;
    if (res.min_mismatch < 3) report.ok = false;
    if (res.min_mismatch < global_min) {
      global_min = res.min_mismatch;
      report.witness = LemmaWitness{*ls[res.left], *rs[res.right], res.alignment};
    }
  }
  return report;
}

std::optional<fan2d::Fan2D> realize_as_fan(const CurveCycle& cycle) {
  const std::size_t k = cycle.size();
  struct V {
    Integer x, y;
  };
  std::vector<V> v{{1, 0}, {0, 1}};
  auto step = [&](std::size_t i, const V& prev, const V& cur) {
    const Integer a(static_cast<long>(cycle[i]));
    return V{-a * cur.x - prev.x, -a * cur.y - prev.y};
  };
  for (std::size_t i = 1; i + 1 < k; ++i) v.push_back(step(i, v[i - 1], v[i]));
  const V close0 = step(k - 1, v[k - 2], v[k - 1]);
  const V close1 = step(0, v[k - 1], v[0]);
  if (close0.x != v[0].x || close0.y != v[0].y || close1.x != v[1].x || close1.y != v[1].y)
    return std::nullopt;
  try {
    std::vector<std::pair<Integer, Integer>> rays;
    for (const auto& r : v) rays.emplace_back(r.x, r.y);
    auto fan = fan2d::make_fan(rays);
    const auto profile = fan2d::self_intersections(fan);
    for (std::size_t i = 0; i < k; ++i)
      if (profile.values[i] != Rational(static_cast<long>(cycle[i]))) return std::nullopt;
    return fan;
  } catch (const fan2d::FanError&) {
    return std::nullopt;
  }
}

}  // namespace lcylab::cycles
