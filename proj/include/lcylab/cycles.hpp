#pragma once

// Cycles of rational curves recorded by their self-intersection numbers, and
// the node blow-up calculus on them.
//
// Node i sits between entries i and i+1 (cyclically). Blowing it up inserts
// the new (-1)-entry at index i+1, so the index map after a blow-up is the
// same one star_subdivide uses for cone i of a fan.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcylab/fan2d.hpp"

namespace lcylab::cycles {

enum class CycleErrorKind {
  TooShort,
  IndexOutOfRange,
  NotMinusOne,
  LengthMismatch,
  BudgetExceeded,
  InvalidSeed,
  InvalidArgument,
};

const char* to_string(CycleErrorKind kind);

class CycleError : public std::runtime_error {
 public:
  CycleError(CycleErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  CycleErrorKind kind() const noexcept { return kind_; }

 private:
  CycleErrorKind kind_;
};

using Entry = std::int64_t;

class CurveCycle {
 public:
  /// Throws CycleError(TooShort) below three entries.
  explicit CurveCycle(std::vector<Entry> selfints);

  const std::vector<Entry>& selfints() const { return selfints_; }
  std::size_t size() const { return selfints_.size(); }
  Entry operator[](std::size_t i) const { return selfints_[i]; }

  /// Exact entrywise equality; use canonical_form for equality up to symmetry.
  friend bool operator==(const CurveCycle&, const CurveCycle&) = default;
  /// Shorter cycles first, then lexicographic.
  friend bool operator<(const CurveCycle& a, const CurveCycle& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.selfints_ < b.selfints_;
  }

 private:
  std::vector<Entry> selfints_;
};

std::string to_string(const CurveCycle& c);

/// Either a triangle (b1, b2, b3) of negative curves or the boundary
/// (0, n, 0, -n) of a Hirzebruch surface.
struct CycleSeed {
  enum class Kind { Triple, Hirzebruch };
  Kind kind = Kind::Triple;
  Entry b1 = -1, b2 = -1, b3 = -1;
  Entry n = 0;

  static CycleSeed triple(Entry b1, Entry b2, Entry b3) {
    return {Kind::Triple, b1, b2, b3, 0};
  }
  static CycleSeed hirzebruch(Entry n) { return {Kind::Hirzebruch, 0, 0, 0, n}; }

  /// Throws CycleError(InvalidSeed) on entries > -1 or n < 0.
  CurveCycle cycle() const;
};

CurveCycle blow_up_node(const CurveCycle& cycle, std::size_t node_index);
CurveCycle contract_at(const CurveCycle& cycle, std::size_t index);
CurveCycle canonical_form(const CurveCycle& cycle);

/// Dihedral transform of the second cycle used to compare it to the first:
/// position i is matched with index (rotation + i) or (rotation - i) mod k.
struct Alignment {
  std::size_t mismatch = 0;
  std::size_t rotation = 0;
  bool reflected = false;
};

/// Best alignment; ties resolved by smallest (reflected, rotation).
Alignment best_alignment(const CurveCycle& c1, const CurveCycle& c2);
std::size_t dihedral_mismatch(const CurveCycle& c1, const CurveCycle& c2);

/// Sum of entries plus three times the length; blow-ups preserve it.
Entry noether_invariant(const CurveCycle& cycle);

struct EnumerationOptions {
  std::size_t budget = 1'000'000;
  unsigned jobs = 1;
};

/// Canonical forms reachable from the seed by node blow-ups, of length at most
/// max_len, sorted (shorter first, then lexicographic).
std::vector<CurveCycle> enumerate_from_seed(const CycleSeed& seed, std::size_t max_len,
                                            const EnumerationOptions& options = {});

/// Union over 0 <= n <= n_max of the Hirzebruch-seeded families.
std::vector<CurveCycle> enumerate_hirzebruch_family(std::size_t max_len, Entry n_max,
                                                    const EnumerationOptions& options = {});

struct LemmaWitness {
  CurveCycle left;
  CurveCycle right;
  Alignment alignment;
};

struct LemmaReport {
  bool ok = false;
  Entry b1 = 0, b2 = 0, b3 = 0;
  std::map<std::size_t, std::size_t> per_length;
  /// Number of (left, right) canonical cycles compared at each length.
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> family_sizes;
  std::optional<LemmaWitness> witness;
  std::size_t max_len = 0;
  Entry n_max = 0;
};

/// For every length 4..max_len, the least dihedral mismatch between a cycle
/// grown from (b1, b2, b3) and a cycle grown from a Hirzebruch boundary with
/// n <= n_max. ok iff every least mismatch is at least three.
LemmaReport verify_lemma(Entry b1, Entry b2, Entry b3, std::size_t max_len, Entry n_max,
                         const EnumerationOptions& options = {});

/// Rebuilds rays from v0 = (1,0), v1 = (0,1) via v_{i+1} = -a_i v_i - v_{i-1};
/// empty unless the rays close up into a complete fan with this profile.
std::optional<fan2d::Fan2D> realize_as_fan(const CurveCycle& cycle);

}  // namespace lcylab::cycles
