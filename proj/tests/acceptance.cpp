// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>

#include "lcylab/cycles.hpp"
#include "lcylab/fan2d.hpp"
#include "lcylab/lcverify.hpp"
#include "lcylab/poly.hpp"

using namespace lcylab;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::vector<std::array<cycles::Entry, 3>> seeds() {
  return {{-1, -1, -1}, {-2, -1, -1}, {-2, -2, -1}};
}

Outcome lemma_bruteforce() {
  const auto start = std::chrono::steady_clock::now();
  cycles::EnumerationOptions opts;
  opts.jobs = std::max(1U, std::thread::hardware_concurrency());
  std::ostringstream d;
  bool pass = true;
  for (const auto& b : seeds()) {
    const auto r = cycles::verify_lemma(b[0], b[1], b[2], 9, 11, opts);
    std::size_t least = SIZE_MAX;
    for (const auto& [len, m] : r.per_length) least = std::min(least, m);
    pass = pass && r.ok && least >= 3 && r.per_length.size() == 6;
    d << "(" << b[0] << "," << b[1] << "," << b[2] << ") min " << least << "; ";
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  pass = pass && secs < 60.0;
  d << "n_max=11 in " << secs << "s; ";
  for (const auto& b : seeds()) {
    const auto r = cycles::verify_lemma(b[0], b[1], b[2], 9, 22, opts);
    pass = pass && r.ok;
    d << (r.ok ? "ok " : "FAILED ");
  }
  d << "at n_max=22";
  return {pass, d.str()};
}

Outcome conservation() {
  std::mt19937 rng(20260101);
  std::size_t bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const bool hirz = trial % 2 == 0;
    cycles::CurveCycle c = hirz ? cycles::CycleSeed::hirzebruch(rng() % 12).cycle()
                                : cycles::CycleSeed::triple(-1 - static_cast<long>(rng() % 3),
                                                            -1 - static_cast<long>(rng() % 3),
                                                            -1 - static_cast<long>(rng() % 3))
                                      .cycle();
    const cycles::Entry expected =
        hirz ? 12 : c[0] + c[1] + c[2] + 9;
    const int steps = static_cast<int>(rng() % 12);
    for (int s = 0; s < steps; ++s) c = cycles::blow_up_node(c, rng() % c.size());
    if (cycles::noether_invariant(c) != expected) ++bad;
  }
  return {bad == 0, "1000 sequences, " + std::to_string(bad) + " violations"};
}

struct SmoothCorpusEntry {
  fan2d::Fan2D fan;
  std::vector<cycles::Entry> profile;  // tracked through blow_up_node
};

std::vector<SmoothCorpusEntry> smooth_corpus(bool& square_ok) {
  std::mt19937 rng(424242);
  std::vector<SmoothCorpusEntry> out;
  square_ok = true;
  auto as_cycle = [](const fan2d::Fan2D& f) {
    std::vector<cycles::Entry> v;
    for (const auto& q : fan2d::self_intersections(f).values) v.push_back(q.get_num().get_si());
    return cycles::CurveCycle(v);
  };
  for (int trial = 0; trial < 1000; ++trial) {
    fan2d::Fan2D f = trial % 3 == 0
                         ? fan2d::standard_fan(fan2d::StandardFan::plane())
                         : fan2d::standard_fan(fan2d::StandardFan::hirzebruch(rng() % 6));
    const int steps = 1 + static_cast<int>(rng() % 10);
    for (int s = 0; s < steps; ++s) {
      const std::size_t cone = rng() % f.size();
      const auto before = as_cycle(f);
      f = fan2d::star_subdivide(f, cone);
      if (!(as_cycle(f) == cycles::blow_up_node(before, cone))) square_ok = false;
    }
    out.push_back({f, as_cycle(f).selfints()});
  }
  return out;
}

Outcome commuting_square() {
  bool ok = false;
  const auto corpus = smooth_corpus(ok);
  return {ok, std::to_string(corpus.size()) + " fans, every subdivision step compared"};
}

Outcome smooth_identity() {
  bool ignored = false;
  const auto corpus = smooth_corpus(ignored);
  std::size_t bad = 0;
  for (const auto& e : corpus) {
    const auto& f = e.fan;
    const auto prof = fan2d::self_intersections(f).values;
    Rational sum = 0;
    for (const auto& q : prof) sum += q;
    bool ok = fan2d::is_smooth(f) && sum == Rational(12 - 3 * static_cast<long>(f.size()));
    for (std::size_t i = 0; i < f.size(); ++i) {
      const auto& prev = f.cyclic(i, -1);
      const auto& next = f.cyclic(i, 1);
      const auto& v = f.ray(i);
      const Integer a = prof[i].get_num();
      if (!is_integral(prof[i]) || prev.x() + next.x() != -a * v.x() ||
          prev.y() + next.y() != -a * v.y())
        ok = false;
    }
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(corpus.size()) + " fans, " + std::to_string(bad) + " violations"};
}

Outcome realization() {
  const auto hirz = cycles::enumerate_hirzebruch_family(9, 11);
  std::size_t hirz_ok = 0;
  for (const auto& c : hirz) hirz_ok += cycles::realize_as_fan(c).has_value();
  std::size_t triple_total = 0, triple_ok = 0;
  for (const auto& b : seeds()) {
    for (const auto& c :
         cycles::enumerate_from_seed(cycles::CycleSeed::triple(b[0], b[1], b[2]), 9)) {
      ++triple_total;
      triple_ok += cycles::realize_as_fan(c).has_value();
    }
  }
  return {hirz_ok == hirz.size() && triple_ok == 0 && !hirz.empty(),
          std::to_string(hirz_ok) + "/" + std::to_string(hirz.size()) + " Hirzebruch, " +
              std::to_string(triple_ok) + "/" + std::to_string(triple_total) + " triple"};
}

Outcome example(lcverify::ExampleId id, std::vector<std::string> required) {
  const auto report = lcverify::verify_example(id);
  std::string failed;
  for (const auto& c : report.checks)
    if (!c.passed) failed += " " + c.name;
  for (const auto& name : required) {
    bool found = false;
    for (const auto& c : report.checks) found = found || c.name == name;
    if (!found) failed += " missing:" + name;
  }
  return {failed.empty(), std::to_string(report.checks.size()) + " checks" +
                              (failed.empty() ? "" : ", failed:" + failed)};
}

Outcome classifier_table() {
  using namespace lcverify;
  auto d = [](std::vector<int> deg, bool m3) {
    QuarticCaseDescriptor q;
    q.component_degrees = std::move(deg);
    q.has_mult3_point = m3;
    return q;
  };
  auto pc = [&](bool smooth) {
    auto q = d({1, 3}, false);
    q.reducible = ReducibleDetail{smooth, true};
    return q;
  };
  auto irr = [&](NodalLocus l, bool m3) {
    auto q = d({4}, m3);
    q.irreducible = IrreducibleDetail{l};
    return q;
  };
  const std::vector<std::pair<QuarticCaseDescriptor, VerdictValue>> table{
      {irr(NodalLocus::None, true), VerdictValue::ClusterType},
      {d({1, 1, 2}, false), VerdictValue::ClusterType},
      {d({2, 2}, false), VerdictValue::ClusterType},
      {pc(true), VerdictValue::NotClusterType},
      {pc(false), VerdictValue::ClusterType},
      {irr(NodalLocus::TwistedCubic, false), VerdictValue::ClusterType},
      {irr(NodalLocus::PlaneConic, false), VerdictValue::Open},
      {irr(NodalLocus::Line, false), VerdictValue::Open},
  };
  std::size_t hits = 0;
  for (const auto& [q, want] : table) hits += classify_quartic_pair(q).value == want;
  // NotClusterType and Open appear exactly where expected across the table.
  std::size_t not_cluster = 0, open = 0;
  for (const auto& [q, want] : table) {
    const auto v = classify_quartic_pair(q).value;
    not_cluster += v == VerdictValue::NotClusterType;
    open += v == VerdictValue::Open;
  }
  return {hits == table.size() && not_cluster == 1 && open == 2,
          std::to_string(hits) + "/" + std::to_string(table.size()) + " verdicts"};
}

Outcome parser_roundtrip() {
  using namespace poly;
  const std::vector<std::string> vars{"t", "x", "y", "z"};
  std::vector<std::string> corpus{
      lcverify::fixtures::kNodalConic,
      lcverify::fixtures::kNodalLine,
      lcverify::fixtures::kNormalQuartic,
      "t*y + x^2 - z^2",
      "x^2 + y^2 - z^2",
      "t^2*z^2 + t*x*z + x^2 + x^4 + t^4",
      "t^4 + t^2 + t*x*y + x^4 + x^2*y^2",
      "0",
      "1",
      "-7/3",
      "x",
      "-x + y",
      "(x + y)^5",
      "(t - 1/2*x)^3*(y + z)",
      "x*y*z*t",
      "2^10*x - 1024*x + y",
      "((x))",
      "-(-(x^2))",
      "3/4*t^3*x - 5/6*y^2*z^2 + 7",
      "(x^2 + y^2 + z^2 + t^2)^2 - 4*x^2*y^2",
  };
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 3), den(1, 5);
  while (corpus.size() < 50) {
    MultiPoly p(vars);
    const int terms = 1 + static_cast<int>(rng() % 6);
    for (int k = 0; k < terms; ++k) {
      Exponent e(4);
      for (auto& x : e) x = static_cast<unsigned long>(deg(rng));
      p.add_term(e, make_rational(coef(rng), den(rng)));
    }
    corpus.push_back(to_string(p));
  }
  std::size_t ok = 0;
  for (const auto& text : corpus) {
    const MultiPoly p = parse_poly(text, vars);
    const MultiPoly back = parse_poly(to_string(p), vars);
    ok += p.terms() == back.terms() && to_string(back) == to_string(p);
  }
  return {ok == corpus.size(), std::to_string(ok) + "/" + std::to_string(corpus.size())};
}

}  // namespace

int main() {
  using lcverify::ExampleId;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1 brute-force three-mismatch bound", lemma_bruteforce},
      {"2 Noether invariant conservation", conservation},
      {"3 fan/cycle commuting square", commuting_square},
      {"4 smooth-fan identity", smooth_identity},
      {"5 realization oracle", realization},
      {"6 nodal-conic report",
       [] {
         return example(ExampleId::NodalConic,
                        {"gradient-vanishes-on-conic", "weighted-multiplicity-121",
                         "log-discrepancy-121", "hessian-rank-node", "hessian-rank-pinch",
                         "origin-multiplicity"});
       }},
      {"7 nodal-line report",
       [] {
         return example(ExampleId::NodalLine,
                        {"gradient-vanishes-on-line", "weighted-multiplicity-chart-y-121",
                         "weighted-multiplicity-chart-z-211"});
       }},
      {"8 normal-quartic report",
       [] { return example(ExampleId::NormalQuartic, {"origin-multiplicity", "classification"}); }},
      {"9 classifier table", classifier_table},
      {"10 parser round trip", parser_roundtrip},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o{false, ""};
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s  %s  (%s)\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
