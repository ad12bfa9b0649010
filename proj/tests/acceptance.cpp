// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "ybe/enumeration.hpp"
#include "ybe/qdeform.hpp"
#include "ybe/quasi_axioms.hpp"
#include "ybe/twist.hpp"
#include "ybe/yangian.hpp"

using namespace ybe;

namespace {

constexpr std::uint64_t kSoundSeed = 20261014;

struct Checked {
  Identity id;
  CheckReport report;
};

// Every identity evaluated by criteria 2-9, kept for the soundness pass.
std::vector<Checked> g_checked;

struct Criterion {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void expect(bool cond, const std::string& why) {
    if (!cond) fail(why);
  }
  void expect(const CheckReport& r, const std::string& context) {
    if (r.status == Status::fail) {
      std::string why = context + ": " + r.name;
      if (r.witness) why += " at " + r.witness->location;
      fail(why);
    }
  }
  void identity(const Identity& id, const std::string& context) {
    CheckReport r = check(id);
    if (r.status != Status::pass)
      fail(context + ": " + id.name + (r.witness ? " at " + r.witness->location : ""));
    g_checked.push_back({id, std::move(r)});
  }
  void identities(const std::vector<Identity>& ids, const std::string& context) {
    for (const auto& id : ids) identity(id, context);
  }
  void equal(std::string name, std::size_t n, const SparseMat& a, const SparseMat& b,
             const std::string& context) {
    identity(equation(std::move(name), n, {a}, {b}), context);
  }
};

std::vector<SetSolution> members_up_to(std::size_t n_max) {
  std::vector<SetSolution> out;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (auto& s : enumerate_involutive(n).solutions) out.push_back(std::move(s));
  return out;
}

SparseMat I(std::size_t n) { return SparseMat::identity(n); }

SparseMat shift(std::size_t n) {
  SparseMat v(n);
  for (std::size_t x = 0; x < n; ++x) v.add(x, (x + n - 1) % n, Scalar(1));
  return v;
}

bool sigma_is_identity(const SetSolution& s) {
  for (const auto& row : s.sigma)
    for (std::size_t y = 0; y < s.n; ++y)
      if (row[y] != y) return false;
  return true;
}

Criterion c1_catalogue() {
  Criterion c;
  c.expect(enumerate_involutive(2).solutions.size() == 2, "n=2 count");
  c.expect(same_members(enumerate_involutive(3), enumerate_naive(3)), "n=3 dual oracle");
  return c;
}

Criterion c2_settheoretic_and_twist() {
  Criterion c;
  for (const auto& s : members_up_to(3)) {
    const std::string ctx = s.name;
    c.identity(involutive_identity(s), ctx);
    c.identity(braid_identity(linearize_braid(s), s.n), ctx);
    c.expect(check_braid(s), ctx);
    c.expect(check_c1(s).status == Status::pass, ctx + ": C1");
    const TwistData t = build_twist(s);
    c.identities(twist_identities(t), ctx);
    c.identities(cocycle_identities(s), ctx);
  }
  return c;
}

Criterion c3_baxter() {
  Criterion c;
  for (const auto& s : members_up_to(3)) {
    const BaxterSolution b = baxterize(s);
    c.identities(param_ybe_identities(b), s.name);
    c.identities(unitarity_identities(b), s.name);
    c.identities(crossing_identities(b), s.name);
  }
  return c;
}

Criterion c4_yangian_representation() {
  Criterion c;
  for (std::size_t n = 1; n <= 3; ++n) c.identities(intertwining_identities(yangian_R(n), nullptr), "Yangian");
  for (const auto& s : members_up_to(3)) {
    const BaxterSolution b = baxterize(s);
    const TwistData t = build_twist(s);
    c.identities(intertwining_identities(b, &t), s.name);
    c.identities(rtt_identities(b), s.name);
    c.identities(t_twist_identities(b, t), s.name);
  }
  return c;
}

Criterion c5_two_paths() {
  Criterion c;
  std::size_t g_paths = 0;
  for (const auto& s : members_up_to(3)) {
    const TwistData t = build_twist(s);
    for (std::size_t eta = 0; eta < s.n; ++eta) c.identities(delta_grouplike_identities(t, eta), s.name);
    c.identities(coproduct_two_path_identities(t), s.name);
    if (order_preserving_check(s).status == Status::pass && check_c1(s).status == Status::pass) {
      c.identities(twist_g_identities(s, t), s.name);
      ++g_paths;
    }
  }
  c.expect(g_paths == 3, "twisted G admitted exactly for the permutation solutions");
  const auto w = q_lyubashenko(4);
  c.identity(window_identities(w).front(), "window G");
  return c;
}

Criterion c6_lyubashenko_fixed_points() {
  Criterion c;
  const auto cyc = cyclic_lyubashenko(3);
  const SparseMat V = shift(3);
  const SparseMat Vi = transpose(V);
  c.equal("F*12,3 = I x I x V^2", 3, build_Fstar_12_3(cyc), kron({I(3), I(3), V * V}), "Lyubashenko");
  c.equal("F1234 = I x V x V^2 x V^3", 3, build_nfold_twist(cyc, 4),
          kron({I(3), V, V * V, V * V * V}), "Lyubashenko");
  const ConjectureReport p = conjecture_probe(cyc);
  c.expect(p.invertible && p.commutes_r && p.commutes_rcheck, "probe predicates");
  c.expect(p.phi.has_value(), "probe emits Phi");
  if (p.phi) c.equal("Phi = I x I x V^-1", 3, *p.phi, kron({I(3), I(3), Vi}), "Lyubashenko");
  c.equal("Phi^-1 = I x I x V", 3, p.phi_inverse, kron({I(3), I(3), V}), "Lyubashenko");
  return c;
}

Criterion c7_conjecture_sweep(std::string& summary) {
  Criterion c;
  const auto cat = enumerate_involutive(3);
  std::size_t reports = 0, all_true = 0;
  for (const auto& s : cat.solutions) {
    const ConjectureReport p = conjecture_probe(s);
    c.expect(p.report.status == Status::reported, s.name + ": status");
    c.expect(!p.report.note.empty(), s.name + ": note");
    c.expect(p.phi_inverse.dim() == 27, s.name + ": Phi^-1");
    c.expect(p.phi.has_value() == (p.invertible && p.commutes_r && p.commutes_rcheck), s.name + ": phi");
    ++reports;
    all_true += p.phi.has_value();
  }
  c.expect(reports == cat.solutions.size(), "one report per member");
  summary = std::to_string(reports) + " reports, " + std::to_string(all_true) + " with all predicates true";
  return c;
}

Criterion c8_q_suite() {
  Criterion c;
  for (std::size_t n = 1; n <= 3; ++n) c.identities(hecke_identities(hecke_g(n).g, n), "hecke_g");
  for (const auto& s : members_up_to(3)) {
    const bool passes = order_preserving_check(s).status == Status::pass;
    c.expect(passes == sigma_is_identity(s), s.name + ": order preserving iff sigma = id");
  }
  const auto w = q_lyubashenko(4);
  c.expect(order_preserving_window(w), "window");
  c.identities(window_identities(w), "window m=4");
  return c;
}

Criterion c9_quasi() {
  Criterion c;
  std::size_t lyub = 0;
  for (const auto& s : members_up_to(3)) {
    if (!is_lyubashenko_type(s)) continue;
    ++lyub;
    const GroupLikeCase g = grouplike_from_lyubashenko(s);
    c.identities(grouplike_identities(g), s.name);
    const auto mod = modified_ybe_identities(g.R, g.Phi, g.n);
    c.identities(mod, s.name);
    for (const auto& r : check_modified_ybe(g.R, g.Phi, g.n))
      c.expect(r.status == Status::pass, s.name + ": " + r.name);
    const bool scalar = is_scalar_matrix(g.u);
    c.expect(antipode_obstruction(g.u).empty() == scalar, s.name + ": antipode obstruction");
  }
  c.expect(lyub == 1 + 2 + 6, "Lyubashenko members");
  return c;
}

Criterion c10_soundness() {
  Criterion c;
  for (const auto& [id, rep] : g_checked) {
    try {
      require_sound(id, rep, kSoundSeed, 3);
    } catch (const std::exception& e) {
      c.fail(e.what());
    }
  }
  c.expect(!g_checked.empty(), "no identities recorded");
  c.detail = c.ok ? std::to_string(g_checked.size()) + " identities sampled" : c.detail;
  return c;
}

}  // namespace

int main() {
  struct Entry {
    int number;
    const char* title;
    double limit_s;  // 0 = no limit
    std::function<Criterion(std::string&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "catalogue integrity", 10, [](std::string&) { return c1_catalogue(); }},
      {2, "set-theoretic, twist and cocycle identities", 60,
       [](std::string&) { return c2_settheoretic_and_twist(); }},
      {3, "Baxterized suite", 0, [](std::string&) { return c3_baxter(); }},
      {4, "Yangian representation suite", 0, [](std::string&) { return c4_yangian_representation(); }},
      {5, "two-path agreements", 0, [](std::string&) { return c5_two_paths(); }},
      {6, "Lyubashenko fixed points", 0, [](std::string&) { return c6_lyubashenko_fixed_points(); }},
      {7, "conjecture sweep", 0, [](std::string& s) { return c7_conjecture_sweep(s); }},
      {8, "q-suite", 120, [](std::string&) { return c8_q_suite(); }},
      {9, "quasi-bialgebra group-like suite", 0, [](std::string&) { return c9_quasi(); }},
      {10, "soundness sampling", 0, [](std::string&) { return c10_soundness(); }},
  };
  int failures = 0;
  for (const auto& e : entries) {
    Stopwatch clock;
    std::string info;
    Criterion c;
    try {
      c = e.run(info);
    } catch (const std::exception& ex) {
      c.fail(std::string("exception: ") + ex.what());
    }
    const double secs = clock.millis() / 1000.0;
    if (e.limit_s > 0 && secs >= e.limit_s) c.fail("runtime " + std::to_string(secs) + " s over limit");
    if (!info.empty() && c.ok) c.detail = info;
    std::printf("criterion %2d %s  %-46s %8.2f s%s%s\n", e.number, c.ok ? "PASS" : "FAIL", e.title, secs,
                c.detail.empty() ? "" : "  ", c.detail.c_str());
    failures += !c.ok;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(entries.size()) - failures, entries.size());
  return failures == 0 ? 0 : 1;
}
