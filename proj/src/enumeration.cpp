#include "ybe/enumeration.hpp"

#include <algorithm>
#include <cstdio>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace ybe {

namespace {

bool pointwise_involutive(const SetSolution& s) {
  for (std::size_t x = 0; x < s.n; ++x)
    for (std::size_t y = 0; y < s.n; ++y) {
      const std::size_t a = s.s(x, y), b = s.t(y, x);
      if (s.s(a, b) != x || s.t(b, a) != y) return false;
    }
  return true;
}

bool pointwise_braid(const SetSolution& s) {
  const std::size_t n = s.n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        // r12 r23 r12
        std::size_t a = s.s(x, y), b = s.t(y, x), c = z;
        std::size_t b2 = s.s(b, c), c2 = s.t(c, b);
        const std::size_t l0 = s.s(a, b2), l1 = s.t(b2, a), l2 = c2;
        // r23 r12 r23
        std::size_t p = x, q = s.s(y, z), r = s.t(z, y);
        std::size_t p2 = s.s(p, q), q2 = s.t(q, p);
        const std::size_t r0 = p2, r1 = s.s(q2, r), r2 = s.t(r, q2);
        if (l0 != r0 || l1 != r1 || l2 != r2) return false;
      }
  return true;
}

bool rows_are_permutations(const Table& t) {
  return std::all_of(t.begin(), t.end(), [&](const auto& row) { return is_permutation(row, t.size()); });
}

std::string member_name(std::size_t n, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "sol-n%zu-%03zu", n, k);
  return buf;
}

void name_members(SolutionCatalogue& cat) {
  for (std::size_t k = 0; k < cat.solutions.size(); ++k)
    cat.solutions[k].name = member_name(cat.n, k);
}

// Odometer over rows[0..n-1], each an index into perms; row 0 is fixed.
template <class Visit>
void for_each_assignment(std::size_t n, std::size_t perm_count, std::size_t first, Visit&& visit) {
  std::vector<std::size_t> idx(n, 0);
  idx[0] = first;
  while (true) {
    visit(idx);
    std::size_t pos = n;
    while (pos-- > 1) {
      if (++idx[pos] < perm_count) break;
      idx[pos] = 0;
    }
    if (pos == 0) return;
  }
}

void check_bound(std::size_t n, std::size_t bound, const char* what) {
  if (n == 0) throw InputError("enumeration needs n >= 1");
  if (n > bound)
    throw InputError(std::string(what) + ": n=" + std::to_string(n) +
                     " exceeds the enumeration bound " + std::to_string(bound));
}

}  // namespace

std::vector<std::vector<std::size_t>> all_permutations(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SolutionCatalogue enumerate_involutive(std::size_t n) {
  check_bound(n, kMaxEnumerationN, "enumerate_involutive");
  const auto perms = all_permutations(n);
  auto worker = [&](std::size_t first) {
    std::vector<SetSolution> found;
    for_each_assignment(n, perms.size(), first, [&](const std::vector<std::size_t>& idx) {
      Table sigma(n);
      for (std::size_t x = 0; x < n; ++x) sigma[x] = perms[idx[x]];
      Table tau = derive_tau_from_sigma(sigma);
      if (!rows_are_permutations(tau)) return;
      SetSolution s{n, std::move(sigma), std::move(tau), {}};
      if (pointwise_involutive(s) && pointwise_braid(s)) found.push_back(std::move(s));
    });
    return found;
  };
  std::vector<std::future<std::vector<SetSolution>>> jobs;
  for (std::size_t first = 0; first < perms.size(); ++first)
    jobs.push_back(std::async(std::launch::async, worker, first));
  SolutionCatalogue cat{n, {}, false};
  for (auto& j : jobs)
    for (auto& s : j.get()) cat.solutions.push_back(std::move(s));
  name_members(cat);
  return cat;
}

SolutionCatalogue enumerate_naive(std::size_t n) {
  check_bound(n, kMaxNaiveN, "enumerate_naive");
  const auto perms = all_permutations(n);
  const std::size_t p = perms.size();
  SolutionCatalogue cat{n, {}, false};
  // 2n independent rows: σ rows first, then τ rows.
  std::vector<std::size_t> idx(2 * n, 0);
  while (true) {
    SetSolution s{n, Table(n), Table(n), {}};
    for (std::size_t x = 0; x < n; ++x) {
      s.sigma[x] = perms[idx[x]];
      s.tau[x] = perms[idx[n + x]];
    }
    if (pointwise_involutive(s) && pointwise_braid(s)) cat.solutions.push_back(std::move(s));
    std::size_t pos = 2 * n;
    bool done = true;
    while (pos-- > 0) {
      if (++idx[pos] < p) {
        done = false;
        break;
      }
      idx[pos] = 0;
    }
    if (done) break;
  }
  name_members(cat);
  return cat;
}

SetSolution canonical_form(const SetSolution& s) {
  SetSolution best = s;
  for (const auto& pi : all_permutations(s.n)) {
    SetSolution t = relabel(s, pi);
    if (std::tie(t.sigma, t.tau) < std::tie(best.sigma, best.tau)) best = std::move(t);
  }
  best.name = s.name;
  return best;
}

SolutionCatalogue reduce_mod_relabeling(const SolutionCatalogue& cat) {
  // Cycle types of the σ rows are relabeling invariants; only members sharing
  // them need a canonical-form comparison.
  auto invariant = [](const SetSolution& s) {
    std::vector<std::vector<std::size_t>> types;
    for (const auto& row : s.sigma) {
      std::vector<bool> seen(s.n, false);
      std::vector<std::size_t> lens;
      for (std::size_t i = 0; i < s.n; ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = row[j]) {
          seen[j] = true;
          ++len;
        }
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      types.push_back(std::move(lens));
    }
    std::sort(types.begin(), types.end());
    return types;
  };
  std::map<std::vector<std::vector<std::size_t>>, std::vector<SetSolution>> seen;
  SolutionCatalogue out{cat.n, {}, true};
  for (const auto& s : cat.solutions) {
    auto& bucket = seen[invariant(s)];
    const SetSolution c = canonical_form(s);
    const bool dup = std::any_of(bucket.begin(), bucket.end(), [&](const SetSolution& b) {
      return b.sigma == c.sigma && b.tau == c.tau;
    });
    if (dup) continue;
    bucket.push_back(c);
    out.solutions.push_back(s);
  }
  return out;
}

bool same_members(const SolutionCatalogue& a, const SolutionCatalogue& b) {
  if (a.n != b.n) return false;
  auto key = [](const SolutionCatalogue& c) {
    std::set<std::pair<Table, Table>> out;
    for (const auto& s : c.solutions) out.emplace(s.sigma, s.tau);
    return out;
  };
  return key(a) == key(b);
}

}  // namespace ybe
