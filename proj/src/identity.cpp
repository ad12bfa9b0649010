#include "ybe/identity.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace ybe {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
    case Status::reported: return "reported";
  }
  return "?";
}

bool all_ok(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.ok(); });
}

Stopwatch::Stopwatch()
    : start_ns_(std::chrono::duration_cast<std::chrono::nanoseconds>(
                    std::chrono::steady_clock::now().time_since_epoch())
                    .count()) {}

double Stopwatch::millis() const {
  const auto now = std::chrono::duration_cast<std::chrono::nanoseconds>(
                       std::chrono::steady_clock::now().time_since_epoch())
                       .count();
  return static_cast<double>(now - start_ns_) / 1e6;
}

Identity equation(std::string name, std::size_t site_dim, std::vector<SparseMat> lhs,
                  std::vector<SparseMat> rhs) {
  return equation(std::move(name), site_dim, Side{Term{Scalar(1), std::move(lhs)}},
                  Side{Term{Scalar(1), std::move(rhs)}});
}

Identity equation(std::string name, std::size_t site_dim, Side lhs, Side rhs) {
  Identity id;
  id.name = std::move(name);
  id.site_dim = site_dim;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  return id;
}

namespace {

std::size_t side_dim(const Side& s) {
  for (const auto& t : s)
    if (!t.factors.empty()) return t.factors.front().dim();
  throw InputError("identity side has no matrix factor");
}

std::size_t identity_dim(const Identity& id) {
  const std::size_t d = side_dim(id.lhs);
  if (side_dim(id.rhs) != d) throw InputError("identity '" + id.name + "' has mismatched sides");
  return d;
}

template <class M, class Eval>
M sum_terms(const Side& side, std::size_t dim, Eval&& eval_term) {
  M total(dim);
  for (const auto& t : side) total += eval_term(t);
  return total;
}

std::string decode(const Identity& id, std::size_t dim, std::size_t r, std::size_t c) {
  if (id.site_dim < 2) return "row " + std::to_string(r) + " col " + std::to_string(c);
  try {
    const std::size_t legs = leg_count(dim, id.site_dim);
    return "row " + basis_label(r, id.site_dim, legs) + " col " +
           basis_label(c, id.site_dim, legs);
  } catch (const InputError&) {
    return "row " + std::to_string(r) + " col " + std::to_string(c);
  }
}

// First differing entry in a permitted column, plus the count of differing
// columns outside the mask.
template <class M>
struct Diff {
  std::optional<std::pair<std::size_t, std::size_t>> first;
  std::size_t excluded_columns = 0;
};

template <class M>
Diff<M> compare(const M& l, const M& r, const std::optional<std::vector<std::size_t>>& columns) {
  Diff<M> out;
  const M d = l - r;
  std::vector<bool> allowed;
  if (columns) {
    allowed.assign(d.dim(), false);
    for (auto c : *columns) allowed.at(c) = true;
  }
  std::vector<bool> bad_excluded(d.dim(), false);
  for (std::size_t row = 0; row < d.dim(); ++row) {
    for (const auto& [c, v] : d.row(row)) {
      if (!columns || allowed[c]) {
        if (!out.first) out.first = {row, c};
      } else {
        bad_excluded[c] = true;
      }
    }
  }
  out.excluded_columns = static_cast<std::size_t>(std::count(bad_excluded.begin(), bad_excluded.end(), true));
  return out;
}

std::string mask_note(const Identity& id, std::size_t dim, std::size_t excluded) {
  if (!id.columns) return {};
  return "compared " + std::to_string(id.columns->size()) + " of " + std::to_string(dim) +
         " columns; " + std::to_string(excluded) + " excluded columns differ";
}

}  // namespace

SparseMat evaluate(const Side& side) {
  const std::size_t dim = side_dim(side);
  return sum_terms<SparseMat>(side, dim, [dim](const Term& t) {
    SparseMat p = SparseMat::identity(dim);
    bool first = true;
    for (const auto& f : t.factors) {
      p = first ? f : p * f;
      first = false;
    }
    return p.scaled(t.coeff);
  });
}

RationalMat evaluate_at(const Side& side, const Assignment& at) {
  const std::size_t dim = side_dim(side);
  return sum_terms<RationalMat>(side, dim, [&](const Term& t) {
    RationalMat p = RationalMat::identity(dim);
    bool first = true;
    for (const auto& f : t.factors) {
      RationalMat e = eval_at(f, at);
      p = first ? std::move(e) : p * e;
      first = false;
    }
    return p.scaled(t.coeff.evaluate(at));
  });
}

std::set<Var> variables(const Identity& id) {
  std::set<Var> out;
  for (const Side* s : {&id.lhs, &id.rhs})
    for (const auto& t : *s) {
      for (auto v : t.coeff.variables()) out.insert(v);
      for (const auto& f : t.factors) {
        auto fv = variables(f);
        out.insert(fv.begin(), fv.end());
      }
    }
  return out;
}

CheckReport check(const Identity& id) {
  Stopwatch clock;
  CheckReport rep;
  rep.name = id.name;
  const std::size_t dim = identity_dim(id);
  const SparseMat l = evaluate(id.lhs);
  const SparseMat r = evaluate(id.rhs);
  const auto diff = compare(l, r, id.columns);
  if (diff.first) {
    const auto [row, col] = *diff.first;
    rep.status = Status::fail;
    rep.witness = Witness{{row, col}, decode(id, dim, row, col), l.at(row, col).str(),
                          r.at(row, col).str()};
  } else {
    rep.status = Status::pass;
  }
  rep.note = mask_note(id, dim, diff.excluded_columns);
  rep.millis = clock.millis();
  return rep;
}

CheckReport check_all(std::string name, const std::vector<Identity>& ids) {
  Stopwatch clock;
  CheckReport rep;
  rep.name = std::move(name);
  rep.status = Status::pass;
  std::vector<std::string> notes;
  for (const auto& id : ids) {
    CheckReport sub = check(id);
    if (!sub.note.empty()) notes.push_back(id.name + ": " + sub.note);
    if (sub.status == Status::fail && rep.status != Status::fail) {
      rep.status = Status::fail;
      rep.witness = sub.witness;
      notes.insert(notes.begin(), "failed: " + id.name);
    }
  }
  for (std::size_t i = 0; i < notes.size(); ++i) rep.note += (i ? "; " : "") + notes[i];
  rep.millis = clock.millis();
  return rep;
}

std::vector<Assignment> sample_points(const std::set<Var>& vars, std::uint64_t seed,
                                      std::size_t count) {
  static constexpr long kPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37,
                                     41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89};
  constexpr std::size_t kPool = sizeof(kPrimes) / sizeof(kPrimes[0]);
  std::mt19937_64 gen(seed);
  std::vector<Assignment> out;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::size_t> pool(kPool);
    for (std::size_t i = 0; i < kPool; ++i) pool[i] = i;
    std::shuffle(pool.begin(), pool.end(), gen);
    Assignment a;
    std::size_t next = 0;
    for (auto v : vars) {
      const long p = kPrimes[pool[next++]];
      // Mix in reciprocals and signs so sums like z - z^-1 are not special.
      switch (gen() % 4) {
        case 0: a[v] = Rational(p); break;
        case 1: a[v] = Rational(-p); break;
        case 2: a[v] = Rational(1, p); break;
        default: a[v] = Rational(p + 1, p); break;
      }
    }
    out.push_back(std::move(a));
  }
  return out;
}

bool holds_at(const Identity& id, const Assignment& at) {
  const RationalMat l = evaluate_at(id.lhs, at);
  const RationalMat r = evaluate_at(id.rhs, at);
  return !compare(l, r, id.columns).first.has_value();
}

CheckReport check_fast(const Identity& id, std::uint64_t seed, std::size_t count) {
  Stopwatch clock;
  CheckReport rep;
  rep.name = id.name;
  rep.status = Status::pass;
  const std::size_t dim = identity_dim(id);
  for (const auto& at : sample_points(variables(id), seed, count)) {
    const RationalMat l = evaluate_at(id.lhs, at);
    const RationalMat r = evaluate_at(id.rhs, at);
    const auto diff = compare(l, r, id.columns);
    if (diff.first) {
      const auto [row, col] = *diff.first;
      rep.status = Status::fail;
      rep.witness = Witness{{row, col}, decode(id, dim, row, col), l.at(row, col).str(),
                            r.at(row, col).str()};
      std::string where;
      for (const auto& [v, x] : at) where += std::string(where.empty() ? "" : ", ") +
                                             std::string(var_name(v)) + "=" + x.str();
      rep.note = "differs at evaluation point {" + where + "}";
      break;
    }
  }
  if (rep.status == Status::pass) rep.note = "evaluated at " + std::to_string(count) + " points";
  rep.millis = clock.millis();
  return rep;
}

void require_sound(const Identity& id, const CheckReport& exact, std::uint64_t seed,
                   std::size_t count) {
  const bool exact_pass = exact.status == Status::pass;
  for (const auto& at : sample_points(variables(id), seed, count)) {
    if (holds_at(id, at) != exact_pass)
      throw InvariantError("fast path disagrees with exact verdict for '" + id.name + "'");
  }
}

}  // namespace ybe
