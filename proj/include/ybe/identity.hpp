#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ybe/sparse_matrix.hpp"

namespace ybe {

enum class Status { pass, fail, skipped, reported };
std::string_view status_name(Status s);

struct Witness {
  std::vector<std::size_t> indices;  // (row, col) for matrices, a tuple for set maps
  std::string location;              // decoded basis labels
  std::string lhs;
  std::string rhs;
};

struct CheckReport {
  std::string name;
  Status status = Status::skipped;
  std::optional<Witness> witness;
  double millis = 0;
  std::string note;

  bool ok() const { return status == Status::pass || status == Status::reported; }
};

bool all_ok(const std::vector<CheckReport>& reports);

// coeff * factors[0] * factors[1] * ...
struct Term {
  Scalar coeff{1};
  std::vector<SparseMat> factors;
};
using Side = std::vector<Term>;

struct Identity {
  std::string name;
  Side lhs;
  Side rhs;
  std::size_t site_dim = 0;  // used only to decode witnesses into basis labels
  // When set, only these columns are compared; the rest are counted in the note.
  std::optional<std::vector<std::size_t>> columns;
};

Identity equation(std::string name, std::size_t site_dim, std::vector<SparseMat> lhs,
                  std::vector<SparseMat> rhs);
Identity equation(std::string name, std::size_t site_dim, Side lhs, Side rhs);

SparseMat evaluate(const Side& side);
RationalMat evaluate_at(const Side& side, const Assignment& at);
std::set<Var> variables(const Identity& id);

// Exact verdict with the first differing entry as witness.
CheckReport check(const Identity& id);
// Runs each identity; the first failure becomes the witness of the combined report.
CheckReport check_all(std::string name, const std::vector<Identity>& ids);

// Deterministic sample points built from distinct small primes and their
// reciprocals, drawn with a seeded generator.
std::vector<Assignment> sample_points(const std::set<Var>& vars, std::uint64_t seed,
                                      std::size_t count);
bool holds_at(const Identity& id, const Assignment& at);
// Verdict from evaluation only.
CheckReport check_fast(const Identity& id, std::uint64_t seed, std::size_t count = 3);
// Throws InvariantError when some sample point disagrees with the exact verdict.
void require_sound(const Identity& id, const CheckReport& exact, std::uint64_t seed,
                   std::size_t count = 3);

// Wall-clock helper used by all report producers.
class Stopwatch {
 public:
  Stopwatch();
  double millis() const;

 private:
  std::int64_t start_ns_;
};

}  // namespace ybe
