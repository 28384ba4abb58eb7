#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercomb {

// A subset of the ground set {0..n-1} as a characteristic bit vector.
using Mask = std::uint32_t;

inline constexpr int kMaxGroundPoints = 24;  // bit-vector width cap
inline constexpr int kMaxEnumPoints = 7;     // superextension enumeration cap

enum class Errc {
  BadGround,
  OutOfRangePoint,
  EmptySet,
  EmptyTarget,
  EmptyValue,
  NotSingleton,
  NotLinked,
  GroundTooLarge,
  NotSurjective,
  NotClosed,
  NotExtendable,
  NotALift,
  PreconditionFailed,
  HypothesisFailed,
  InternalXiFailure,
  InternalCheck,
  ParseError,
  SchemaError,
  InvariantError,
  CacheCorrupt,
  UsageError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

struct GroundSet {
  int n = 1;

  GroundSet() = default;
  explicit GroundSet(int points) : n(points) {
    if (n < 1 || n > kMaxGroundPoints)
      throw Error(Errc::BadGround, "ground set size must be in 1.." +
                                       std::to_string(kMaxGroundPoints) + ", got " +
                                       std::to_string(n));
  }

  Mask full() const { return (Mask{1} << n) - 1; }
  bool contains(int p) const { return p >= 0 && p < n; }
  bool operator==(const GroundSet&) const = default;
};

inline int mask_size(Mask m) { return std::popcount(m); }
inline bool mask_subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline int lowest_point(Mask m) { return std::countr_zero(m); }

Mask mask_from_points(const std::vector<int>& pts, GroundSet g);
std::vector<int> points_of(Mask m);

// Boolean decision plus a minimal counterexample.  Deciders search in
// ascending mask order, so witnesses are reproducible.
struct Witness {
  std::string kind;
  std::vector<Mask> sets;
  std::vector<int> points;
  std::string note;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::vector<std::string> trail;

  static Verdict ok() { return Verdict{}; }
  static Verdict fail(Witness w) {
    Verdict v;
    v.holds = false;
    v.witness = std::move(w);
    return v;
  }
};

// Raised when an operation's stated hypotheses do not hold; carries the
// verdict that pinpoints the failing axiom.
class PreconditionError : public Error {
 public:
  PreconditionError(Errc code, const std::string& stage, Verdict v)
      : Error(code, stage), stage_(stage), verdict_(std::move(v)) {}
  const std::string& stage() const { return stage_; }
  const Verdict& verdict() const { return verdict_; }

 private:
  std::string stage_;
  Verdict verdict_;
};

}  // namespace supercomb
