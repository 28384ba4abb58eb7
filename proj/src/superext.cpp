#include "supercomb/superext.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace supercomb {

namespace {

// Bit vector over the 2^n subsets of the ground set; position = mask value.
struct Bits128 {
  std::uint64_t w0 = 0, w1 = 0;

  bool test(unsigned pos) const {
    return pos < 64 ? (w0 >> pos) & 1 : (w1 >> (pos - 64)) & 1;
  }
  void set(unsigned pos) {
    if (pos < 64)
      w0 |= std::uint64_t{1} << pos;
    else
      w1 |= std::uint64_t{1} << (pos - 64);
  }
  bool none() const { return (w0 | w1) == 0; }
  friend Bits128 operator|(Bits128 a, Bits128 b) { return {a.w0 | b.w0, a.w1 | b.w1}; }
  friend Bits128 operator&(Bits128 a, Bits128 b) { return {a.w0 & b.w0, a.w1 & b.w1}; }
  bool operator==(const Bits128&) const = default;
};

// Positions whose index has bit p clear, per p < 6.
constexpr std::uint64_t kNoBit[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                     0x0F0F0F0F0F0F0F0Full, 0x00FF00FF00FF00FFull,
                                     0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull};

// Marks M | {p} for every position M in b with p absent.
Bits128 spread(const Bits128& b, int p) {
  if (p < 6) {
    const std::uint64_t pat = kNoBit[p];
    const unsigned sh = 1u << p;
    return {(b.w0 & pat) << sh, (b.w1 & pat) << sh};
  }
  return {0, b.w0};
}

Bits128 minimal_of(const Bits128& in, int n) {
  Bits128 nonmin;
  for (int p = 0; p < n; ++p) nonmin = nonmin | spread(in, p);
  return {in.w0 & ~nonmin.w0, in.w1 & ~nonmin.w1};
}

std::vector<Mask> expand_bits(const Bits128& b) {
  std::vector<Mask> out;
  for (std::uint64_t w = b.w0; w; w &= w - 1) out.push_back(Mask(std::countr_zero(w)));
  for (std::uint64_t w = b.w1; w; w &= w - 1) out.push_back(Mask(64 + std::countr_zero(w)));
  return out;
}

// Lexicographic order of the ascending position lists, on the raw bitsets:
// the owner of the lowest differing position wins unless the other side has
// nothing at or above it (then that side is a strict prefix).
bool minbits_less(const Bits128& a, const Bits128& b) {
  const std::uint64_t d0 = a.w0 ^ b.w0;
  const std::uint64_t d1 = a.w1 ^ b.w1;
  if ((d0 | d1) == 0) return false;
  bool in_a;
  std::uint64_t above_a, above_b;
  if (d0) {
    const int m = std::countr_zero(d0);
    in_a = (a.w0 >> m) & 1;
    above_a = (a.w0 >> m) | a.w1;
    above_b = (b.w0 >> m) | b.w1;
  } else {
    const int m = std::countr_zero(d1);
    in_a = (a.w1 >> m) & 1;
    above_a = a.w1 >> m;
    above_b = b.w1 >> m;
  }
  if (above_a == 0) return true;
  if (above_b == 0) return false;
  return in_a;
}

// Branch-and-prune over complementary subset pairs.  Each decision fixes
// which side of a pair lies in the up-closure; putting S in forces all
// supersets of S in and all subsets of the complement out.  A leaf is a
// monotone self-dual assignment, i.e. exactly one maximal linked system.
class PairEngine {
 public:
  explicit PairEngine(GroundSet ground) : n_(ground.n), full_(ground.full()) {
    const std::size_t count = std::size_t{1} << n_;
    up_.resize(count);
    down_.resize(count);
    for (Mask s = 0; s < count; ++s) {
      for (Mask t = s;; t = (t + 1) | s) {  // supersets of s
        up_[s].set(t);
        if (t == full_) break;
      }
      for (Mask t = s;; t = (t - 1) & s) {  // subsets of s
        down_[s].set(t);
        if (t == 0) break;
      }
    }
    // Decision order: small sets first (they constrain most), mask value as
    // the tie break.  Each pair is represented by its smaller side.
    for (Mask s = 1; s < full_; ++s) {
      const Mask c = full_ ^ s;
      const int ps = mask_size(s), pc = mask_size(c);
      const Mask rep = ps < pc ? s : (pc < ps ? c : std::min(s, c));
      if (rep == s) reps_.push_back(s);
    }
    std::sort(reps_.begin(), reps_.end(), [](Mask a, Mask b) {
      const int pa = mask_size(a), pb = mask_size(b);
      return pa != pb ? pa < pb : a < b;
    });
  }

  struct State {
    Bits128 in, out;
  };

  State initial() const {
    State st;
    st.in.set(full_);
    st.out.set(0);
    return st;
  }

  bool assign_in(State& st, Mask s) const {
    st.in = st.in | up_[s];
    st.out = st.out | down_[full_ ^ s];
    return (st.in & st.out).none();
  }

  template <typename Sink>
  void dfs(State st, std::size_t idx, Sink&& sink) const {
    while (idx < reps_.size()) {
      const Mask s = reps_[idx];
      if (st.in.test(s) || st.out.test(s)) {
        ++idx;
        continue;
      }
      ++idx;
      State left = st;
      if (assign_in(left, s)) dfs(left, idx, sink);
      if (assign_in(st, full_ ^ s)) dfs(st, idx, sink);
      return;
    }
    sink(st.in);
  }

  std::size_t pair_count() const { return reps_.size(); }
  Mask rep(std::size_t i) const { return reps_[i]; }
  Mask full() const { return full_; }
  int n() const { return n_; }

 private:
  int n_;
  Mask full_;
  std::vector<Bits128> up_, down_;
  std::vector<Mask> reps_;
};

int ceil_log2(int x) {
  int k = 0;
  while ((1 << k) < x) ++k;
  return k;
}

// Runs the engine over 2^k prefix assignments of the first k pairs.  Every
// leaf realizes a definite side for each pair, so the prefixes partition the
// leaves exactly; per-job results live in their own slot and the caller
// combines them in job order.
template <typename PerLeaf>
void run_partitioned(const PairEngine& eng, const PairEngine::State& start, int partitions,
                     const std::vector<PerLeaf*>& slots, int k) {
  const int jobs = 1 << k;
  std::atomic<int> next{0};
  auto worker = [&]() {
    for (;;) {
      const int job = next.fetch_add(1);
      if (job >= jobs) return;
      PairEngine::State st = start;
      bool alive = true;
      for (int i = 0; i < k && alive; ++i) {
        const Mask s = eng.rep(static_cast<std::size_t>(i));
        const Mask side = ((job >> i) & 1) ? (eng.full() ^ s) : s;
        alive = eng.assign_in(st, side);
      }
      if (alive) eng.dfs(st, static_cast<std::size_t>(k), [&](const Bits128& in) {
        slots[static_cast<std::size_t>(job)]->consume(in);
      });
    }
  };
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  const unsigned nthreads = std::min<unsigned>(hw, static_cast<unsigned>(std::min(jobs, partitions)));
  if (nthreads <= 1) {
    worker();
    return;
  }
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

struct CountSlot {
  std::uint64_t count = 0;
  void consume(const Bits128&) { ++count; }
};

struct CollectSlot {
  int n = 0;
  std::vector<Bits128> mins;
  void consume(const Bits128& in) { mins.push_back(minimal_of(in, n)); }
};

GroundSet check_enum_ground(GroundSet g) {
  if (g.n > kMaxEnumPoints)
    throw Error(Errc::GroundTooLarge, "enumeration is capped at " +
                                          std::to_string(kMaxEnumPoints) + " points");
  return g;
}

int clamp_partition_exponent(const PairEngine& eng, int partitions) {
  if (partitions <= 1) return 0;
  int k = ceil_log2(partitions);
  k = std::min(k, static_cast<int>(eng.pair_count()));
  return std::min(k, 16);
}

std::vector<Bits128> enumerate_min_bits(GroundSet ground, EnumOptions opts) {
  const PairEngine eng(check_enum_ground(ground));
  const int k = clamp_partition_exponent(eng, opts.partitions);
  const int jobs = 1 << k;
  std::vector<CollectSlot> slots(static_cast<std::size_t>(jobs));
  std::vector<CollectSlot*> ptrs;
  for (auto& s : slots) {
    s.n = ground.n;
    ptrs.push_back(&s);
  }
  run_partitioned(eng, eng.initial(), std::max(1, opts.partitions), ptrs, k);
  std::vector<Bits128> all;
  for (auto& s : slots) all.insert(all.end(), s.mins.begin(), s.mins.end());
  std::sort(all.begin(), all.end(), minbits_less);
  return all;
}

MLS mls_unchecked(GroundSet ground, std::vector<Mask> minimal) {
  MLS m;
  m.ground = ground;
  m.minimal = std::move(minimal);
  return m;
}

}  // namespace

bool mls_less(const MLS& a, const MLS& b) {
  return std::lexicographical_compare(a.minimal.begin(), a.minimal.end(), b.minimal.begin(),
                                      b.minimal.end());
}

MLS mls_from_minimal(GroundSet ground, std::vector<Mask> minimal) {
  std::sort(minimal.begin(), minimal.end());
  minimal.erase(std::unique(minimal.begin(), minimal.end()), minimal.end());
  if (minimal.empty()) throw Error(Errc::InvariantError, "a system needs at least one member");
  for (Mask m : minimal) {
    if (m == 0) throw Error(Errc::EmptySet, "empty set cannot generate a linked system");
    if (!mask_subset(m, ground.full())) throw Error(Errc::OutOfRangePoint, "member leaves ground");
  }
  for (std::size_t i = 0; i < minimal.size(); ++i)
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (i == j) continue;
      if (mask_subset(minimal[i], minimal[j]))
        throw Error(Errc::InvariantError, "minimal members must form an antichain");
      if ((minimal[i] & minimal[j]) == 0)
        throw Error(Errc::NotLinked, "minimal members must pairwise intersect");
    }
  if (ground.n > 16)
    throw Error(Errc::GroundTooLarge, "maximality validation is capped at 16 points");
  MLS m = mls_unchecked(ground, std::move(minimal));
  const Mask full = ground.full();
  for (Mask s = 0; s <= full; ++s)
    if (!mls_contains(m, s) && !mls_contains(m, full ^ s))
      throw Error(Errc::InvariantError,
                  "not maximal: neither a set nor its complement is contained");
  return m;
}

bool mls_contains(const MLS& eta, Mask s) {
  if (!mask_subset(s, eta.ground.full()))
    throw Error(Errc::OutOfRangePoint, "set leaves the ground");
  for (Mask m : eta.minimal)
    if (mask_subset(m, s)) return true;
  return false;
}

MLS eta(int x, GroundSet ground) {
  if (!ground.contains(x))
    throw Error(Errc::OutOfRangePoint, "point " + std::to_string(x) + " outside ground");
  return mls_unchecked(ground, {Mask{1} << x});
}

Superextension enumerate_mls(GroundSet ground, EnumOptions opts) {
  Superextension lam;
  lam.ground = ground;
  for (const Bits128& bits : enumerate_min_bits(ground, opts))
    lam.elements.push_back(mls_unchecked(ground, expand_bits(bits)));
  return lam;
}

void for_each_mls(GroundSet ground, EnumOptions opts, const std::function<void(const MLS&)>& fn) {
  for (const Bits128& bits : enumerate_min_bits(ground, opts))
    fn(mls_unchecked(ground, expand_bits(bits)));
}

std::uint64_t count_mls(GroundSet ground, EnumOptions opts) {
  const PairEngine eng(check_enum_ground(ground));
  const int k = clamp_partition_exponent(eng, opts.partitions);
  const int jobs = 1 << k;
  std::vector<CountSlot> slots(static_cast<std::size_t>(jobs));
  std::vector<CountSlot*> ptrs;
  for (auto& s : slots) ptrs.push_back(&s);
  run_partitioned(eng, eng.initial(), std::max(1, opts.partitions), ptrs, k);
  std::uint64_t total = 0;
  for (const auto& s : slots) total += s.count;
  return total;
}

std::vector<MLS> mls_complete(const SetFamily& linked) {
  if (!is_linked(linked)) throw Error(Errc::NotLinked, "input family must be linked");
  const GroundSet ground = check_enum_ground(linked.ground);
  const PairEngine eng(ground);
  PairEngine::State st = eng.initial();
  for (Mask m : linked.members)
    if (!eng.assign_in(st, m))
      throw Error(Errc::InternalCheck, "linked family produced an inconsistent seed");
  std::vector<Bits128> mins;
  eng.dfs(st, 0, [&](const Bits128& in) { mins.push_back(minimal_of(in, ground.n)); });
  std::sort(mins.begin(), mins.end(), minbits_less);
  std::vector<MLS> out;
  for (const Bits128& b : mins) out.push_back(mls_unchecked(ground, expand_bits(b)));
  return out;
}

std::vector<std::size_t> plus_set(Mask f, const Superextension& lam) {
  if (f == 0) throw Error(Errc::EmptySet, "plus-set of the empty set");
  if (!mask_subset(f, lam.ground.full()))
    throw Error(Errc::OutOfRangePoint, "set leaves the ground");
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < lam.elements.size(); ++i)
    if (mls_contains(lam.elements[i], f)) idx.push_back(i);
  return idx;
}

Subbase lambda_subbase(const Superextension& lam) {
  if (lam.ground.n > 4)
    throw Error(Errc::GroundTooLarge, "plus-set subbase construction is capped at 4 points");
  const GroundSet index_ground(static_cast<int>(lam.elements.size()));
  std::vector<Mask> members;
  for (Mask f = 1; f <= lam.ground.full(); ++f) {
    Mask plus = 0;
    for (std::size_t i : plus_set(f, lam)) plus |= Mask{1} << i;
    members.push_back(plus);
  }
  return Subbase{family_from_masks(index_ground, std::move(members)), Strictness::VanMill};
}

MLS lambda_map(const PointFn& f, const MLS& eta) {
  if (eta.ground.n != f.n) throw Error(Errc::InvariantError, "domain mismatch");
  const GroundSet target{GroundSet(f.m)};
  const Mask tfull = target.full();
  std::vector<bool> in_up(std::size_t{1} << f.m);
  for (Mask b = 0; b <= tfull; ++b) {
    const Mask pre = f.preimage(b);
    in_up[b] = pre != 0 && mls_contains(eta, pre);
  }
  std::vector<Mask> minimal;
  for (Mask b = 1; b <= tfull; ++b) {
    if (!in_up[b]) continue;
    bool min = true;
    for (Mask rest = b; rest && min; rest &= rest - 1) {
      const Mask without = b & ~(rest & ~(rest - 1));
      if (in_up[without]) min = false;
    }
    if (min) minimal.push_back(b);
  }
  return mls_unchecked(target, std::move(minimal));
}

int retract(const Subbase& sb, const MLS& eta) {
  if (sb.family.ground != eta.ground) throw Error(Errc::InvariantError, "ground mismatch");
  Mask acc = sb.family.ground.full();
  for (Mask f : sb.family.members)
    if (mls_contains(eta, f)) acc &= f;
  if (mask_size(acc) != 1) {
    std::string pts;
    for (int p : points_of(acc)) pts += (pts.empty() ? "" : ",") + std::to_string(p);
    throw Error(Errc::NotSingleton, "retraction intersection is {" + pts +
                                        "}; subbase is not binary+normal+point-separating");
  }
  return lowest_point(acc);
}

}  // namespace supercomb
