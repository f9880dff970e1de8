#include "blink/chain.hpp"

#include "blink/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace blink {
namespace {

constexpr unsigned kThrough = 1;
constexpr unsigned kToC = 2;
constexpr unsigned kFromD = 4;

bool inside(std::size_t v, std::size_t lo, std::size_t hi) { return v >= lo && v <= hi; }

void check_usages(const std::vector<ChainResource>& resources) {
  for (const auto& r : resources)
    if (!(r.usage > 0.0)) throw Error(ErrorCode::kDegenerate, "resource with non-positive usage on a long path");
}

}  // namespace

TappedSegment TappedSegment::leaf(std::size_t k, double weight, const ChainTaps& taps) {
  TappedSegment s;
  s.lo_ = k;
  s.hi_ = k + 1;
  unsigned up = kThrough;
  unsigned down = 0;
  if (taps.tap_c == k) {
    up |= kToC;
    down |= kToC;
  } else if (taps.tap_c == k + 1) {
    up |= kToC;
  }
  if (taps.tap_d == k + 1) {
    up |= kFromD;
    down |= kFromD;
  } else if (taps.tap_d == k) {
    up |= kFromD;
  }
  s.p_[up] += weight;
  s.p_[down] += 1.0 - weight;
  return s;
}

TappedSegment TappedSegment::series(const TappedSegment& left, const TappedSegment& right, const ChainTaps& taps,
                                    std::size_t* ops) {
  if (left.hi_ != right.lo_) throw Error(ErrorCode::kInvalidArgument, "series segments do not meet");
  TappedSegment s;
  s.lo_ = left.lo_;
  s.hi_ = right.hi_;
  const std::size_t k = left.hi_;
  const bool c_left = inside(taps.tap_c, left.lo_, k);
  const bool c_right = !c_left && inside(taps.tap_c, k, right.hi_);
  const bool d_right = inside(taps.tap_d, k, right.hi_);
  const bool d_left = !d_right && inside(taps.tap_d, left.lo_, k);
  for (unsigned a = 0; a < 8; ++a) {
    if (left.p_[a] == 0.0) continue;
    for (unsigned b = 0; b < 8; ++b) {
      if (right.p_[b] == 0.0) continue;
      const bool l_ab = a & kThrough;
      const bool r_ab = b & kThrough;
      unsigned out = 0;
      if (l_ab && r_ab) out |= kThrough;
      if ((c_left && (a & kToC)) || (c_right && l_ab && (b & kToC))) out |= kToC;
      if ((d_right && (b & kFromD)) || (d_left && (a & kFromD) && r_ab)) out |= kFromD;
      s.p_[out] += left.p_[a] * right.p_[b];
    }
  }
  if (ops) *ops += 64;
  return s;
}

TappedSegment TappedSegment::with_bypass(double q, const ChainTaps& taps, std::size_t* ops) const {
  TappedSegment s;
  s.lo_ = lo_;
  s.hi_ = hi_;
  for (unsigned a = 0; a < 8; ++a) {
    if (p_[a] == 0.0) continue;
    for (int edge = 0; edge < 2; ++edge) {
      const double pe = edge ? q : 1.0 - q;
      unsigned out = a;
      if (edge) {
        out |= kThrough;
        if (taps.tap_c == hi_) out |= kToC;
        if (taps.tap_d == lo_) out |= kFromD;
      }
      s.p_[out] += p_[a] * pe;
    }
  }
  if (ops) *ops += 16;
  return s;
}

double TappedSegment::through() const noexcept {
  double t = 0.0;
  for (unsigned a = 0; a < 8; ++a)
    if (a & kThrough) t += p_[a];
  return t;
}

double TappedSegment::with_taps(const ChainTaps& taps) const noexcept {
  double total = 0.0;
  for (unsigned a = 0; a < 8; ++a) {
    if (a & kThrough) {
      total += p_[a];
      continue;
    }
    const double miss_x = (a & kFromD) ? 1.0 - taps.x : 1.0;
    const double miss_y = (a & kToC) ? 1.0 - taps.y : 1.0;
    total += p_[a] * (1.0 - miss_x * miss_y);
  }
  return std::clamp(total, 0.0, 1.0);
}

ChainResult medium_chain(const std::vector<ChainResource>& resources, const ChainTaps& taps) {
  if (resources.empty()) throw Error(ErrorCode::kInvalidArgument, "empty chain");
  check_usages(resources);
  const std::size_t m = resources.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return resources[a].usage < resources[b].usage; });

  struct Merged {
    TappedSegment seg;
    double level;
  };
  std::vector<Merged> segments;
  segments.reserve(m);
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  // Segment index by its left and right boundary.
  std::vector<std::size_t> starting(m + 1, kNone), ending(m + 1, kNone);

  ChainResult r;
  for (std::size_t j : order) {
    const double u = resources[j].usage;
    TappedSegment cur = TappedSegment::leaf(j, resources[j].weight, taps);
    r.ops += 2;
    auto absorb = [&](std::size_t idx) -> TappedSegment {
      Merged& s = segments[idx];
      if (s.level < u) {
        const double q = -std::expm1(std::log1p(-std::min(s.seg.through(), 1.0 - 1e-16)) * ((u - s.level) / s.level));
        r.bypasses.push_back(HypotheticalEdge{s.seg.lo(), s.seg.hi(), q});
        return s.seg.with_bypass(q, taps, &r.ops);
      }
      return s.seg;
    };
    const std::size_t left = ending[j];
    const std::size_t right = starting[j + 1];
    if (left != kNone) cur = TappedSegment::series(absorb(left), cur, taps, &r.ops);
    if (right != kNone) cur = TappedSegment::series(cur, absorb(right), taps, &r.ops);
    segments.push_back(Merged{cur, u});
    const std::size_t idx = segments.size() - 1;
    starting[cur.lo()] = idx;
    ending[cur.hi()] = idx;
  }
  const TappedSegment& whole = segments.back().seg;
  r.probability = whole.with_taps(taps);
  r.max_usage = segments.back().level;
  r.ops += 8;
  return r;
}

std::array<double, 3> low_chain_weights(const std::vector<ChainResource>& resources) {
  if (resources.size() < 3) throw Error(ErrorCode::kDegenerate, "low construction needs at least 3 resources");
  check_usages(resources);
  double u_max = 0.0;
  for (const auto& r : resources) u_max = std::max(u_max, r.usage);
  const auto& first = resources.front();
  const auto& last = resources.back();

  double middle_log = 0.0;
  double weighted = 0.0;
  double plain = 0.0;
  for (std::size_t i = 1; i + 1 < resources.size(); ++i) {
    const double lw = std::log(resources[i].weight);
    middle_log += lw;
    weighted += resources[i].usage * lw;
    plain += resources[i].usage;
  }
  const double u_mean = middle_log != 0.0 ? weighted / middle_log : plain / static_cast<double>(resources.size() - 2);

  // 1 - (1 - w)^e evaluated as -expm1(e * log1p(-w)).
  auto boost = [](double log1m_w, double exponent) { return -std::expm1(log1m_w * exponent); };
  auto log1m = [](double w) { return std::log1p(-std::min(w, 1.0 - 1e-16)); };
  return {boost(log1m(first.weight), u_max / first.usage),
          boost(log1m(std::exp(middle_log)), u_max / u_mean),
          boost(log1m(last.weight), u_max / last.usage)};
}

ChainResult low_chain(const std::vector<ChainResource>& resources, const ChainTaps& taps) {
  const auto w = low_chain_weights(resources);
  ChainTaps t = taps;
  t.tap_c = 1;
  t.tap_d = 2;
  ChainResult r;
  TappedSegment seg = TappedSegment::leaf(0, w[0], t);
  seg = TappedSegment::series(seg, TappedSegment::leaf(1, w[1], t), t, &r.ops);
  seg = TappedSegment::series(seg, TappedSegment::leaf(2, w[2], t), t, &r.ops);
  r.probability = seg.with_taps(t);
  for (const auto& res : resources) r.max_usage = std::max(r.max_usage, res.usage);
  return r;
}

}  // namespace blink
