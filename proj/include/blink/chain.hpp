#pragma once

// Series-parallel surrogates for one long path, used by the medium and low
// accuracy variations of the path-contribution iteration.
//
// A path is laid out as a chain of resources (edges and weighted intermediate
// nodes). Resource k runs from boundary k to boundary k+1; boundary 0 is the
// source and boundary m the target. Two optional taps model the length-2
// paths that share a resource with the chain: an edge of weight `x` from the
// source into boundary `tap_d`, and an edge of weight `y` from boundary
// `tap_c` to the target.

#include <array>
#include <cstddef>
#include <vector>

namespace blink {

struct ChainResource {
  double weight;
  double usage;
};

struct ChainTaps {
  std::size_t tap_c = 0;
  std::size_t tap_d = 0;
  double x = 0.0;
  double y = 0.0;
};

/// Bypass edge added by the medium construction, between two boundaries.
struct HypotheticalEdge {
  std::size_t from;
  std::size_t to;
  double weight;
};

struct ChainResult {
  /// Probability that the target is reachable in the surrogate.
  double probability = 0.0;
  /// Largest usage on the chain.
  double max_usage = 0.0;
  std::vector<HypotheticalEdge> bypasses;
  /// Elementary table operations spent; grows linearly with chain length.
  std::size_t ops = 0;
};

/// Joint distribution of three reachability events inside one segment
/// [lo, hi] of the chain: lo->hi, lo->tap_c and tap_d->hi. Index bit 0 is
/// lo->hi, bit 1 is lo->tap_c, bit 2 is tap_d->hi.
class TappedSegment {
 public:
  static TappedSegment leaf(std::size_t k, double weight, const ChainTaps& taps);
  /// Segment `left` followed by `right`; they must share a boundary.
  static TappedSegment series(const TappedSegment& left, const TappedSegment& right, const ChainTaps& taps,
                              std::size_t* ops = nullptr);
  /// Adds an independent edge of weight q from lo to hi.
  TappedSegment with_bypass(double q, const ChainTaps& taps, std::size_t* ops = nullptr) const;

  std::size_t lo() const noexcept { return lo_; }
  std::size_t hi() const noexcept { return hi_; }
  /// P(lo -> hi).
  double through() const noexcept;
  /// P(target reachable) once this segment spans the whole chain and the
  /// tap edges are added.
  double with_taps(const ChainTaps& taps) const noexcept;

 private:
  std::size_t lo_ = 0;
  std::size_t hi_ = 0;
  std::array<double, 8> p_{};
};

/// Medium construction: resources are merged in order of increasing usage
/// (ties by position). When a resource of usage u joins an adjacent merged
/// segment of lower usage u_s and probability p_s, the segment first gets a
/// parallel bypass of weight 1 - (1 - p_s)^((u - u_s) / u_s).
/// Throws kDegenerate if any usage is not positive.
ChainResult medium_chain(const std::vector<ChainResource>& resources, const ChainTaps& taps);

/// Low construction: the chain collapses to three stages. With u_max the
/// largest usage, the first and last resources get exponent u_max / u, and
/// the product of the middle resources gets exponent u_max / u_mean, where
/// u_mean is the mean of middle usages weighted by ln w (plain mean when all
/// middle weights are 1). The result's taps sit on boundaries 1 and 2.
/// Throws kDegenerate if any usage is not positive or the chain is shorter
/// than 3 resources.
ChainResult low_chain(const std::vector<ChainResource>& resources, const ChainTaps& taps);

/// The three stage weights of the low construction (first, middle, last).
std::array<double, 3> low_chain_weights(const std::vector<ChainResource>& resources);

}  // namespace blink
