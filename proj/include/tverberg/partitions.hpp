#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tverberg/rational.hpp"

namespace tverberg {

/// Point indices are 0-based in code; the text format is 1-based.
using IndexSet = std::vector<int>;

/// An ordered q-tuple of disjoint nonempty index sets covering {0..n-1}.
class OrderedPartition {
 public:
  OrderedPartition() = default;
  /// Throws InvalidParameter unless the parts are nonempty, disjoint and
  /// cover {0..n-1}. Each part is stored sorted.
  OrderedPartition(std::vector<IndexSet> parts, int n);

  const std::vector<IndexSet>& parts() const noexcept { return parts_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  int num_points() const noexcept { return n_; }

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::vector<IndexSet> parts_;
  int n_ = 0;
};

/// A set of q disjoint nonempty index sets covering {0..n-1}. Stored in a
/// normalized form (each part sorted, parts ordered by smallest element), so
/// equality is set equality.
class UnorderedPartition {
 public:
  UnorderedPartition() = default;
  UnorderedPartition(std::vector<IndexSet> parts, int n);

  /// Builds the partition whose part of each index is given by a restricted
  /// growth string (block numbers in order of first appearance).
  static UnorderedPartition from_growth_string(const std::vector<int>& blocks);

  const std::vector<IndexSet>& parts() const noexcept { return parts_; }
  int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
  int num_points() const noexcept { return n_; }

  friend bool operator==(const UnorderedPartition&, const UnorderedPartition&) = default;
  friend auto operator<=>(const UnorderedPartition& a, const UnorderedPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<IndexSet> parts_;
  int n_ = 0;
};

/// Exponent g_a in Z/q of each point: g_a = j for a in part j (0-based), so
/// the point's root of unity is w^(g_a).
struct Labeling {
  int order = 0;
  std::vector<int> exponents;

  /// Adds `shift` to every exponent modulo the order.
  Labeling rotated(int shift) const;
  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Streams the partitions of {0..n-1} into exactly q nonempty parts in
/// restricted-growth-string order, optionally skipping those with a part
/// larger than `max_part`.
///
///   PartitionStream stream(7, 3);
///   while (stream.next()) use(stream.growth_string());
class PartitionStream {
 public:
  /// Throws InvalidParameter if q < 1. q > n yields an empty stream.
  PartitionStream(int n, int q, std::optional<int> max_part = std::nullopt);

  /// Advances to the next partition; false once the stream is exhausted.
  bool next();

  /// Block of each index; block numbers follow first appearance, so this is
  /// also the labeling of the partition's canonical order.
  const std::vector<int>& growth_string() const noexcept { return blocks_; }
  UnorderedPartition partition() const { return UnorderedPartition::from_growth_string(blocks_); }

 private:
  bool advance();
  bool accepted() const;

  int n_;
  int q_;
  std::optional<int> max_part_;
  std::vector<int> blocks_;
  bool started_ = false;
  bool done_ = false;
};

/// Materializes the stream. Intended for tests and small n.
std::vector<UnorderedPartition> enumerate_partitions(int n, int q,
                                                     std::optional<int> max_part = std::nullopt);

/// Stirling number of the second kind S(n, q).
BigInt stirling_count(int n, int q);

/// Parts sorted by their smallest element.
OrderedPartition canonical_order(const UnorderedPartition& p);

/// g_a = j for a in the j-th part. Throws InvalidParameter if the part count
/// differs from q.
Labeling labeling_of(const OrderedPartition& p, int q);

/// Parses "1,4|2,5|3,6,7" (1-based). With `n`, also enforces that the parts
/// cover {1..n}; without it, n is the largest index seen. Throws
/// PartitionParseError with the character offset of the problem.
OrderedPartition parse_partition(std::string_view text, std::optional<int> n = std::nullopt);

std::string format_partition(const OrderedPartition& p);
std::string format_partition(const UnorderedPartition& p);

}  // namespace tverberg
