#include "tverberg/partitions.hpp"

#include <algorithm>
#include <cctype>

#include "tverberg/errors.hpp"

namespace tverberg {

namespace {

void check_cover(const std::vector<IndexSet>& parts, int n) {
  std::vector<bool> seen(n, false);
  int covered = 0;
  for (const auto& part : parts) {
    if (part.empty()) throw InvalidParameter("partition has an empty part");
    for (int a : part) {
      if (a < 0 || a >= n) throw InvalidParameter("partition index out of range");
      if (seen[a]) throw InvalidParameter("partition parts overlap");
      seen[a] = true;
      ++covered;
    }
  }
  if (covered != n) throw InvalidParameter("partition does not cover every index");
}

}  // namespace

OrderedPartition::OrderedPartition(std::vector<IndexSet> parts, int n) : parts_(std::move(parts)), n_(n) {
  check_cover(parts_, n_);
  for (auto& part : parts_) std::sort(part.begin(), part.end());
}

UnorderedPartition::UnorderedPartition(std::vector<IndexSet> parts, int n) : parts_(std::move(parts)), n_(n) {
  check_cover(parts_, n_);
  for (auto& part : parts_) std::sort(part.begin(), part.end());
  std::sort(parts_.begin(), parts_.end());
}

UnorderedPartition UnorderedPartition::from_growth_string(const std::vector<int>& blocks) {
  UnorderedPartition p;
  p.n_ = static_cast<int>(blocks.size());
  for (int a = 0; a < p.n_; ++a) {
    const auto b = static_cast<std::size_t>(blocks[a]);
    if (b >= p.parts_.size()) p.parts_.resize(b + 1);
    p.parts_[b].push_back(a);
  }
  return p;
}

Labeling Labeling::rotated(int shift) const {
  Labeling out = *this;
  for (auto& g : out.exponents) g = ((g + shift) % order + order) % order;
  return out;
}

PartitionStream::PartitionStream(int n, int q, std::optional<int> max_part)
    : n_(n), q_(q), max_part_(max_part) {
  if (q < 1) throw InvalidParameter("number of parts must be >= 1");
  if (n < 0) throw InvalidParameter("number of points must be >= 0");
  if (q > n) done_ = true;
}

bool PartitionStream::accepted() const {
  if (!max_part_) return true;
  std::vector<int> sizes(q_, 0);
  for (int b : blocks_) {
    if (++sizes[b] > *max_part_) return false;
  }
  return true;
}

bool PartitionStream::advance() {
  if (!started_) {
    // Lexicographically first: zeros, then the new blocks 1..q-1 at the tail.
    started_ = true;
    blocks_.assign(n_, 0);
    for (int j = 1; j < q_; ++j) blocks_[n_ - q_ + j] = j;
    return true;
  }
  std::vector<int> prefix_max(n_, 0);
  for (int i = 1; i < n_; ++i) prefix_max[i] = std::max(prefix_max[i - 1], blocks_[i - 1]);
  for (int i = n_ - 1; i >= 1; --i) {
    const int limit = std::min(prefix_max[i] + 1, q_ - 1);
    for (int v = blocks_[i] + 1; v <= limit; ++v) {
      const int used = std::max(prefix_max[i], v) + 1;
      const int remaining = n_ - 1 - i;
      if (q_ - used > remaining) continue;
      blocks_[i] = v;
      for (int j = i + 1; j < n_; ++j) blocks_[j] = 0;
      for (int j = 0; j < q_ - used; ++j) blocks_[n_ - (q_ - used) + j] = used + j;
      return true;
    }
  }
  return false;
}

bool PartitionStream::next() {
  while (!done_) {
    if (!advance()) {
      done_ = true;
      break;
    }
    if (accepted()) return true;
  }
  return false;
}

std::vector<UnorderedPartition> enumerate_partitions(int n, int q, std::optional<int> max_part) {
  std::vector<UnorderedPartition> out;
  PartitionStream stream(n, q, max_part);
  while (stream.next()) out.push_back(stream.partition());
  return out;
}

BigInt stirling_count(int n, int q) {
  if (n < 0 || q < 0) throw InvalidParameter("stirling_count arguments must be >= 0");
  // row[k] = S(i, k) for the current i.
  std::vector<BigInt> row(q + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int k = std::min(i, q); k >= 1; --k) row[k] = k * row[k] + row[k - 1];
    row[0] = 0;
  }
  return row[q];
}

OrderedPartition canonical_order(const UnorderedPartition& p) {
  return OrderedPartition(p.parts(), p.num_points());
}

Labeling labeling_of(const OrderedPartition& p, int q) {
  if (p.num_parts() != q) {
    throw InvalidParameter("labeling_of: partition has " + std::to_string(p.num_parts()) +
                           " parts, expected " + std::to_string(q));
  }
  Labeling lab{q, std::vector<int>(p.num_points(), 0)};
  for (int j = 0; j < q; ++j) {
    for (int a : p.parts()[j]) lab.exponents[a] = j;
  }
  return lab;
}

OrderedPartition parse_partition(std::string_view text, std::optional<int> n) {
  std::vector<IndexSet> parts(1);
  std::vector<std::size_t> first_seen;
  int largest = 0;
  std::size_t i = 0;
  auto fail = [](const std::string& what, std::size_t pos) -> void {
    throw PartitionParseError(what, pos);
  };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  if (text.empty()) fail("empty partition", 0);
  while (true) {
    skip_space();
    const std::size_t start = i;
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail("expected an index", i);
    }
    long value = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      value = value * 10 + (text[i] - '0');
      if (value > 1'000'000) fail("index too large", start);
      ++i;
    }
    if (value < 1) fail("indices are 1-based", start);
    if (n && value > *n) fail("index " + std::to_string(value) + " exceeds " + std::to_string(*n), start);
    const int a = static_cast<int>(value) - 1;
    if (static_cast<std::size_t>(a) >= first_seen.size()) first_seen.resize(a + 1, std::string_view::npos);
    if (first_seen[a] != std::string_view::npos) {
      fail("index " + std::to_string(value) + " appears twice", start);
    }
    first_seen[a] = start;
    largest = std::max(largest, static_cast<int>(value));
    parts.back().push_back(a);
    skip_space();
    if (i == text.size()) break;
    if (text[i] == ',') {
      ++i;
    } else if (text[i] == '|') {
      ++i;
      parts.emplace_back();
    } else {
      fail(std::string("unexpected character '") + text[i] + "'", i);
    }
  }
  const int total = n.value_or(largest);
  for (int a = 0; a < total; ++a) {
    if (static_cast<std::size_t>(a) >= first_seen.size() || first_seen[a] == std::string_view::npos) {
      fail("index " + std::to_string(a + 1) + " missing", text.size());
    }
  }
  return OrderedPartition(std::move(parts), total);
}

std::string format_partition(const OrderedPartition& p) {
  std::string out;
  for (std::size_t j = 0; j < p.parts().size(); ++j) {
    if (j) out += '|';
    const auto& part = p.parts()[j];
    for (std::size_t i = 0; i < part.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(part[i] + 1);
    }
  }
  return out;
}

std::string format_partition(const UnorderedPartition& p) { return format_partition(canonical_order(p)); }

}  // namespace tverberg
