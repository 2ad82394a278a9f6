#include "kneser/subsets.hpp"

#include <array>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace kneser {

namespace detail {

void throw_usage(const std::string& msg) { throw std::invalid_argument(msg); }
void throw_internal(const std::string& msg) { throw std::logic_error(msg); }

}  // namespace detail

namespace {

constexpr int kMaxGround = 64;

// C(64,32) = 1832624140942590534 still fits in 64 bits, so the whole Pascal
// triangle up to n = 64 is exact.
const std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1>&
pascal_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kMaxGround + 1>, kMaxGround + 1> t{};
    for (int n = 0; n <= kMaxGround; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

void validate_ground(const GroundParams& g) {
  detail::require(g.k >= 1, "ground: k must be at least 1");
  detail::require(g.k <= g.n, "ground: k must not exceed n");
  detail::require(g.n <= kMaxGround, "ground: n must not exceed 64");
}

std::uint64_t binomial(int n, int k) {
  detail::require(0 <= n && n <= kMaxGround, "binomial: n outside [0, 64]");
  if (k < 0 || k > n) return 0;
  return pascal_table()[n][k];
}

std::uint64_t full_mask(int n) {
  detail::require(0 <= n && n <= kMaxGround, "full_mask: n outside [0, 64]");
  return n == kMaxGround ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

std::uint64_t mask_from_elements(const std::vector<int>& elements) {
  std::uint64_t mask = 0;
  for (int e : elements) {
    detail::require(1 <= e && e <= kMaxGround, "element outside [1, 64]");
    const std::uint64_t bit = std::uint64_t{1} << (e - 1);
    detail::require((mask & bit) == 0, "repeated element");
    mask |= bit;
  }
  return mask;
}

std::vector<int> elements_from_mask(std::uint64_t mask) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(std::popcount(mask)));
  while (mask != 0) {
    out.push_back(std::countr_zero(mask) + 1);
    mask &= mask - 1;
  }
  return out;
}

int min_element_of(std::uint64_t mask) {
  detail::require(mask != 0, "min_element_of: empty mask");
  return std::countr_zero(mask) + 1;
}

std::vector<std::uint64_t> k_subset_masks(int n, int k) {
  detail::require(0 <= n && n <= kMaxGround, "k_subset_masks: n outside [0, 64]");
  detail::require(0 <= k && k <= n, "k_subset_masks: k outside [0, n]");
  const std::uint64_t count = binomial(n, k);
  detail::require(count <= 10'000'000, "k_subset_masks: too many subsets to materialize");

  std::vector<std::uint64_t> out;
  out.reserve(count);
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  std::uint64_t v = (k == kMaxGround) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1);
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back(v);
    if (i + 1 == count) break;
    // Gosper's hack: next k-bit mask in increasing order.
    const std::uint64_t low = v & (~v + 1);
    const std::uint64_t carry = v + low;
    v = carry | (((v ^ carry) >> 2) / low);
  }
  return out;
}

Subset::Subset(std::uint64_t bits, const GroundParams& ground)
    : bits_(bits), ground_(ground) {
  validate_ground(ground);
  detail::require((bits & ~full_mask(ground.n)) == 0, "subset: element outside the ground set");
  detail::require(std::popcount(bits) == ground.k, "subset: wrong cardinality");
}

Subset Subset::from_elements(const std::vector<int>& elements,
                             const GroundParams& ground) {
  return Subset(mask_from_elements(elements), ground);
}

bool Subset::contains(int element) const {
  if (element < 1 || element > ground_.n) return false;
  return (bits_ >> (element - 1)) & 1u;
}

bool colex_less(const Subset& a, const Subset& b) {
  detail::require(a.ground() == b.ground(), "colex_less: mismatched ground sets");
  return a.bits() < b.bits();
}

bool is_disjoint(const Subset& a, const Subset& b) {
  detail::require(a.ground() == b.ground(), "is_disjoint: mismatched ground sets");
  return (a.bits() & b.bits()) == 0;
}

int diff_size(const Subset& a, const Subset& b) {
  detail::require(a.ground() == b.ground(), "diff_size: mismatched ground sets");
  return std::popcount(a.bits() & ~b.bits());
}

std::uint64_t rank_colex(const Subset& a) {
  std::uint64_t rank = 0;
  int i = 0;
  for (int c : a.elements()) {
    ++i;
    rank += binomial(c - 1, i);
  }
  return rank;
}

Subset unrank_colex(std::uint64_t rank, const GroundParams& g) {
  validate_ground(g);
  detail::require(rank < binomial(g.n, g.k), "unrank_colex: rank out of range");
  std::uint64_t bits = 0;
  int hi = g.n;
  for (int i = g.k; i >= 1; --i) {
    int c = hi;  // largest c with C(c-1, i) <= rank; c >= i terminates at C(i-1, i) = 0
    while (binomial(c - 1, i) > rank) --c;
    bits |= std::uint64_t{1} << (c - 1);
    rank -= binomial(c - 1, i);
    hi = c - 1;
  }
  detail::ensure(rank == 0, "unrank_colex: leftover rank");
  return Subset(bits, g);
}

std::vector<Subset> all_k_subsets(const GroundParams& g) {
  validate_ground(g);
  std::vector<Subset> out;
  const auto masks = k_subset_masks(g.n, g.k);
  out.reserve(masks.size());
  for (std::uint64_t m : masks) out.emplace_back(m, g);
  return out;
}

std::string to_text(const Subset& a) {
  std::ostringstream out;
  bool first = true;
  for (int e : a.elements()) {
    if (!first) out << ' ';
    out << e;
    first = false;
  }
  return out.str();
}

Subset subset_from_text(const std::string& text, const GroundParams& g) {
  validate_ground(g);
  std::istringstream in(text);
  std::vector<int> elems;
  int value = 0;
  while (in >> value) elems.push_back(value);
  detail::require(in.eof(), "subset text: expected only integers");
  detail::require(static_cast<int>(elems.size()) == g.k, "subset text: wrong number of elements");
  for (std::size_t i = 1; i < elems.size(); ++i)
    detail::require(elems[i - 1] < elems[i], "subset text: elements must be ascending");
  for (int e : elems)
    detail::require(1 <= e && e <= g.n, "subset text: element outside the ground set");
  return Subset::from_elements(elems, g);
}

}  // namespace kneser
