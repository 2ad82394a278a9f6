#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace kneser {

namespace detail {

[[noreturn]] void throw_usage(const std::string& msg);
[[noreturn]] void throw_internal(const std::string& msg);

// Caller error: bad arguments or an instance outside the supported range.
inline void require(bool cond, const char* msg) {
  if (!cond) throw_usage(msg);
}

// Violated internal invariant.
inline void ensure(bool cond, const char* msg) {
  if (!cond) throw_internal(msg);
}

}  // namespace detail

// Ground set [n] = {1,..,n} and subset size k. Elements are 1-based; a subset
// is a 64-bit mask with bit e-1 standing for element e, hence the cap n <= 64.
struct GroundParams {
  int n = 0;
  int k = 0;

  friend bool operator==(const GroundParams&, const GroundParams&) = default;
};

// Throws std::invalid_argument unless 1 <= k <= n <= 64.
void validate_ground(const GroundParams& g);

// C(n,k) for 0 <= n <= 64; 0 when k lies outside [0,n]. Exact in 64 bits.
std::uint64_t binomial(int n, int k);

std::uint64_t full_mask(int n);
std::uint64_t mask_from_elements(const std::vector<int>& elements);
std::vector<int> elements_from_mask(std::uint64_t mask);
int min_element_of(std::uint64_t mask);

// All k-element masks over [n] in colexicographic order, which for equal-size
// sets coincides with increasing integer order of the masks.
std::vector<std::uint64_t> k_subset_masks(int n, int k);

// A k-subset of [n]; the vertex type of the Kneser graph K(n,k).
class Subset {
 public:
  Subset(std::uint64_t bits, const GroundParams& ground);
  static Subset from_elements(const std::vector<int>& elements,
                              const GroundParams& ground);

  std::uint64_t bits() const { return bits_; }
  const GroundParams& ground() const { return ground_; }
  bool contains(int element) const;
  int min_element() const { return min_element_of(bits_); }
  std::vector<int> elements() const { return elements_from_mask(bits_); }

  friend bool operator==(const Subset&, const Subset&) = default;

 private:
  std::uint64_t bits_;
  GroundParams ground_;
};

bool colex_less(const Subset& a, const Subset& b);

bool is_disjoint(const Subset& a, const Subset& b);

// |a \ b|; 0 iff a == b, k iff a and b are disjoint.
int diff_size(const Subset& a, const Subset& b);

// Combinatorial number system: the rank of {c1<..<ck} is sum_i C(c_i - 1, i).
std::uint64_t rank_colex(const Subset& a);
Subset unrank_colex(std::uint64_t rank, const GroundParams& g);

std::vector<Subset> all_k_subsets(const GroundParams& g);

// Textual format: ascending space-separated 1-based elements, e.g. "1 4 7".
std::string to_text(const Subset& a);
Subset subset_from_text(const std::string& text, const GroundParams& g);

}  // namespace kneser
