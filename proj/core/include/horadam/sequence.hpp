#pragma once

// Exact evaluation of the Horadam sequence
//
//   W_0 = a, W_1 = b, W_n = p W_{n-1} + q W_{n-2}
//
// and of the subsequence terms W_{mk+l} that the reciprocal sums run over.
// All values are GMP integers; nothing here touches floating point.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "horadam/real.hpp"

namespace horadam {

struct SequenceParams {
  std::int64_t a = 0;
  std::int64_t b = 1;
  std::int64_t p = 1;
  std::int64_t q = 1;

  friend bool operator==(const SequenceParams&, const SequenceParams&) = default;
};

/// Selects the summand 1/W_{mk+l}^d (times (-1)^k when alternating) for k >= n.
struct SubseqQuery {
  std::int64_t m = 1;
  std::int64_t l = 0;
  int d = 1;
  std::int64_t n = 1;
  bool alternating = false;

  std::int64_t index(std::int64_t k) const noexcept { return m * k + l; }
  friend bool operator==(const SubseqQuery&, const SubseqQuery&) = default;
};

/// Throws invalid_argument unless p >= 1.
void check_params(const SequenceParams& params);
/// Throws invalid_argument unless m, d, n >= 1 and l >= 1 - m.
void check_query(const SubseqQuery& query);

enum class Preset { fibonacci, lucas, pell };

SequenceParams preset(Preset name);
/// Accepts "fibonacci", "lucas" or "pell".
SequenceParams preset(std::string_view name);
std::string_view preset_name(Preset name) noexcept;

BigInt term(const SequenceParams& params, std::int64_t n);
BigInt subsequence_term(const SequenceParams& params, const SubseqQuery& query, std::int64_t k);
std::vector<BigInt> term_block(const SequenceParams& params, std::int64_t start, std::int64_t count);

/// Walks the sequence forward while holding only (W_j, W_{j+1}).
class TermCursor {
 public:
  TermCursor(const SequenceParams& params, std::int64_t start);

  std::int64_t index() const noexcept { return index_; }
  const BigInt& value() const noexcept { return current_; }
  const BigInt& next_value() const noexcept { return next_; }

  void advance();
  void advance(std::int64_t steps);

 private:
  BigInt p_;
  BigInt q_;
  std::int64_t index_;
  BigInt current_;
  BigInt next_;
};

}  // namespace horadam
