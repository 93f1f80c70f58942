#include "horadam/sequence.hpp"

#include <string>

#include "horadam/error.hpp"

namespace horadam {

void check_params(const SequenceParams& params) {
  if (params.p < 1) {
    throw Error(ErrorCode::invalid_argument, "p must be a positive integer, got " + std::to_string(params.p));
  }
}

void check_query(const SubseqQuery& query) {
  if (query.m < 1) throw Error(ErrorCode::invalid_argument, "m must be >= 1");
  if (query.d < 1) throw Error(ErrorCode::invalid_argument, "d must be >= 1");
  if (query.n < 1) throw Error(ErrorCode::invalid_argument, "n must be >= 1");
  if (query.l < 1 - query.m) throw Error(ErrorCode::invalid_argument, "l must be >= 1 - m");
}

SequenceParams preset(Preset name) {
  switch (name) {
    case Preset::fibonacci: return {0, 1, 1, 1};
    case Preset::lucas: return {2, 1, 1, 1};
    case Preset::pell: return {0, 1, 2, 1};
  }
  throw Error(ErrorCode::invalid_argument, "unknown preset");
}

SequenceParams preset(std::string_view name) {
  if (name == "fibonacci") return preset(Preset::fibonacci);
  if (name == "lucas") return preset(Preset::lucas);
  if (name == "pell") return preset(Preset::pell);
  throw Error(ErrorCode::invalid_argument, "unknown preset '" + std::string(name) + "'");
}

std::string_view preset_name(Preset name) noexcept {
  switch (name) {
    case Preset::fibonacci: return "fibonacci";
    case Preset::lucas: return "lucas";
    case Preset::pell: return "pell";
  }
  return "unknown";
}

TermCursor::TermCursor(const SequenceParams& params, std::int64_t start)
    : p_(static_cast<long>(params.p)),
      q_(static_cast<long>(params.q)),
      index_(0),
      current_(static_cast<long>(params.a)),
      next_(static_cast<long>(params.b)) {
  if (start < 0) throw Error(ErrorCode::negative_index, "negative sequence index " + std::to_string(start));
  advance(start);
}

void TermCursor::advance() {
  BigInt following = p_ * next_ + q_ * current_;
  current_.swap(next_);
  next_.swap(following);
  ++index_;
}

void TermCursor::advance(std::int64_t steps) {
  for (std::int64_t i = 0; i < steps; ++i) advance();
}

BigInt term(const SequenceParams& params, std::int64_t n) {
  check_params(params);
  return TermCursor(params, n).value();
}

BigInt subsequence_term(const SequenceParams& params, const SubseqQuery& query, std::int64_t k) {
  check_query(query);
  if (k < query.n) {
    throw Error(ErrorCode::invalid_argument,
                "k=" + std::to_string(k) + " precedes the tail start n=" + std::to_string(query.n));
  }
  const std::int64_t index = query.index(k);
  if (index < 0) throw Error(ErrorCode::negative_index, "index m*k+l is negative");
  return term(params, index);
}

std::vector<BigInt> term_block(const SequenceParams& params, std::int64_t start, std::int64_t count) {
  check_params(params);
  if (count < 1) throw Error(ErrorCode::invalid_argument, "count must be positive");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(count));
  TermCursor cursor(params, start);
  for (std::int64_t j = 0; j < count; ++j) {
    out.push_back(cursor.value());
    cursor.advance();
  }
  return out;
}

}  // namespace horadam
