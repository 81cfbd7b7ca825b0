#pragma once

// Infinite binary sequences that are eventually periodic: a run-length
// encoded prefix followed by a repeating cycle. Run lengths are big integers,
// so prefixes like 0^(10^1000) 1 cost nothing. The ZEROS, ONES, PERIODIC and
// BLOCKS tail forms all reduce to this one representation.
//
// Every BitSeq is kept canonical (shortest prefix, minimal cycle), so two
// sequences are equal iff their representations are.

#include "germdyn/arith.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace germdyn {

class BitSeq {
 public:
  struct Run {
    bool bit = false;
    Integer length;
    friend bool operator==(const Run&, const Run&) = default;
  };

  /// 0^infinity.
  BitSeq() : cycle_{false} {}
  BitSeq(std::vector<Run> runs, std::vector<bool> cycle);

  static BitSeq zeros() { return BitSeq(); }
  static BitSeq ones() { return BitSeq({}, {true}); }
  /// prefix followed by cycle repeated forever.
  static BitSeq periodic(const std::vector<bool>& prefix, std::vector<bool> cycle);
  /// prefix, then 0^L1 1 0^L2 1 ... 0^LK 1, then (01) forever.
  static BitSeq blocks(const std::vector<bool>& prefix, const std::vector<Integer>& lengths);

  bool bit(const Integer& n) const;
  bool operator[](std::size_t n) const { return bit(Integer(n)); }

  /// sigma^n.
  BitSeq shift(const Integer& n = 1) const;

  const std::vector<Run>& runs() const noexcept { return runs_; }
  const std::vector<bool>& cycle() const noexcept { return cycle_; }
  /// Length of the non-periodic part.
  Integer prefix_length() const;
  bool cycle_contains(bool b) const;

  /// Canonical serialization, usable as a memo key.
  std::string key() const;

  friend bool operator==(const BitSeq& a, const BitSeq& b) {
    return a.runs_ == b.runs_ && a.cycle_ == b.cycle_;
  }

 private:
  void canonicalize();

  std::vector<Run> runs_;
  std::vector<bool> cycle_;
};

/// Least m < horizon with s_m != t_m. Without a horizon, nullopt means s == t.
std::optional<Integer> first_difference(const BitSeq& s, const BitSeq& t,
                                        const std::optional<Integer>& horizon = std::nullopt);

/// Some n >= 0 with sigma^n(t) == s, if there is one.
std::optional<Integer> shift_to(const BitSeq& t, const BitSeq& s);

/// Literals: "0110" (zeros after), "0110:(10)", "0110:0...", "0110:1..."
/// (also with the unicode ellipsis), "(10)", "0110:blocks[2,1001]", and the
/// run form emitted by to_string for long prefixes, "runs[0^5,1^1]:(01)".
BitSeq parse_bitseq(std::string_view text);
std::string to_string(const BitSeq& s);

}  // namespace germdyn
