#include "germdyn/bitseq.hpp"

#include "germdyn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

namespace germdyn {

namespace {

std::vector<bool> minimal_cycle(const std::vector<bool>& c) {
  const std::size_t n = c.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = c[i] == c[i - p];
    if (ok) return std::vector<bool>(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return c;
}

bool uniform(const std::vector<bool>& c) {
  return std::all_of(c.begin(), c.end(), [&](bool b) { return b == c.front(); });
}

std::vector<bool> rotate_left(std::vector<bool> c, std::size_t r) {
  if (!c.empty()) std::rotate(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(r % c.size()), c.end());
  return c;
}

std::size_t mod_small(const Integer& n, std::size_t p) {
  return static_cast<std::size_t>(static_cast<unsigned long>(Integer(n % p)));
}

// Walks a sequence as maximal constant segments.
class Cursor {
 public:
  explicit Cursor(const BitSeq& s) : s_(s) {
    if (s_.runs().empty()) {
      in_cycle_ = true;
    } else {
      left_ = s_.runs()[0].length;
    }
  }

  bool in_cycle() const { return in_cycle_; }
  std::size_t phase() const { return phase_; }
  bool bit() const { return in_cycle_ ? s_.cycle()[phase_] : s_.runs()[run_].bit; }

  /// Length of the constant segment ahead; nullopt when it never ends.
  std::optional<Integer> segment() const {
    if (!in_cycle_) return left_;
    const auto& c = s_.cycle();
    if (uniform(c)) return std::nullopt;
    std::size_t k = 1;
    while (c[(phase_ + k) % c.size()] == c[phase_]) ++k;
    return Integer(k);
  }

  void advance(const Integer& k) {
    if (in_cycle_) {
      phase_ = (phase_ + mod_small(k, s_.cycle().size())) % s_.cycle().size();
      return;
    }
    left_ -= k;
    if (left_ == 0) {
      ++run_;
      if (run_ == s_.runs().size())
        in_cycle_ = true;
      else
        left_ = s_.runs()[run_].length;
    }
  }

 private:
  const BitSeq& s_;
  std::size_t run_ = 0;
  Integer left_;
  bool in_cycle_ = false;
  std::size_t phase_ = 0;
};

}  // namespace

BitSeq::BitSeq(std::vector<Run> runs, std::vector<bool> cycle)
    : runs_(std::move(runs)), cycle_(std::move(cycle)) {
  canonicalize();
}

BitSeq BitSeq::periodic(const std::vector<bool>& prefix, std::vector<bool> cycle) {
  std::vector<Run> runs;
  for (bool b : prefix) runs.push_back({b, Integer(1)});
  return BitSeq(std::move(runs), std::move(cycle));
}

BitSeq BitSeq::blocks(const std::vector<bool>& prefix, const std::vector<Integer>& lengths) {
  std::vector<Run> runs;
  for (bool b : prefix) runs.push_back({b, Integer(1)});
  for (const auto& l : lengths) {
    if (l < 0) throw PreconditionFailed("block length must be nonnegative");
    runs.push_back({false, l});
    runs.push_back({true, Integer(1)});
  }
  return BitSeq(std::move(runs), {false, true});
}

void BitSeq::canonicalize() {
  if (cycle_.empty()) throw PreconditionFailed("BitSeq cycle must be nonempty");
  cycle_ = minimal_cycle(cycle_);

  std::vector<Run> merged;
  for (auto& r : runs_) {
    if (r.length < 0) throw PreconditionFailed("negative run length");
    if (r.length == 0) continue;
    if (!merged.empty() && merged.back().bit == r.bit)
      merged.back().length += r.length;
    else
      merged.push_back(std::move(r));
  }
  runs_ = std::move(merged);

  // Shorten the prefix while its last bit can be folded into the cycle.
  const bool flat = uniform(cycle_);
  while (!runs_.empty() && runs_.back().bit == cycle_.back()) {
    if (flat) {
      runs_.pop_back();
      continue;
    }
    if (--runs_.back().length == 0) runs_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

bool BitSeq::bit(const Integer& n) const {
  if (n < 0) throw PreconditionFailed("negative bit index");
  Integer k = n;
  for (const auto& r : runs_) {
    if (k < r.length) return r.bit;
    k -= r.length;
  }
  return cycle_[mod_small(k, cycle_.size())];
}

BitSeq BitSeq::shift(const Integer& n) const {
  if (n < 0) throw PreconditionFailed("negative shift");
  Integer k = n;
  std::vector<Run> runs;
  std::size_t i = 0;
  for (; i < runs_.size(); ++i) {
    if (k < runs_[i].length) break;
    k -= runs_[i].length;
  }
  if (i < runs_.size()) {
    runs.push_back({runs_[i].bit, runs_[i].length - k});
    runs.insert(runs.end(), runs_.begin() + static_cast<std::ptrdiff_t>(i) + 1, runs_.end());
    return BitSeq(std::move(runs), cycle_);
  }
  return BitSeq({}, rotate_left(cycle_, mod_small(k, cycle_.size())));
}

Integer BitSeq::prefix_length() const {
  Integer total = 0;
  for (const auto& r : runs_) total += r.length;
  return total;
}

bool BitSeq::cycle_contains(bool b) const {
  return std::find(cycle_.begin(), cycle_.end(), b) != cycle_.end();
}

std::string BitSeq::key() const {
  std::string k;
  for (const auto& r : runs_) k += (r.bit ? "1^" : "0^") + r.length.str() + ",";
  k += "|";
  for (bool b : cycle_) k += b ? '1' : '0';
  return k;
}

std::optional<Integer> first_difference(const BitSeq& s, const BitSeq& t,
                                        const std::optional<Integer>& horizon) {
  Cursor a(s), b(t);
  Integer pos = 0;
  auto beyond = [&](const Integer& p) { return horizon && p >= *horizon; };
  while (true) {
    if (beyond(pos)) return std::nullopt;
    if (a.in_cycle() && b.in_cycle()) {
      const std::size_t pa = s.cycle().size(), pb = t.cycle().size();
      const std::size_t l = std::lcm(pa, pb);
      for (std::size_t i = 0; i < l; ++i) {
        Integer p = pos + i;
        if (beyond(p)) return std::nullopt;
        if (s.cycle()[(a.phase() + i) % pa] != t.cycle()[(b.phase() + i) % pb]) return p;
      }
      return std::nullopt;
    }
    if (a.bit() != b.bit()) return pos;
    auto la = a.segment(), lb = b.segment();
    Integer step = !la ? *lb : !lb ? *la : std::min(*la, *lb);
    a.advance(step);
    b.advance(step);
    pos += step;
  }
}

std::optional<Integer> shift_to(const BitSeq& t, const BitSeq& s) {
  Integer ps = s.prefix_length(), pt = t.prefix_length();
  if (ps > 0) {
    if (pt < ps) return std::nullopt;
    Integer n = pt - ps;
    if (t.shift(n) == s) return n;
    return std::nullopt;
  }
  if (s.cycle().size() != t.cycle().size()) return std::nullopt;
  BitSeq base = t.shift(pt);
  for (std::size_t r = 0; r < s.cycle().size(); ++r)
    if (rotate_left(base.cycle(), r) == s.cycle()) return pt + r;
  return std::nullopt;
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  BitSeq parse() {
    std::vector<BitSeq::Run> runs;
    if (peek_word("runs[")) {
      runs = parse_runs();
    } else if (peek_word("blocks[")) {
      return BitSeq::blocks({}, parse_lengths("blocks["));
    } else if (peek('(')) {
      auto cycle = parse_cycle();
      expect_end();
      return BitSeq({}, cycle);
    } else {
      for (bool b : parse_bits()) runs.push_back({b, Integer(1)});
    }
    if (at_end()) return BitSeq(std::move(runs), {false});
    expect(':');
    if (peek('(')) {
      auto cycle = parse_cycle();
      expect_end();
      return BitSeq(std::move(runs), cycle);
    }
    if (peek_word("blocks[")) {
      auto lengths = parse_lengths("blocks[");
      for (const auto& l : lengths) {
        runs.push_back({false, l});
        runs.push_back({true, Integer(1)});
      }
      expect_end();
      return BitSeq(std::move(runs), {false, true});
    }
    if (peek('0') || peek('1')) {
      bool b = text_[pos_] == '1';
      ++pos_;
      if (!consume_ellipsis()) fail("expected '...' after tail bit");
      expect_end();
      return BitSeq(std::move(runs), {b});
    }
    fail("expected a tail: (CYCLE), 0..., 1... or blocks[...]");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  bool at_end() const { return pos_ == text_.size(); }
  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }
  bool peek_word(std::string_view w) const { return text_.substr(pos_, w.size()) == w; }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void expect_end() const {
    if (!at_end()) fail("unexpected trailing characters");
  }

  bool consume_ellipsis() {
    if (peek_word("...")) {
      pos_ += 3;
      return true;
    }
    if (peek_word("…")) {
      pos_ += std::string_view("…").size();
      return true;
    }
    return false;
  }

  std::vector<bool> parse_bits() {
    std::vector<bool> bits;
    while (peek('0') || peek('1')) bits.push_back(text_[pos_++] == '1');
    return bits;
  }

  std::vector<bool> parse_cycle() {
    expect('(');
    auto bits = parse_bits();
    if (bits.empty()) fail("empty cycle");
    expect(')');
    return bits;
  }

  Integer parse_number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a nonnegative integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::vector<Integer> parse_lengths(std::string_view open) {
    pos_ += open.size();
    std::vector<Integer> out;
    if (peek(']')) fail("empty block list");
    while (true) {
      out.push_back(parse_number());
      if (peek(',')) {
        ++pos_;
        continue;
      }
      expect(']');
      return out;
    }
  }

  std::vector<BitSeq::Run> parse_runs() {
    pos_ += 5;
    std::vector<BitSeq::Run> out;
    while (!peek(']')) {
      if (!(peek('0') || peek('1'))) fail("expected a run bit");
      bool b = text_[pos_++] == '1';
      expect('^');
      out.push_back({b, parse_number()});
      if (peek(',')) ++pos_;
    }
    expect(']');
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

BitSeq parse_bitseq(std::string_view text) { return LiteralParser(text).parse(); }

std::string to_string(const BitSeq& s) {
  std::string cycle = "(";
  for (bool b : s.cycle()) cycle += b ? '1' : '0';
  cycle += ")";
  if (s.prefix_length() <= 256) {
    std::string out;
    for (const auto& r : s.runs())
      out.append(static_cast<std::size_t>(static_cast<unsigned long>(r.length)), r.bit ? '1' : '0');
    return out.empty() ? cycle : out + ":" + cycle;
  }
  std::string out = "runs[";
  for (std::size_t i = 0; i < s.runs().size(); ++i) {
    if (i) out += ",";
    out += (s.runs()[i].bit ? "1^" : "0^") + s.runs()[i].length.str();
  }
  return out + "]:" + cycle;
}

}  // namespace germdyn
