// Copyright 2026 The oraclec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace oraclec {

/*! \brief Raised when a network or table exceeds the 16-variable bound. */
class too_many_inputs : public std::runtime_error {
public:
  explicit too_many_inputs(uint64_t count)
      : std::runtime_error("too many inputs: " + std::to_string(count) + " (at most 16 are supported)"),
        count(count) {}
  uint64_t count;
};

/*! \brief Bit-parallel truth table over up to 16 variables.
 *
 * Bit x of the table holds f(x), where variable i contributes bit i of the
 * row index x (LSB-first).
 */
class truth_table {
public:
  truth_table() : truth_table(0u) {}

  explicit truth_table(uint32_t num_vars) : num_vars_(num_vars) {
    if (num_vars > 16u) {
      throw too_many_inputs(num_vars);
    }
    words_.assign(num_words(), 0u);
  }

  static truth_table constant(bool value, uint32_t num_vars) {
    truth_table t(num_vars);
    if (value) {
      for (auto& w : t.words_) {
        w = ~0ull;
      }
      t.mask_excess();
    }
    return t;
  }

  /*! \brief Table of variable `var` itself. */
  static truth_table projection(uint32_t var, uint32_t num_vars) {
    truth_table t(num_vars);
    for (uint64_t x = 0; x < t.num_bits(); ++x) {
      if ((x >> var) & 1u) {
        t.set_bit(x, true);
      }
    }
    return t;
  }

  static truth_table from_uint16(uint16_t bits, uint32_t num_vars = 4u) {
    truth_table t(num_vars);
    t.words_[0] = bits & ((num_vars >= 4u) ? 0xffffull : ((1ull << (1u << num_vars)) - 1u));
    return t;
  }

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return 1ull << num_vars_; }

  bool bit(uint64_t index) const { return (words_[index >> 6u] >> (index & 63u)) & 1u; }

  void set_bit(uint64_t index, bool value) {
    if (value) {
      words_[index >> 6u] |= 1ull << (index & 63u);
    } else {
      words_[index >> 6u] &= ~(1ull << (index & 63u));
    }
  }

  truth_table operator~() const {
    truth_table r(num_vars_);
    for (size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] = ~words_[i];
    }
    r.mask_excess();
    return r;
  }

  truth_table operator&(const truth_table& other) const { return apply(other, [](uint64_t a, uint64_t b) { return a & b; }); }
  truth_table operator^(const truth_table& other) const { return apply(other, [](uint64_t a, uint64_t b) { return a ^ b; }); }
  truth_table operator|(const truth_table& other) const { return apply(other, [](uint64_t a, uint64_t b) { return a | b; }); }

  bool operator==(const truth_table& other) const {
    return num_vars_ == other.num_vars_ && words_ == other.words_;
  }
  bool operator!=(const truth_table& other) const { return !(*this == other); }

  /*! \brief Integer comparison: bit 0 is the least significant bit. */
  bool operator<(const truth_table& other) const {
    for (size_t i = words_.size(); i-- > 0;) {
      if (words_[i] != other.words_[i]) {
        return words_[i] < other.words_[i];
      }
    }
    return false;
  }

  bool is_constant(bool value) const { return *this == constant(value, num_vars_); }

  /*! \brief Cofactor with `var` fixed; keeps the variable count. */
  truth_table cofactor(uint32_t var, bool value) const {
    truth_table r(num_vars_);
    const uint64_t var_bit = 1ull << var;
    for (uint64_t x = 0; x < num_bits(); ++x) {
      const uint64_t src = value ? (x | var_bit) : (x & ~var_bit);
      r.set_bit(x, bit(src));
    }
    return r;
  }

  bool depends_on(uint32_t var) const { return cofactor(var, false) != cofactor(var, true); }

  std::vector<uint32_t> support() const {
    std::vector<uint32_t> vars;
    for (uint32_t v = 0; v < num_vars_; ++v) {
      if (depends_on(v)) {
        vars.push_back(v);
      }
    }
    return vars;
  }

  /*! \brief Re-expresses the table over the given variables (ascending).
   *
   * The function must not depend on any variable outside `vars`.
   */
  truth_table shrink_to(const std::vector<uint32_t>& vars) const {
    truth_table r(static_cast<uint32_t>(vars.size()));
    for (uint64_t y = 0; y < r.num_bits(); ++y) {
      uint64_t x = 0;
      for (size_t i = 0; i < vars.size(); ++i) {
        if ((y >> i) & 1u) {
          x |= 1ull << vars[i];
        }
      }
      r.set_bit(y, bit(x));
    }
    return r;
  }

  /*! \brief Pads with vacuous variables by replication. */
  truth_table extend_to(uint32_t new_num_vars) const {
    truth_table r(new_num_vars);
    const uint64_t mask = num_bits() - 1u;
    for (uint64_t x = 0; x < r.num_bits(); ++x) {
      r.set_bit(x, bit(x & mask));
    }
    return r;
  }

  /*! \brief Low 16 bits; requires at most 4 variables. */
  uint16_t to_uint16() const { return static_cast<uint16_t>(words_[0] & 0xffffull); }

  std::string to_hex() const {
    static const char* digits = "0123456789abcdef";
    const uint64_t nibbles = num_bits() <= 4u ? 1u : num_bits() / 4u;
    std::string s;
    for (uint64_t i = nibbles; i-- > 0;) {
      const uint64_t word = words_[(i * 4u) >> 6u];
      s.push_back(digits[(word >> ((i * 4u) & 63u)) & 0xfull]);
    }
    return s;
  }

private:
  size_t num_words() const { return num_vars_ <= 6u ? 1u : (num_bits() >> 6u); }

  void mask_excess() {
    if (num_vars_ < 6u) {
      words_[0] &= (1ull << num_bits()) - 1u;
    }
  }

  template <typename Fn>
  truth_table apply(const truth_table& other, Fn&& fn) const {
    if (num_vars_ != other.num_vars_) {
      throw std::invalid_argument("truth_table: variable counts differ");
    }
    truth_table r(num_vars_);
    for (size_t i = 0; i < words_.size(); ++i) {
      r.words_[i] = fn(words_[i], other.words_[i]);
    }
    r.mask_excess();
    return r;
  }

  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

} // namespace oraclec
