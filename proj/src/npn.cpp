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

#include <algorithm>

#include "oraclec/npn.hpp"

namespace oraclec {

namespace {

struct perm_neg {
  std::array<uint8_t, 4> perm;
  uint8_t neg;
  std::array<uint8_t, 16> row;  // row[x] = source row index
};

// All 24 * 16 permutation/negation pairs with their row maps.
const std::vector<perm_neg>& transform_rows() {
  static const std::vector<perm_neg> rows = [] {
    std::vector<perm_neg> result;
    std::array<uint8_t, 4> perm{0, 1, 2, 3};
    do {
      for (uint8_t neg = 0; neg < 16u; ++neg) {
        perm_neg pn{perm, neg, {}};
        for (uint32_t x = 0; x < 16u; ++x) {
          uint32_t y = 0;
          for (uint32_t j = 0; j < 4u; ++j) {
            if (((x >> perm[j]) ^ (neg >> j)) & 1u) {
              y |= 1u << j;
            }
          }
          pn.row[x] = static_cast<uint8_t>(y);
        }
        result.push_back(pn);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return result;
  }();
  return rows;
}

uint16_t gather(uint16_t table, const std::array<uint8_t, 16>& row) {
  uint16_t result = 0;
  for (uint32_t x = 0; x < 16u; ++x) {
    result |= static_cast<uint16_t>(((table >> row[x]) & 1u) << x);
  }
  return result;
}

} // namespace

uint16_t npn_apply(const npn_transform& t, uint16_t table) {
  uint16_t result = 0;
  for (uint32_t x = 0; x < 16u; ++x) {
    uint32_t y = 0;
    for (uint32_t j = 0; j < 4u; ++j) {
      if (((x >> t.perm[j]) ^ (t.input_negation >> j)) & 1u) {
        y |= 1u << j;
      }
    }
    bool value = ((table >> y) & 1u) != 0u;
    if (t.output_negation) {
      value = !value;
    }
    if (value) {
      result |= static_cast<uint16_t>(1u << x);
    }
  }
  return result;
}

npn_transform npn_invert(const npn_transform& t) {
  npn_transform inv;
  inv.output_negation = t.output_negation;
  inv.input_negation = 0;
  for (uint32_t j = 0; j < 4u; ++j) {
    inv.perm[t.perm[j]] = static_cast<uint8_t>(j);
    if ((t.input_negation >> j) & 1u) {
      inv.input_negation |= static_cast<uint8_t>(1u << t.perm[j]);
    }
  }
  return inv;
}

std::pair<uint16_t, npn_transform> npn_canonicalize(uint16_t table) {
  uint16_t best = table;
  npn_transform best_transform;
  bool first = true;
  for (const auto& pn : transform_rows()) {
    const uint16_t plain = gather(table, pn.row);
    for (int out = 0; out < 2; ++out) {
      const uint16_t candidate = out ? static_cast<uint16_t>(~plain) : plain;
      if (first || candidate < best) {
        best = candidate;
        best_transform = npn_invert(npn_transform{pn.perm, pn.neg, out != 0});
        first = false;
      }
    }
  }
  return {best, best_transform};
}

std::pair<truth_table, npn_transform> npn_canonicalize(const truth_table& t) {
  const auto padded = t.num_vars() < 4u ? t.extend_to(4u) : t;
  const auto [canon, transform] = npn_canonicalize(padded.to_uint16());
  return {truth_table::from_uint16(canon), transform};
}

} // namespace oraclec
