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

#include <bit>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "oraclec/database.hpp"

namespace oraclec {

namespace {

constexpr std::array<uint16_t, 4> k_projection = {0xaaaa, 0xcccc, 0xf0f0, 0xff00};

uint16_t eval_affine(const affine_form& f, const std::vector<uint16_t>& products) {
  uint16_t v = f.constant ? 0xffff : 0x0000;
  for (uint32_t i = 0; i < 4u; ++i) {
    if ((f.terms >> i) & 1u) {
      v ^= k_projection[i];
    }
  }
  for (size_t i = 0; i < products.size(); ++i) {
    if ((f.terms >> (4u + i)) & 1u) {
      v ^= products[i];
    }
  }
  return v;
}

// Row echelon basis over GF(2)^16 with combination tracking.  Combination
// bit 0 is the constant, bits 1..4 the inputs, bits 5..7 the AND outputs.
struct gf2_basis {
  struct row {
    uint16_t vec;
    uint16_t combo;
  };
  std::vector<row> rows;

  // Returns false if the vector is dependent on the existing rows.
  bool insert(uint16_t vec, uint16_t combo) {
    for (const auto& r : rows) {
      if (vec & lowest_bit(r.vec)) {
        vec ^= r.vec;
        combo ^= r.combo;
      }
    }
    if (vec == 0) {
      return false;
    }
    rows.push_back({vec, combo});
    return true;
  }

  std::optional<uint16_t> solve(uint16_t target) const {
    uint16_t combo = 0;
    for (const auto& r : rows) {
      if (target & lowest_bit(r.vec)) {
        target ^= r.vec;
        combo ^= r.combo;
      }
    }
    if (target != 0) {
      return std::nullopt;
    }
    return combo;
  }

  bool contains(uint16_t vec) const {
    for (const auto& r : rows) {
      if (vec & lowest_bit(r.vec)) {
        vec ^= r.vec;
      }
    }
    return vec == 0;
  }

  std::vector<uint16_t> signature() const {
    std::vector<uint16_t> sig;
    sig.reserve(rows.size());
    for (const auto& r : rows) {
      sig.push_back(r.vec);
    }
    return sig;
  }

private:
  static uint16_t lowest_bit(uint16_t v) { return static_cast<uint16_t>(v & (~v + 1u)); }
};

gf2_basis affine_closure(const std::vector<uint16_t>& products) {
  gf2_basis basis;
  basis.insert(0xffff, 1u);
  for (uint32_t i = 0; i < 4u; ++i) {
    basis.insert(k_projection[i], static_cast<uint16_t>(1u << (1u + i)));
  }
  for (size_t i = 0; i < products.size(); ++i) {
    basis.insert(products[i], static_cast<uint16_t>(1u << (5u + i)));
  }
  return basis;
}

affine_form decode_combo(uint16_t combo) {
  affine_form f;
  f.constant = (combo & 1u) != 0u;
  f.terms = static_cast<uint16_t>(combo >> 1u);
  return f;
}

struct synth_state {
  uint16_t target;
  uint32_t depth;
  bool exhaustive;                          // keep searching for the cheapest XOR cost
  std::optional<xag_template> best;
  std::set<std::vector<uint16_t>> failed;  // echelon signatures known not to close
};

std::optional<xag_template> synth_search(synth_state& st, std::vector<uint16_t>& products,
                                         std::vector<std::pair<affine_form, affine_form>>& forms) {
  const auto basis = affine_closure(products);
  if (const auto combo = basis.solve(st.target)) {
    xag_template t;
    t.num_ands = static_cast<uint32_t>(products.size());
    for (size_t i = 0; i < forms.size(); ++i) {
      t.ands[i] = forms[i];
    }
    t.output = decode_combo(*combo);
    if (!st.exhaustive) {
      return t;
    }
    if (!st.best || t.xor_cost() < st.best->xor_cost()) {
      st.best = t;
    }
    return std::nullopt;
  }
  if (products.size() >= st.depth) {
    return std::nullopt;
  }
  {
    const auto sig = basis.signature();
    if (st.failed.count(sig)) {
      return std::nullopt;
    }
  }

  // Affine coefficient vectors enumerated as integers ascending; the low bit
  // selects the constant.  A product that stays inside the current affine
  // span adds nothing and is skipped, as are repeated product tables.
  const uint32_t dims = 4u + static_cast<uint32_t>(products.size());
  const uint32_t limit = 2u << dims;
  std::set<uint16_t> seen;
  for (uint32_t rc1 = 2u; rc1 < limit; ++rc1) {
    const auto f1 = decode_combo(static_cast<uint16_t>(rc1));
    const uint16_t v1 = eval_affine(f1, products);
    for (uint32_t rc2 = rc1 + 1u; rc2 < limit; ++rc2) {
      const auto f2 = decode_combo(static_cast<uint16_t>(rc2));
      const uint16_t product = v1 & eval_affine(f2, products);
      if (basis.contains(product) || !seen.insert(product).second) {
        continue;
      }
      products.push_back(product);
      forms.emplace_back(f1, f2);
      if (auto result = synth_search(st, products, forms)) {
        return result;
      }
      products.pop_back();
      forms.pop_back();
    }
  }
  st.failed.insert(basis.signature());
  return std::nullopt;
}

// Budgets ascend, so a result always has minimal AND count.  Up to two AND
// gates the whole level is swept and the template with the fewest XOR terms
// wins; three-AND searches stop at the first structure found.
std::optional<xag_template> exact_synthesize_u16(uint16_t target, uint32_t budget) {
  for (uint32_t depth = 0; depth <= budget; ++depth) {
    synth_state st{target, depth, depth <= 2u, std::nullopt, {}};
    std::vector<uint16_t> products;
    std::vector<std::pair<affine_form, affine_form>> forms;
    if (auto result = synth_search(st, products, forms)) {
      return result;
    }
    if (st.best) {
      return st.best;
    }
  }
  return std::nullopt;
}

} // namespace

uint32_t xag_template::xor_cost() const {
  const auto cost = [](const affine_form& f) {
    const auto n = static_cast<uint32_t>(std::popcount(f.terms));
    return n > 0u ? n - 1u : 0u;
  };
  uint32_t total = cost(output);
  for (uint32_t i = 0; i < num_ands; ++i) {
    total += cost(ands[i].first) + cost(ands[i].second);
  }
  return total;
}

uint16_t template_table(const xag_template& t) {
  std::vector<uint16_t> products;
  for (uint32_t i = 0; i < t.num_ands; ++i) {
    const uint16_t a = eval_affine(t.ands[i].first, products);
    const uint16_t b = eval_affine(t.ands[i].second, products);
    products.push_back(a & b);
  }
  return eval_affine(t.output, products);
}

std::optional<xag_template> exact_synthesize(const truth_table& t, uint32_t budget) {
  if (budget > 3u) {
    throw std::invalid_argument("exact_synthesize: budget must be at most 3");
  }
  const auto padded = t.num_vars() < 4u ? t.extend_to(4u) : t;
  if (padded.num_vars() != 4u) {
    throw std::invalid_argument("exact_synthesize: at most 4 variables supported");
  }
  return exact_synthesize_u16(padded.to_uint16(), budget);
}

signal instantiate_template(xag& g, const xag_template& t, const std::array<signal, 4>& inputs) {
  std::vector<signal> products;
  const auto eval_form = [&](const affine_form& f) {
    signal acc = g.constant(false);
    for (uint32_t i = 0; i < 4u; ++i) {
      if ((f.terms >> i) & 1u) {
        acc = g.create_xor(acc, inputs[i]);
      }
    }
    for (size_t i = 0; i < products.size(); ++i) {
      if ((f.terms >> (4u + i)) & 1u) {
        acc = g.create_xor(acc, products[i]);
      }
    }
    return f.constant ? !acc : acc;
  };
  for (uint32_t i = 0; i < t.num_ands; ++i) {
    const auto a = eval_form(t.ands[i].first);
    const auto b = eval_form(t.ands[i].second);
    products.push_back(g.create_and(a, b));
  }
  return eval_form(t.output);
}

signal xag_database::instantiate(xag& g, const truth_table& t, const std::array<signal, 4>& leaves) const {
  const auto [canon, transform] = npn_canonicalize(t);
  const auto& tmpl = entry(canon.to_uint16());
  std::array<signal, 4> inputs{};
  for (uint32_t j = 0; j < 4u; ++j) {
    inputs[j] = leaves[transform.perm[j]] ^ (((transform.input_negation >> j) & 1u) != 0u);
  }
  return instantiate_template(g, tmpl, inputs) ^ transform.output_negation;
}

xag_database build_database() {
  std::set<uint16_t> classes;
  for (uint32_t t = 0; t < 65536u; ++t) {
    classes.insert(npn_canonicalize(static_cast<uint16_t>(t)).first);
  }
  xag_database db;
  for (const auto rep : classes) {
    auto tmpl = exact_synthesize_u16(rep, 3u);
    if (!tmpl) {
      throw database_incomplete(rep);
    }
    db.entries.emplace(rep, *tmpl);
  }
  return db;
}

std::string serialize_database(const xag_database& db) {
  std::ostringstream os;
  os << "oraclec-xag-db 1 " << db.entries.size() << '\n';
  const auto put_form = [&os](const affine_form& f) {
    os << ' ' << std::hex << f.terms << std::dec << '/' << (f.constant ? 1 : 0);
  };
  for (const auto& [rep, tmpl] : db.entries) {
    os << std::hex << rep << std::dec << ' ' << tmpl.num_ands;
    for (uint32_t i = 0; i < tmpl.num_ands; ++i) {
      put_form(tmpl.ands[i].first);
      put_form(tmpl.ands[i].second);
    }
    put_form(tmpl.output);
    os << '\n';
  }
  return os.str();
}

xag_database deserialize_database(const std::string& text) {
  std::istringstream is(text);
  std::string magic;
  int version = 0;
  size_t count = 0;
  if (!(is >> magic >> version >> count) || magic != "oraclec-xag-db" || version != 1) {
    throw database_format_error("unrecognized database header");
  }
  xag_database db;
  const auto get_form = [&is]() {
    std::string token;
    if (!(is >> token)) {
      throw database_format_error("truncated template");
    }
    const auto slash = token.find('/');
    if (slash == std::string::npos) {
      throw database_format_error("malformed affine form: " + token);
    }
    affine_form f;
    f.terms = static_cast<uint16_t>(std::stoul(token.substr(0, slash), nullptr, 16));
    f.constant = token.substr(slash + 1) == "1";
    return f;
  };
  for (size_t i = 0; i < count; ++i) {
    std::string rep_hex;
    uint32_t num_ands = 0;
    if (!(is >> rep_hex >> num_ands) || num_ands > 3u) {
      throw database_format_error("malformed entry");
    }
    const auto rep = static_cast<uint16_t>(std::stoul(rep_hex, nullptr, 16));
    xag_template tmpl;
    tmpl.num_ands = num_ands;
    for (uint32_t a = 0; a < num_ands; ++a) {
      tmpl.ands[a].first = get_form();
      tmpl.ands[a].second = get_form();
    }
    tmpl.output = get_form();
    if (template_table(tmpl) != rep) {
      throw database_format_error("template does not match its class " + rep_hex);
    }
    db.entries.emplace(rep, tmpl);
  }
  return db;
}

xag_database load_or_build_database(const std::string& path, bool force_rebuild) {
  if (!force_rebuild) {
    if (std::ifstream in(path); in) {
      std::ostringstream buffer;
      buffer << in.rdbuf();
      try {
        return deserialize_database(buffer.str());
      } catch (const database_format_error&) {
        // stale or corrupt cache; rebuild below
      }
    }
  }
  auto db = build_database();
  if (std::ofstream out(path); out) {
    out << serialize_database(db);
  }
  return db;
}

} // namespace oraclec
