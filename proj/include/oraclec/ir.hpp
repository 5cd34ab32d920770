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

#include "oraclec/xag.hpp"

namespace oraclec {

// A small SSA-style IR over 1-bit values: `and`, `or`, `xor`, `select`,
// `icmp eq/ne`, `alloca i1`, `load`, `store`, `phi i1`, both `br` forms, and
// `ret` of one or more i1 values.  Anything else is rejected at parse time.

class syntax_error : public std::runtime_error {
public:
  syntax_error(int line, int col, const std::string& expected)
      : std::runtime_error("syntax error at line " + std::to_string(line) + ", column " +
                           std::to_string(col) + ": expected " + expected),
        line(line), col(col), expected(expected) {}
  int line;
  int col;
  std::string expected;
};

class unsupported_instruction : public std::runtime_error {
public:
  unsupported_instruction(const std::string& opcode, int line)
      : std::runtime_error("unsupported instruction '" + opcode + "' at line " + std::to_string(line)),
        opcode(opcode), line(line) {}
  std::string opcode;
  int line;
};

class cyclic_control_flow : public std::runtime_error {
public:
  explicit cyclic_control_flow(std::vector<std::string> cycle_labels)
      : std::runtime_error(make_message(cycle_labels)), labels(std::move(cycle_labels)) {}
  std::vector<std::string> labels;

private:
  static std::string make_message(const std::vector<std::string>& labels) {
    std::string m = "control flow is cyclic through:";
    for (const auto& l : labels) {
      m += " " + l;
    }
    return m;
  }
};

class use_before_def : public std::runtime_error {
public:
  explicit use_before_def(const std::string& value)
      : std::runtime_error("value %" + value + " is used before it is defined"), value(value) {}
  std::string value;
};

class non_boolean_value : public std::runtime_error {
public:
  explicit non_boolean_value(const std::string& value)
      : std::runtime_error("value %" + value + " does not have the required 1-bit type"), value(value) {}
  std::string value;
};

class malformed_function : public std::runtime_error {
public:
  explicit malformed_function(const std::string& message) : std::runtime_error(message) {}
};

class load_of_uninitialized_slot : public std::runtime_error {
public:
  explicit load_of_uninitialized_slot(const std::string& slot)
      : std::runtime_error("load from slot %" + slot + " that is not stored on every path"),
        slot(slot) {}
  std::string slot;
};

struct ir_operand {
  bool is_constant = false;
  std::string name;     // value reference when !is_constant
  bool constant = false;

  static ir_operand value(std::string n) { return {false, std::move(n), false}; }
  static ir_operand literal(bool b) { return {true, {}, b}; }
  bool operator==(const ir_operand&) const = default;
};

enum class ir_opcode : uint8_t {
  op_and,
  op_or,
  op_xor,
  op_select,
  op_icmp_eq,
  op_icmp_ne,
  op_alloca,
  op_load,
  op_store,
  op_phi,
};

struct ir_inst {
  ir_opcode op{};
  std::string result;                   // empty for store
  std::vector<ir_operand> operands;     // value operands; phi incoming values
  std::vector<std::string> phi_labels;  // parallel to operands for phi
  std::string slot;                     // slot reference for load/store
  int line = 0;

  bool operator==(const ir_inst& o) const {
    return op == o.op && result == o.result && operands == o.operands &&
           phi_labels == o.phi_labels && slot == o.slot;
  }
};

struct ir_terminator {
  enum class kind : uint8_t { branch, cond_branch, ret } k = kind::ret;
  ir_operand cond;
  std::string then_label;  // target of unconditional branch
  std::string else_label;
  std::vector<ir_operand> ret_values;
  int line = 0;

  bool operator==(const ir_terminator& o) const {
    return k == o.k && cond == o.cond && then_label == o.then_label &&
           else_label == o.else_label && ret_values == o.ret_values;
  }
};

struct ir_block {
  std::string label;
  std::vector<ir_inst> instructions;
  ir_terminator terminator;
  int line = 0;

  bool operator==(const ir_block& o) const {
    return label == o.label && instructions == o.instructions && terminator == o.terminator;
  }
};

struct ir_function {
  std::string name;
  std::string linkage;              // "", "internal", or "dso_local"
  std::vector<std::string> params;  // all of type i1
  uint32_t ret_arity = 1;
  std::vector<ir_block> blocks;     // first block is the entry

  bool operator==(const ir_function& o) const {
    return name == o.name && linkage == o.linkage && params == o.params &&
           ret_arity == o.ret_arity && blocks == o.blocks;
  }
};

struct ir_module {
  std::vector<ir_function> functions;
  std::string source_name;

  bool operator==(const ir_module& o) const { return functions == o.functions; }
  const ir_function* find_function(const std::string& name) const {
    for (const auto& f : functions) {
      if (f.name == name) {
        return &f;
      }
    }
    return nullptr;
  }
};

ir_module parse_module(const std::string& text, const std::string& source_name = "<input>");
std::string unparse_module(const ir_module& m);

/*! \brief A validated function: acyclic, defs precede uses, all values 1-bit.
 *
 * `rpo` is a reverse post-order over the blocks (block indices); `preds`
 * lists each block's predecessors in order of first appearance in the source.
 */
struct checked_function {
  ir_function fn;
  std::vector<uint32_t> rpo;
  std::vector<std::vector<uint32_t>> preds;

  uint32_t block_index(const std::string& label) const;
};

checked_function validate(const ir_function& f);

/*! \brief If-converts an acyclic function into an XAG.
 *
 * One primary input per parameter in parameter order, one output per returned
 * value.  Branch conditions feed MUX operations at merge points; or/icmp map
 * onto AND and XOR gates.
 */
xag ir_to_xag(const checked_function& f);

} // namespace oraclec
