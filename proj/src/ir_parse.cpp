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

#include <cctype>
#include <set>
#include <sstream>

#include "oraclec/ir.hpp"

namespace oraclec {

namespace {

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-' || c == '$';
}

struct token {
  enum class kind : uint8_t { word, global, local, punct, end };
  kind k = kind::end;
  std::string text;  // without the @/% sigil
  char punct = 0;
  int line = 1;
  int col = 1;
};

class lexer {
public:
  explicit lexer(const std::string& src) : src_(src) { advance(); }

  const token& peek() const { return tok_; }

  token next() {
    token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_space_and_comments();
    tok_.line = line_;
    tok_.col = col_;
    if (pos_ >= src_.size()) {
      tok_.k = token::kind::end;
      tok_.text.clear();
      return;
    }
    const char c = src_[pos_];
    if (c == '@' || c == '%') {
      consume();
      std::string name;
      while (pos_ < src_.size() && is_name_char(src_[pos_])) {
        name.push_back(src_[pos_]);
        consume();
      }
      if (name.empty()) {
        throw syntax_error(tok_.line, tok_.col, "a name after '" + std::string(1, c) + "'");
      }
      tok_.k = c == '@' ? token::kind::global : token::kind::local;
      tok_.text = std::move(name);
      return;
    }
    if (is_name_char(c)) {
      std::string word;
      while (pos_ < src_.size() && is_name_char(src_[pos_])) {
        word.push_back(src_[pos_]);
        consume();
      }
      tok_.k = token::kind::word;
      tok_.text = std::move(word);
      return;
    }
    tok_.k = token::kind::punct;
    tok_.punct = c;
    tok_.text = std::string(1, c);
    consume();
  }

  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          consume();
        }
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        consume();
      } else {
        break;
      }
    }
  }

  void consume() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  token tok_;
};

class parser {
public:
  explicit parser(const std::string& text, std::string source_name)
      : lex_(text), source_name_(std::move(source_name)) {}

  ir_module parse() {
    ir_module m;
    m.source_name = source_name_;
    while (lex_.peek().k != token::kind::end) {
      m.functions.push_back(parse_function());
    }
    std::set<std::string> names;
    for (const auto& f : m.functions) {
      if (!names.insert(f.name).second) {
        throw syntax_error(1, 1, "unique function names (duplicate @" + f.name + ")");
      }
    }
    return m;
  }

private:
  [[noreturn]] void fail(const std::string& expected) {
    throw syntax_error(lex_.peek().line, lex_.peek().col, expected);
  }

  token expect_word(const std::string& w) {
    if (lex_.peek().k != token::kind::word || lex_.peek().text != w) {
      fail("'" + w + "'");
    }
    return lex_.next();
  }

  token expect_punct(char p) {
    if (lex_.peek().k != token::kind::punct || lex_.peek().punct != p) {
      fail("'" + std::string(1, p) + "'");
    }
    return lex_.next();
  }

  bool peek_word(const std::string& w) const {
    return lex_.peek().k == token::kind::word && lex_.peek().text == w;
  }

  bool peek_punct(char p) const {
    return lex_.peek().k == token::kind::punct && lex_.peek().punct == p;
  }

  std::string expect_local() {
    if (lex_.peek().k != token::kind::local) {
      fail("a %name");
    }
    return lex_.next().text;
  }

  // i1 or a brace tuple of i1; returns the arity
  uint32_t parse_return_type() {
    if (peek_word("i1")) {
      lex_.next();
      return 1;
    }
    if (peek_punct('{')) {
      lex_.next();
      uint32_t arity = 0;
      while (true) {
        expect_i1();
        ++arity;
        if (peek_punct(',')) {
          lex_.next();
          continue;
        }
        break;
      }
      expect_punct('}');
      return arity;
    }
    if (lex_.peek().k == token::kind::word) {
      throw unsupported_instruction("return type " + lex_.peek().text, lex_.peek().line);
    }
    fail("a return type");
  }

  void expect_i1() {
    if (!peek_word("i1")) {
      if (lex_.peek().k == token::kind::word) {
        throw unsupported_instruction("type " + lex_.peek().text, lex_.peek().line);
      }
      fail("'i1'");
    }
    lex_.next();
  }

  ir_function parse_function() {
    expect_word("define");
    ir_function f;
    if (peek_word("internal") || peek_word("dso_local")) {
      f.linkage = lex_.next().text;
    }
    f.ret_arity = parse_return_type();
    if (lex_.peek().k != token::kind::global) {
      fail("a function name");
    }
    f.name = lex_.next().text;
    expect_punct('(');
    if (!peek_punct(')')) {
      while (true) {
        expect_i1();
        f.params.push_back(expect_local());
        if (peek_punct(',')) {
          lex_.next();
          continue;
        }
        break;
      }
    }
    expect_punct(')');
    expect_punct('{');
    while (!peek_punct('}')) {
      f.blocks.push_back(parse_block());
    }
    expect_punct('}');
    if (f.blocks.empty()) {
      fail("at least one basic block");
    }
    resolve_labels(f);
    return f;
  }

  ir_block parse_block() {
    ir_block b;
    b.line = lex_.peek().line;
    if (lex_.peek().k != token::kind::word) {
      fail("a block label");
    }
    b.label = lex_.next().text;
    expect_punct(':');
    bool seen_non_phi = false;
    while (true) {
      const token& t = lex_.peek();
      if (t.k == token::kind::word && (t.text == "br" || t.text == "ret")) {
        b.terminator = parse_terminator();
        return b;
      }
      ir_inst inst = parse_instruction();
      if (inst.op == ir_opcode::op_phi && seen_non_phi) {
        throw syntax_error(inst.line, 1, "phi instructions at the start of the block");
      }
      if (inst.op != ir_opcode::op_phi) {
        seen_non_phi = true;
      }
      b.instructions.push_back(std::move(inst));
    }
  }

  ir_operand parse_operand() {
    const token& t = lex_.peek();
    if (t.k == token::kind::local) {
      return ir_operand::value(lex_.next().text);
    }
    if (t.k == token::kind::word && (t.text == "true" || t.text == "1")) {
      lex_.next();
      return ir_operand::literal(true);
    }
    if (t.k == token::kind::word && (t.text == "false" || t.text == "0")) {
      lex_.next();
      return ir_operand::literal(false);
    }
    fail("an i1 operand (%name, true or false)");
  }

  ir_inst parse_instruction() {
    ir_inst inst;
    inst.line = lex_.peek().line;
    if (peek_word("store")) {
      lex_.next();
      inst.op = ir_opcode::op_store;
      expect_i1();
      inst.operands.push_back(parse_operand());
      expect_punct(',');
      expect_i1();
      expect_punct('*');
      inst.slot = expect_local();
      return inst;
    }
    if (lex_.peek().k != token::kind::local) {
      if (lex_.peek().k == token::kind::word) {
        throw unsupported_instruction(lex_.peek().text, lex_.peek().line);
      }
      fail("an instruction");
    }
    inst.result = lex_.next().text;
    expect_punct('=');
    if (lex_.peek().k != token::kind::word) {
      fail("an opcode");
    }
    const token op = lex_.next();
    if (op.text == "and" || op.text == "or" || op.text == "xor") {
      inst.op = op.text == "and" ? ir_opcode::op_and
                                 : (op.text == "or" ? ir_opcode::op_or : ir_opcode::op_xor);
      if (!peek_word("i1")) {
        throw unsupported_instruction(op.text + (lex_.peek().k == token::kind::word ? " " + lex_.peek().text : ""),
                                      op.line);
      }
      lex_.next();
      inst.operands.push_back(parse_operand());
      expect_punct(',');
      inst.operands.push_back(parse_operand());
      return inst;
    }
    if (op.text == "icmp") {
      if (!peek_word("eq") && !peek_word("ne")) {
        throw unsupported_instruction("icmp " + lex_.peek().text, op.line);
      }
      inst.op = lex_.next().text == "eq" ? ir_opcode::op_icmp_eq : ir_opcode::op_icmp_ne;
      if (!peek_word("i1")) {
        throw unsupported_instruction("icmp on non-i1 operands", op.line);
      }
      lex_.next();
      inst.operands.push_back(parse_operand());
      expect_punct(',');
      inst.operands.push_back(parse_operand());
      return inst;
    }
    if (op.text == "select") {
      inst.op = ir_opcode::op_select;
      expect_i1();
      inst.operands.push_back(parse_operand());
      expect_punct(',');
      expect_i1();
      inst.operands.push_back(parse_operand());
      expect_punct(',');
      expect_i1();
      inst.operands.push_back(parse_operand());
      return inst;
    }
    if (op.text == "alloca") {
      inst.op = ir_opcode::op_alloca;
      expect_i1();
      return inst;
    }
    if (op.text == "load") {
      inst.op = ir_opcode::op_load;
      expect_i1();
      expect_punct(',');
      expect_i1();
      expect_punct('*');
      inst.slot = expect_local();
      return inst;
    }
    if (op.text == "phi") {
      inst.op = ir_opcode::op_phi;
      expect_i1();
      while (true) {
        expect_punct('[');
        inst.operands.push_back(parse_operand());
        expect_punct(',');
        inst.phi_labels.push_back(expect_local());
        expect_punct(']');
        if (peek_punct(',')) {
          lex_.next();
          continue;
        }
        break;
      }
      return inst;
    }
    throw unsupported_instruction(op.text, op.line);
  }

  ir_terminator parse_terminator() {
    ir_terminator term;
    term.line = lex_.peek().line;
    const token op = lex_.next();
    if (op.text == "br") {
      if (peek_word("label")) {
        lex_.next();
        term.k = ir_terminator::kind::branch;
        term.then_label = expect_local();
        return term;
      }
      expect_i1();
      term.k = ir_terminator::kind::cond_branch;
      term.cond = parse_operand();
      expect_punct(',');
      expect_word("label");
      term.then_label = expect_local();
      expect_punct(',');
      expect_word("label");
      term.else_label = expect_local();
      return term;
    }
    // ret
    term.k = ir_terminator::kind::ret;
    if (peek_word("i1")) {
      lex_.next();
      term.ret_values.push_back(parse_operand());
      return term;
    }
    if (peek_punct('{')) {
      lex_.next();
      uint32_t arity = 0;
      while (true) {
        expect_i1();
        ++arity;
        if (peek_punct(',')) {
          lex_.next();
          continue;
        }
        break;
      }
      expect_punct('}');
      expect_punct('{');
      for (uint32_t i = 0; i < arity; ++i) {
        if (i > 0) {
          expect_punct(',');
        }
        expect_i1();
        term.ret_values.push_back(parse_operand());
      }
      expect_punct('}');
      return term;
    }
    if (lex_.peek().k == token::kind::word) {
      throw unsupported_instruction("ret " + lex_.peek().text, op.line);
    }
    fail("a return value");
  }

  // Every referenced label must name a block of this function.
  void resolve_labels(const ir_function& f) {
    std::set<std::string> labels;
    for (const auto& b : f.blocks) {
      if (!labels.insert(b.label).second) {
        throw syntax_error(b.line, 1, "unique block labels (duplicate " + b.label + ")");
      }
    }
    const auto check = [&](const std::string& l, int line) {
      if (!labels.count(l)) {
        throw syntax_error(line, 1, "a known block label (got " + l + ")");
      }
    };
    for (const auto& b : f.blocks) {
      if (b.terminator.k == ir_terminator::kind::branch) {
        check(b.terminator.then_label, b.terminator.line);
      } else if (b.terminator.k == ir_terminator::kind::cond_branch) {
        check(b.terminator.then_label, b.terminator.line);
        check(b.terminator.else_label, b.terminator.line);
      }
      for (const auto& inst : b.instructions) {
        for (const auto& l : inst.phi_labels) {
          check(l, inst.line);
        }
      }
    }
  }

  lexer lex_;
  std::string source_name_;
};

void unparse_operand(std::ostringstream& os, const ir_operand& op) {
  if (op.is_constant) {
    os << (op.constant ? "true" : "false");
  } else {
    os << '%' << op.name;
  }
}

} // namespace

ir_module parse_module(const std::string& text, const std::string& source_name) {
  return parser(text, source_name).parse();
}

std::string unparse_module(const ir_module& m) {
  std::ostringstream os;
  bool first_fn = true;
  for (const auto& f : m.functions) {
    if (!first_fn) {
      os << '\n';
    }
    first_fn = false;
    os << "define ";
    if (!f.linkage.empty()) {
      os << f.linkage << ' ';
    }
    if (f.ret_arity == 1) {
      os << "i1 ";
    } else {
      os << "{ ";
      for (uint32_t i = 0; i < f.ret_arity; ++i) {
        os << (i ? ", i1" : "i1");
      }
      os << " } ";
    }
    os << '@' << f.name << '(';
    for (size_t i = 0; i < f.params.size(); ++i) {
      os << (i ? ", i1 %" : "i1 %") << f.params[i];
    }
    os << ") {\n";
    for (const auto& b : f.blocks) {
      os << b.label << ":\n";
      for (const auto& inst : b.instructions) {
        os << "  ";
        switch (inst.op) {
        case ir_opcode::op_store:
          os << "store i1 ";
          unparse_operand(os, inst.operands[0]);
          os << ", i1* %" << inst.slot;
          break;
        case ir_opcode::op_and:
        case ir_opcode::op_or:
        case ir_opcode::op_xor: {
          const char* name = inst.op == ir_opcode::op_and ? "and" : (inst.op == ir_opcode::op_or ? "or" : "xor");
          os << '%' << inst.result << " = " << name << " i1 ";
          unparse_operand(os, inst.operands[0]);
          os << ", ";
          unparse_operand(os, inst.operands[1]);
          break;
        }
        case ir_opcode::op_icmp_eq:
        case ir_opcode::op_icmp_ne:
          os << '%' << inst.result << " = icmp " << (inst.op == ir_opcode::op_icmp_eq ? "eq" : "ne") << " i1 ";
          unparse_operand(os, inst.operands[0]);
          os << ", ";
          unparse_operand(os, inst.operands[1]);
          break;
        case ir_opcode::op_select:
          os << '%' << inst.result << " = select i1 ";
          unparse_operand(os, inst.operands[0]);
          os << ", i1 ";
          unparse_operand(os, inst.operands[1]);
          os << ", i1 ";
          unparse_operand(os, inst.operands[2]);
          break;
        case ir_opcode::op_alloca:
          os << '%' << inst.result << " = alloca i1";
          break;
        case ir_opcode::op_load:
          os << '%' << inst.result << " = load i1, i1* %" << inst.slot;
          break;
        case ir_opcode::op_phi:
          os << '%' << inst.result << " = phi i1 ";
          for (size_t i = 0; i < inst.operands.size(); ++i) {
            if (i) {
              os << ", ";
            }
            os << "[ ";
            unparse_operand(os, inst.operands[i]);
            os << ", %" << inst.phi_labels[i] << " ]";
          }
          break;
        }
        os << '\n';
      }
      const auto& t = b.terminator;
      os << "  ";
      switch (t.k) {
      case ir_terminator::kind::branch:
        os << "br label %" << t.then_label;
        break;
      case ir_terminator::kind::cond_branch:
        os << "br i1 ";
        unparse_operand(os, t.cond);
        os << ", label %" << t.then_label << ", label %" << t.else_label;
        break;
      case ir_terminator::kind::ret:
        if (t.ret_values.size() == 1) {
          os << "ret i1 ";
          unparse_operand(os, t.ret_values[0]);
        } else {
          os << "ret { ";
          for (size_t i = 0; i < t.ret_values.size(); ++i) {
            os << (i ? ", i1" : "i1");
          }
          os << " } { ";
          for (size_t i = 0; i < t.ret_values.size(); ++i) {
            if (i) {
              os << ", ";
            }
            os << "i1 ";
            unparse_operand(os, t.ret_values[i]);
          }
          os << " }";
        }
        break;
      }
      os << '\n';
    }
    os << "}\n";
  }
  return os.str();
}

} // namespace oraclec
