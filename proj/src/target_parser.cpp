// Copyright 2026 The Theseus Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "theseus/target_parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "theseus/errors.hpp"

namespace theseus {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Target parse() {
    skip();
    Target t = at_word("gate") ? Target{gate()} : (is_ident() ? constructor() : Target{state()});
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool is_ident() {
    skip();
    return pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != 'i';
  }

  bool at_word(std::string_view w) {
    skip();
    if (s_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    return end == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[end]));
  }

  int integer() {
    skip();
    const std::size_t start = pos_;
    int v = 0;
    const auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(p - s_.data());
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  Target constructor() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string name(s_.substr(start, pos_ - start));
    expect('(');
    std::vector<int> args{integer()};
    while (peek(',')) {
      ++pos_;
      args.push_back(integer());
    }
    expect(')');
    auto need = [&](std::size_t k) {
      if (args.size() != k) {
        pos_ = start;
        fail(name + " takes " + std::to_string(k) + " arguments");
      }
    };
    if (name == "ghz") {
      need(2);
      return ghz(args[0], args[1]);
    }
    if (name == "bell") {
      need(1);
      return bell(args[0]);
    }
    if (name == "cnot") {
      need(2);
      return cnot(args[0], args[1]);
    }
    pos_ = start;
    fail("unknown constructor '" + name + "'");
  }

  TargetGate gate() {
    pos_ += 4;
    expect('(');
    std::vector<InputAssignment> inputs;
    std::vector<TargetState> outputs;
    do {
      if (!inputs.empty()) ++pos_;
      inputs.push_back(ket());
      skip();
      if (s_.substr(pos_, 2) != "->") fail("expected '->'");
      pos_ += 2;
      outputs.push_back(state());
    } while (peek(','));
    expect(')');
    return make_gate(std::move(inputs), std::move(outputs));
  }

  TargetState state() {
    std::map<KetTerm, Complex> terms;
    std::size_t len = 0;
    bool first = true;
    for (;;) {
      double sign = 1.0;
      skip();
      if (peek('+') || peek('-')) {
        sign = s_[pos_] == '-' ? -1.0 : 1.0;
        ++pos_;
      } else if (!first) {
        break;
      }
      Complex coef{1.0, 0.0};
      if (!peek('|')) {
        coef = coefficient();
        if (peek('*')) ++pos_;
      }
      const std::size_t at = pos_;
      KetTerm k = ket();
      if (!first && k.size() != len) {
        pos_ = at;
        fail("ket length " + std::to_string(k.size()) + " differs from " + std::to_string(len));
      }
      len = k.size();
      first = false;
      terms[k] += sign * coef;
      skip();
      if (pos_ == s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return make_target(std::move(terms));
  }

  KetTerm ket() {
    expect('|');
    KetTerm k;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) k.push_back(s_[pos_++] - '0');
    if (k.empty()) fail("expected a digit");
    if (pos_ >= s_.size() || s_[pos_] != '>') fail("expected '>'");
    ++pos_;
    return k;
  }

  double real_number() {
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) ++pos_;
    double v = 0.0;
    const auto [p, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) {
      pos_ = start;
      fail("expected a number");
    }
    pos_ = static_cast<std::size_t>(p - s_.data());
    return s_[start] == '-' ? -v : v;
  }

  bool imaginary_unit() {
    if (pos_ < s_.size() && s_[pos_] == 'i') {
      ++pos_;
      return true;
    }
    return false;
  }

  // decimal, decimal 'i', or bare 'i'.
  Complex simple_coefficient() {
    skip();
    double sign = 1.0;
    if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
      const std::size_t next = pos_ + 1;
      if (next < s_.size() && s_[next] == 'i') {
        sign = s_[pos_] == '-' ? -1.0 : 1.0;
        pos_ = next;
      }
    }
    if (imaginary_unit()) return {0.0, sign};
    const double v = real_number();
    if (imaginary_unit()) return {0.0, v};
    return {v, 0.0};
  }

  Complex coefficient() {
    if (peek('(')) {
      ++pos_;
      Complex c = simple_coefficient();
      while (peek('+') || peek('-')) c += simple_coefficient();
      expect(')');
      return c;
    }
    return simple_coefficient();
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string ket_text(const std::vector<int>& k) {
  std::string s = "|";
  for (int x : k) s += static_cast<char>('0' + x);
  return s + ">";
}

std::string state_text(const TargetState& t) {
  std::string out;
  for (const auto& [ket, c] : t.terms) {
    if (!out.empty()) out += " + ";
    out += c.imag() == 0.0 ? number(c.real()) : "(" + number(c.real()) + (c.imag() < 0 ? "" : "+") + number(c.imag()) + "i)";
    out += "*" + ket_text(ket);
  }
  return out;
}

}  // namespace

Target parse_target(std::string_view text) { return Parser(text).parse(); }

std::string format_target(const Target& t) {
  if (const auto* s = std::get_if<TargetState>(&t)) return state_text(*s);
  const auto& g = std::get<TargetGate>(t);
  std::string out = "gate(";
  for (std::size_t i = 0; i < g.inputs.size(); ++i) {
    if (i) out += ", ";
    out += ket_text(g.inputs[i]) + " -> " + state_text(g.outputs[i]);
  }
  return out + ")";
}

}  // namespace theseus
