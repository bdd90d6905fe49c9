// Copyright 2026 The ctsynth Authors
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

#include <sstream>

#include "ctsynth/circuit.hpp"
#include "ctsynth/errors.hpp"

namespace ctsynth {

std::string to_text(const Circuit& c) {
  std::ostringstream os;
  const auto& r = c.registers();
  os << "registers A=" << r.n_control << " B=" << r.n_target << " C=" << r.n_clean
     << " D=" << r.n_dirty << '\n';
  if (c.global_phase() != 0) os << "phase " << c.global_phase() << '\n';
  for (const auto& g : c.gates()) {
    os << gate_name(g.kind) << " q" << g.q0;
    if (is_two_qubit(g.kind)) os << " q" << g.q1;
    os << '\n';
  }
  return os.str();
}

namespace {

int parse_qubit(const std::string& tok, int line) {
  if (tok.size() < 2 || tok[0] != 'q') throw ParseError("line " + std::to_string(line) + ": bad qubit '" + tok + "'");
  try {
    std::size_t used = 0;
    const int q = std::stoi(tok.substr(1), &used);
    if (used + 1 != tok.size() || q < 0) throw ParseError("bad qubit");
    return q;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line) + ": bad qubit '" + tok + "'");
  }
}

GateKind parse_kind(const std::string& name, int line) {
  static const GateKind all[] = {GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg,
                                 GateKind::X, GateKind::Y, GateKind::Z, GateKind::CNOT, GateKind::SWAP};
  for (GateKind k : all)
    if (name == gate_name(k)) return k;
  throw ParseError("line " + std::to_string(line) + ": unknown gate '" + name + "'");
}

}  // namespace

Circuit parse_text(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  bool have_header = false;
  Circuit c;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::string head;
    if (!(ls >> head)) continue;
    if (!have_header) {
      if (head != "registers") throw ParseError("missing registers header");
      Registers r;
      int* slots[] = {&r.n_control, &r.n_target, &r.n_clean, &r.n_dirty};
      const char names[] = {'A', 'B', 'C', 'D'};
      for (int i = 0; i < 4; ++i) {
        std::string tok;
        if (!(ls >> tok) || tok.size() < 3 || tok[0] != names[i] || tok[1] != '=')
          throw ParseError("malformed registers header");
        try {
          *slots[i] = std::stoi(tok.substr(2));
        } catch (const std::exception&) {
          throw ParseError("malformed registers header");
        }
      }
      if (r.n_target != 1) throw ParseError("register B must have one qubit");
      try {
        c = Circuit(r);
      } catch (const Error& e) {
        throw ParseError(e.what());
      }
      have_header = true;
      continue;
    }
    if (head == "phase") {
      int k = 0;
      if (!(ls >> k)) throw ParseError("line " + std::to_string(line) + ": bad phase");
      c.add_phase(k);
      continue;
    }
    const GateKind k = parse_kind(head, line);
    std::string t0, t1, extra;
    if (!(ls >> t0)) throw ParseError("line " + std::to_string(line) + ": missing qubit");
    const int q0 = parse_qubit(t0, line);
    int q1 = -1;
    if (is_two_qubit(k)) {
      if (!(ls >> t1)) throw ParseError("line " + std::to_string(line) + ": missing qubit");
      q1 = parse_qubit(t1, line);
    }
    if (ls >> extra) throw ParseError("line " + std::to_string(line) + ": trailing tokens");
    try {
      c.add(k, q0, q1);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line) + ": " + e.what());
    }
  }
  if (!have_header) throw ParseError("missing registers header");
  return c;
}

}  // namespace ctsynth
