// Copyright 2026 The popmatch Authors
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

#include "popmatch/io.hpp"

#include <fstream>
#include <sstream>

namespace popmatch {
namespace {

Rational parse_number(const std::string& token, std::size_t line) {
  auto value = parse_rational(token);
  if (!value) throw ParseError(line, "malformed number '" + token + "'");
  return *value;
}

bool looks_like_copy_token(std::string_view token) {
  return token.size() > 3 && std::string_view("abcxyz").find(token[0]) != std::string_view::npos &&
         token[1] == '(' && token.back() == ')';
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    auto tokens = tokenize_line(line);
    if (!tokens.empty()) fn(line_no, tokens);
  }
}

}  // namespace

std::vector<std::string> tokenize_line(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(std::move(tok));
  return tokens;
}

Instance parse_instance(std::string_view text) {
  std::optional<InstanceBuilder> builder;
  Mode mode = Mode::weak;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (!builder) {
      if (tok[0] != "mode") throw ParseError(line, "expected 'mode weak|gamma' first");
      if (tok.size() != 2 || (tok[1] != "weak" && tok[1] != "gamma")) {
        throw ParseError(line, "mode must be 'weak' or 'gamma'");
      }
      mode = tok[1] == "gamma" ? Mode::gamma : Mode::weak;
      builder.emplace(mode);
      return;
    }
    try {
      if (tok[0] == "u" || tok[0] == "w") {
        if (tok.size() < 2) throw ParseError(line, "agent line without ids");
        for (std::size_t i = 1; i < tok.size(); ++i) {
          builder->add_agent(tok[0] == "u" ? Side::u : Side::w, tok[i]);
        }
      } else if (tok[0] == "edge") {
        if (tok.size() == 6 && mode == Mode::gamma) {
          throw ParseError(line, "gamma mode needs two thresholds per edge");
        }
        if (tok.size() == 8 && mode == Mode::weak) {
          throw ParseError(line, "thresholds are not allowed in weak mode");
        }
        if (tok.size() != 6 && tok.size() != 8) {
          throw ParseError(line, "edge line needs 5 (weak) or 7 (gamma) fields");
        }
        Rational p_u = parse_number(tok[4], line);
        Rational p_w = parse_number(tok[5], line);
        std::optional<Rational> g_u, g_w;
        if (tok.size() == 8) {
          g_u = parse_number(tok[6], line);
          g_w = parse_number(tok[7], line);
        }
        builder->add_edge(tok[1], tok[2], tok[3], p_u, p_w, g_u, g_w);
      } else if (tok[0] == "mode") {
        throw ParseError(line, "repeated mode line");
      } else {
        throw ParseError(line, "unknown directive '" + tok[0] + "'");
      }
    } catch (const InvalidInstance& e) {
      throw ParseError(line, e.what());
    }
  });
  if (!builder) throw ParseError(1, "missing mode line");
  return builder->build();
}

std::string write_instance(const Instance& instance) {
  std::ostringstream out;
  out << "mode " << (instance.mode() == Mode::gamma ? "gamma" : "weak") << '\n';
  for (Side side : {Side::u, Side::w}) {
    const auto& names = instance.agents(side);
    if (names.empty()) continue;
    out << (side == Side::u ? 'u' : 'w');
    for (const auto& name : names) out << ' ' << name;
    out << '\n';
  }
  const auto& u_names = instance.agents(Side::u);
  const auto& w_names = instance.agents(Side::w);
  for (const Edge& edge : instance.edges()) {
    out << "edge " << edge.id << ' ' << u_names[edge.u] << ' ' << w_names[edge.w] << ' '
        << to_string(edge.p_u) << ' ' << to_string(edge.p_w);
    if (edge.gamma_u) out << ' ' << to_string(*edge.gamma_u) << ' ' << to_string(*edge.gamma_w);
    out << '\n';
  }
  return out.str();
}

Matching parse_matching(const Instance& instance, std::string_view text) {
  std::vector<EdgeIndex> edges;
  for_each_line(text, [&](std::size_t line, const std::vector<std::string>& tok) {
    if (tok[0] == "size") return;
    if (tok.size() != 1) throw ParseError(line, "expected one edge id per line");
    if (auto e = instance.find_edge(tok[0])) {
      edges.push_back(*e);
    } else if (!looks_like_copy_token(tok[0])) {
      throw ParseError(line, "unknown edge id " + tok[0]);
    }
  });
  return Matching(std::move(edges));
}

std::string write_matching(const Instance& instance, const Matching& matching) {
  std::string out;
  for (EdgeIndex e : matching.edges()) out += instance.edge(e).id + '\n';
  out += "size " + std::to_string(matching.size()) + '\n';
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace popmatch
