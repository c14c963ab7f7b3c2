#include "bvm/serialize.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

#include "bvm/error.hpp"

namespace bvm {
namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '"': out += "\\\""; break;
      case '\n': out += "\\n"; break;
      default: out += c;
    }
  }
  return out;
}

struct Token {
  std::string text;
  bool quoted = false;
};

// Splits one line into whitespace separated tokens; a quoted token may hold
// spaces and escapes. Everything after an unquoted '#' is dropped.
std::vector<Token> tokenize(std::string_view line, std::size_t lineno) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
    } else if (c == '#') {
      break;
    } else if (c == '"') {
      Token t{"", true};
      ++i;
      bool closed = false;
      while (i < line.size()) {
        char q = line[i++];
        if (q == '"') {
          closed = true;
          break;
        }
        if (q == '\\') {
          if (i >= line.size()) break;
          char e = line[i++];
          if (e == 'n') {
            t.text += '\n';
          } else if (e == '\\' || e == '"') {
            t.text += e;
          } else {
            throw ParseError(lineno, std::string("unknown escape \\") + e);
          }
        } else {
          t.text += q;
        }
      }
      if (!closed) throw ParseError(lineno, "unterminated quoted string");
      tokens.push_back(std::move(t));
    } else {
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r' && line[j] != '#') {
        ++j;
      }
      tokens.push_back(Token{std::string(line.substr(i, j - i)), false});
      i = j;
    }
  }
  return tokens;
}

std::size_t to_index(const Token& t, std::size_t lineno, const char* what) {
  std::size_t value = 0;
  const char* first = t.text.data();
  const char* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (t.quoted || t.text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(lineno, std::string("expected non-negative integer for ") +
                                 what + ", got '" + t.text + "'");
  }
  return value;
}

void expect_arity(const std::vector<Token>& tokens, std::size_t n,
                  std::size_t lineno) {
  if (tokens.size() != n) {
    throw ParseError(lineno, tokens[0].text + " expects " + std::to_string(n - 1) +
                                 " arguments, got " +
                                 std::to_string(tokens.size() - 1));
  }
}

}  // namespace

std::string serialize(const OrderedBratteliDiagram& d) {
  std::ostringstream os;
  os << "BVD 1\n";
  os << "DEPTH " << d.depth() << "\n";
  for (std::size_t k = 0; k <= d.depth(); ++k) {
    os << "LEVEL " << k << " " << d.level_size(k) << "\n";
  }
  for (std::size_t k = 0; k <= d.depth(); ++k) {
    for (VertexIndex v = 0; v < d.level_size(k); ++v) {
      if (const auto& label = d.label(k, v)) {
        os << "LABEL " << k << " " << v << " \"" << escape(*label) << "\"\n";
      }
    }
  }
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    for (const Edge& e : d.edges(k)) {
      os << "EDGE " << k << " " << e.source << " " << e.order << " " << e.target
         << "\n";
    }
  }
  return os.str();
}

OrderedBratteliDiagram deserialize(std::string_view text) {
  std::optional<std::size_t> depth;
  std::vector<std::vector<Vertex>> levels;
  std::vector<std::vector<Edge>> edges;
  bool header = false;

  std::size_t lineno = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++lineno;

    const auto tokens = tokenize(line, lineno);
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0].text;

    if (!header) {
      if (kw != "BVD" || tokens.size() != 2 || tokens[1].text != "1") {
        throw ParseError(lineno, "expected header 'BVD 1'");
      }
      header = true;
      continue;
    }
    if (kw == "DEPTH") {
      expect_arity(tokens, 2, lineno);
      if (depth) throw ParseError(lineno, "duplicate DEPTH");
      depth = to_index(tokens[1], lineno, "depth");
      edges.assign(*depth, {});
    } else if (kw == "LEVEL") {
      expect_arity(tokens, 3, lineno);
      if (!depth) throw ParseError(lineno, "LEVEL before DEPTH");
      const std::size_t k = to_index(tokens[1], lineno, "level");
      if (k != levels.size()) {
        throw ParseError(lineno, "expected LEVEL " + std::to_string(levels.size()) +
                                     ", got LEVEL " + std::to_string(k));
      }
      if (k > *depth) throw ParseError(lineno, "LEVEL beyond DEPTH");
      levels.emplace_back(to_index(tokens[2], lineno, "vertex count"));
    } else if (kw == "LABEL") {
      expect_arity(tokens, 4, lineno);
      const std::size_t k = to_index(tokens[1], lineno, "level");
      const std::size_t v = to_index(tokens[2], lineno, "vertex");
      if (k >= levels.size() || v >= levels[k].size()) {
        throw ParseError(lineno, "reference error: LABEL names nonexistent vertex " +
                                     std::to_string(v) + " of level " +
                                     std::to_string(k));
      }
      if (!tokens[3].quoted) throw ParseError(lineno, "LABEL text must be quoted");
      levels[k][v].label = tokens[3].text;
    } else if (kw == "EDGE") {
      expect_arity(tokens, 5, lineno);
      if (!depth || levels.size() != *depth + 1) {
        throw ParseError(lineno, "EDGE before all LEVEL lines");
      }
      const std::size_t k = to_index(tokens[1], lineno, "level");
      const std::size_t s = to_index(tokens[2], lineno, "source");
      const std::size_t o = to_index(tokens[3], lineno, "order");
      const std::size_t t = to_index(tokens[4], lineno, "target");
      if (k == 0 || k > *depth) {
        throw ParseError(lineno, "reference error: EDGE level " + std::to_string(k) +
                                     " outside [1, " + std::to_string(*depth) + "]");
      }
      if (s >= levels[k].size()) {
        throw ParseError(lineno, "reference error: EDGE source " + std::to_string(s) +
                                     " does not exist in level " + std::to_string(k));
      }
      if (t >= levels[k - 1].size()) {
        throw ParseError(lineno, "reference error: EDGE target " + std::to_string(t) +
                                     " does not exist in level " +
                                     std::to_string(k - 1));
      }
      edges[k - 1].push_back(Edge{s, o, t});
    } else {
      throw ParseError(lineno, "unknown keyword '" + kw + "'");
    }
  }

  if (!header) throw ParseError(lineno, "missing header 'BVD 1'");
  if (!depth) throw ParseError(lineno, "missing DEPTH");
  if (levels.size() != *depth + 1) {
    throw ParseError(lineno, "expected " + std::to_string(*depth + 1) +
                                 " LEVEL lines, got " + std::to_string(levels.size()));
  }
  OrderedBratteliDiagram d(std::move(levels), std::move(edges));
  require_valid(d);
  return d;
}

std::string to_dot(const OrderedBratteliDiagram& d) {
  auto name = [](std::size_t k, VertexIndex v) {
    return "v" + std::to_string(k) + "_" + std::to_string(v);
  };
  std::ostringstream os;
  os << "digraph bratteli {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle];\n";
  for (std::size_t k = 0; k <= d.depth(); ++k) {
    os << "  { rank=same;";
    for (VertexIndex v = 0; v < d.level_size(k); ++v) os << " " << name(k, v) << ";";
    os << " }\n";
  }
  for (std::size_t k = 0; k <= d.depth(); ++k) {
    for (VertexIndex v = 0; v < d.level_size(k); ++v) {
      os << "  " << name(k, v) << " [label=\"";
      if (const auto& label = d.label(k, v)) {
        os << escape(*label);
      } else {
        os << k << ":" << v;
      }
      os << "\"];\n";
    }
  }
  for (std::size_t k = 1; k <= d.depth(); ++k) {
    for (const Edge& e : d.edges(k)) {
      os << "  " << name(k, e.source) << " -> " << name(k - 1, e.target)
         << " [label=\"" << e.order << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace bvm
