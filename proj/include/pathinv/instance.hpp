#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pathinv/action.hpp"
#include "pathinv/fp.hpp"
#include "pathinv/quiver.hpp"
#include "pathinv/rational.hpp"

namespace pathinv {

// Instance-file error with a 1-based position in the source text.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line(line),
        column(column),
        message(msg) {}

  std::size_t line;
  std::size_t column;
  std::string message;
};

namespace detail {

using PathPart = std::variant<std::string, std::size_t>;
using JsonPath = std::vector<PathPart>;

struct TextPos {
  std::size_t line = 1;
  std::size_t col = 1;
};

// Position finder over the raw text: walks the document structure with a
// lightweight skipper and reports where the value at a path begins. Falls
// back to the deepest prefix reached, so it never fails outright.
class JsonLocator {
public:
  explicit JsonLocator(std::string_view text) : s_(text) {}

  TextPos locate(const JsonPath& path) {
    i_ = 0;
    pos_ = {1, 1};
    best_ = {1, 1};
    skip_ws();
    descend(path, 0);
    return best_;
  }

  static TextPos at_offset(std::string_view text, std::size_t offset) {
    TextPos p;
    for (std::size_t k = 0; k < offset && k < text.size(); ++k) bump(p, text[k]);
    return p;
  }

private:
  static void bump(TextPos& p, char c) {
    if (c == '\n') {
      ++p.line;
      p.col = 1;
    } else {
      ++p.col;
    }
  }

  bool eof() const { return i_ >= s_.size(); }
  char peek() const { return s_[i_]; }
  void advance() { bump(pos_, s_[i_++]); }

  void skip_ws() {
    while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r'))
      advance();
  }

  // Consumes a string literal, returning its raw content (escapes kept).
  std::string take_string() {
    std::string out;
    if (eof() || peek() != '"') return out;
    advance();
    while (!eof() && peek() != '"') {
      if (peek() == '\\') {
        out += peek();
        advance();
        if (eof()) break;
      }
      out += peek();
      advance();
    }
    if (!eof()) advance();
    return out;
  }

  void skip_value() {
    if (eof()) return;
    const char c = peek();
    if (c == '"') {
      take_string();
    } else if (c == '{') {
      advance();
      skip_ws();
      while (!eof() && peek() != '}') {
        take_string();
        skip_ws();
        if (!eof() && peek() == ':') advance();
        skip_ws();
        skip_value();
        skip_ws();
        if (!eof() && peek() == ',') {
          advance();
          skip_ws();
        }
      }
      if (!eof()) advance();
    } else if (c == '[') {
      advance();
      skip_ws();
      while (!eof() && peek() != ']') {
        skip_value();
        skip_ws();
        if (!eof() && peek() == ',') {
          advance();
          skip_ws();
        }
      }
      if (!eof()) advance();
    } else {
      while (!eof() && peek() != ',' && peek() != '}' && peek() != ']' && peek() != ' ' &&
             peek() != '\t' && peek() != '\n' && peek() != '\r')
        advance();
    }
  }

  bool descend(const JsonPath& path, std::size_t depth) {
    best_ = pos_;
    if (depth == path.size()) return true;
    if (std::holds_alternative<std::string>(path[depth])) {
      const std::string& want = std::get<std::string>(path[depth]);
      if (eof() || peek() != '{') return false;
      advance();
      skip_ws();
      while (!eof() && peek() != '}') {
        std::string key = take_string();
        skip_ws();
        if (!eof() && peek() == ':') advance();
        skip_ws();
        if (key == want) return descend(path, depth + 1);
        skip_value();
        skip_ws();
        if (!eof() && peek() == ',') {
          advance();
          skip_ws();
        }
      }
      return false;
    }
    const std::size_t want = std::get<std::size_t>(path[depth]);
    if (eof() || peek() != '[') return false;
    advance();
    skip_ws();
    std::size_t index = 0;
    while (!eof() && peek() != ']') {
      if (index == want) return descend(path, depth + 1);
      skip_value();
      skip_ws();
      ++index;
      if (!eof() && peek() == ',') {
        advance();
        skip_ws();
      }
    }
    return false;
  }

  std::string_view s_;
  std::size_t i_ = 0;
  TextPos pos_;
  TextPos best_;
};

}  // namespace detail

struct ArrowSpaceDecl {
  std::string source, target;
  int dim = 0;
};

struct BlockDecl {
  std::string source, target;
  std::vector<std::vector<std::string>> matrix;  // row-major rational literals
};

struct GeneratorDecl {
  std::string name;
  std::vector<BlockDecl> blocks;
};

struct FieldOption {
  bool rational = true;
  long long prime = 0;  // meaningful only when rational = false
};

struct InstanceOptions {
  FieldOption field;
  std::size_t closure_cap = 1024;
  std::size_t stabilization_window = 2;
};

struct InstanceData {
  std::vector<std::string> vertices;
  std::vector<ArrowSpaceDecl> arrow_spaces;
  std::vector<GeneratorDecl> generators;
  std::size_t max_degree = 0;
  InstanceOptions options;
};

namespace detail {

using ordered_json = nlohmann::ordered_json;

struct ParseCtx {
  std::string_view text;

  [[noreturn]] void fail(const JsonPath& path, const std::string& msg) const {
    TextPos p = JsonLocator(text).locate(path);
    throw ParseError(msg, p.line, p.col);
  }
};

inline JsonPath extend(JsonPath path, PathPart part) {
  path.push_back(std::move(part));
  return path;
}

inline const ordered_json& require_member(const ParseCtx& ctx, const ordered_json& obj,
                                          const JsonPath& path, const std::string& key) {
  if (!obj.is_object()) ctx.fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) ctx.fail(path, "missing required key \"" + key + "\"");
  return *it;
}

inline void reject_unknown(const ParseCtx& ctx, const ordered_json& obj, const JsonPath& path,
                           std::initializer_list<const char*> known) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : known)
      if (it.key() == k) ok = true;
    if (!ok) ctx.fail(extend(path, it.key()), "unknown key \"" + it.key() + "\"");
  }
}

inline std::string want_string(const ParseCtx& ctx, const ordered_json& v, const JsonPath& path) {
  if (!v.is_string()) ctx.fail(path, "expected a string");
  return v.get<std::string>();
}

inline std::size_t want_positive_int(const ParseCtx& ctx, const ordered_json& v,
                                     const JsonPath& path) {
  if (!v.is_number_integer() || v.get<long long>() < 1)
    ctx.fail(path, "expected a positive integer");
  return static_cast<std::size_t>(v.get<long long>());
}

inline FieldOption parse_field_option(const ParseCtx& ctx, const std::string& s,
                                      const JsonPath& path) {
  FieldOption f;
  if (s == "rational") return f;
  const std::string prefix = "prime ";
  if (s.rfind(prefix, 0) == 0) {
    const std::string digits = s.substr(prefix.size());
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos) {
      long long p = 0;
      try {
        p = std::stoll(digits);
      } catch (const std::exception&) {
        ctx.fail(path, "prime out of range");
      }
      if (p < 2 || p >= Fp::max_modulus) ctx.fail(path, "prime out of range");
      if (!is_prime(p)) ctx.fail(path, std::to_string(p) + " is not prime");
      f.rational = false;
      f.prime = p;
      return f;
    }
  }
  ctx.fail(path, "field must be \"rational\" or \"prime p\"");
}

}  // namespace detail

// Parses and semantically checks an instance file. Every diagnostic carries
// the line and column of the offending token. Action-level validation
// (block shapes, invertibility) is a separate stage.
inline InstanceData parse_instance(std::string_view text) {
  using detail::extend;
  using detail::JsonPath;
  using detail::ordered_json;

  detail::ParseCtx ctx{text};
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    detail::TextPos p = detail::JsonLocator::at_offset(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("invalid JSON: " + std::string(e.what()), p.line, p.col);
  }

  const JsonPath root;
  if (!doc.is_object()) ctx.fail(root, "instance file must be a JSON object");
  detail::reject_unknown(ctx, doc, root,
                         {"vertices", "arrow_spaces", "generators", "max_degree", "options"});

  InstanceData data;

  {
    const JsonPath path = extend(root, std::string("vertices"));
    const ordered_json& v = detail::require_member(ctx, doc, root, "vertices");
    if (!v.is_array() || v.empty()) ctx.fail(path, "vertices must be a non-empty array");
    for (std::size_t k = 0; k < v.size(); ++k) {
      const JsonPath vp = extend(path, k);
      std::string name = detail::want_string(ctx, v[k], vp);
      if (name.empty()) ctx.fail(vp, "vertex id must be non-empty");
      for (const std::string& prev : data.vertices)
        if (prev == name) ctx.fail(vp, "duplicate vertex id \"" + name + "\"");
      data.vertices.push_back(std::move(name));
    }
  }

  auto check_vertex = [&](const std::string& name, const JsonPath& path) {
    for (const std::string& v : data.vertices)
      if (v == name) return;
    ctx.fail(path, "unknown vertex \"" + name + "\"");
  };

  {
    const JsonPath path = extend(root, std::string("arrow_spaces"));
    const ordered_json& v = detail::require_member(ctx, doc, root, "arrow_spaces");
    if (!v.is_array()) ctx.fail(path, "arrow_spaces must be an array");
    for (std::size_t k = 0; k < v.size(); ++k) {
      const JsonPath ap = extend(path, k);
      const ordered_json& entry = v[k];
      if (!entry.is_object()) ctx.fail(ap, "arrow space must be an object");
      detail::reject_unknown(ctx, entry, ap, {"source", "target", "dim"});
      ArrowSpaceDecl a;
      a.source = detail::want_string(ctx, detail::require_member(ctx, entry, ap, "source"),
                                     extend(ap, std::string("source")));
      a.target = detail::want_string(ctx, detail::require_member(ctx, entry, ap, "target"),
                                     extend(ap, std::string("target")));
      check_vertex(a.source, extend(ap, std::string("source")));
      check_vertex(a.target, extend(ap, std::string("target")));
      a.dim = static_cast<int>(detail::want_positive_int(
          ctx, detail::require_member(ctx, entry, ap, "dim"), extend(ap, std::string("dim"))));
      for (const ArrowSpaceDecl& prev : data.arrow_spaces)
        if (prev.source == a.source && prev.target == a.target)
          ctx.fail(ap, "duplicate arrow space (" + a.source + "," + a.target + ")");
      data.arrow_spaces.push_back(std::move(a));
    }
  }

  {
    const JsonPath path = extend(root, std::string("generators"));
    const ordered_json& v = detail::require_member(ctx, doc, root, "generators");
    if (!v.is_array()) ctx.fail(path, "generators must be an array");
    for (std::size_t k = 0; k < v.size(); ++k) {
      const JsonPath gp = extend(path, k);
      const ordered_json& entry = v[k];
      if (!entry.is_object()) ctx.fail(gp, "generator must be an object");
      detail::reject_unknown(ctx, entry, gp, {"name", "blocks"});
      GeneratorDecl g;
      g.name = detail::want_string(ctx, detail::require_member(ctx, entry, gp, "name"),
                                   extend(gp, std::string("name")));
      if (g.name.empty()) ctx.fail(extend(gp, std::string("name")), "generator name must be non-empty");
      const JsonPath bp = extend(gp, std::string("blocks"));
      const ordered_json& blocks = detail::require_member(ctx, entry, gp, "blocks");
      if (!blocks.is_array()) ctx.fail(bp, "blocks must be an array");
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        const JsonPath one = extend(bp, b);
        const ordered_json& be = blocks[b];
        if (!be.is_object()) ctx.fail(one, "block must be an object");
        detail::reject_unknown(ctx, be, one, {"source", "target", "matrix"});
        BlockDecl decl;
        decl.source = detail::want_string(ctx, detail::require_member(ctx, be, one, "source"),
                                          extend(one, std::string("source")));
        decl.target = detail::want_string(ctx, detail::require_member(ctx, be, one, "target"),
                                          extend(one, std::string("target")));
        check_vertex(decl.source, extend(one, std::string("source")));
        check_vertex(decl.target, extend(one, std::string("target")));
        const JsonPath mp = extend(one, std::string("matrix"));
        const ordered_json& m = detail::require_member(ctx, be, one, "matrix");
        if (!m.is_array() || m.empty()) ctx.fail(mp, "matrix must be a non-empty array of rows");
        std::size_t cols = 0;
        for (std::size_t r = 0; r < m.size(); ++r) {
          const JsonPath rp = extend(mp, r);
          if (!m[r].is_array() || m[r].empty())
            ctx.fail(rp, "matrix row must be a non-empty array");
          if (r == 0)
            cols = m[r].size();
          else if (m[r].size() != cols)
            ctx.fail(rp, "matrix rows must all have the same length");
          std::vector<std::string> row;
          for (std::size_t c = 0; c < m[r].size(); ++c) {
            const JsonPath ep = extend(rp, c);
            std::string lit = detail::want_string(ctx, m[r][c], ep);
            try {
              parse_rational(lit);
            } catch (const std::invalid_argument&) {
              ctx.fail(ep, "malformed rational \"" + lit + "\"");
            }
            row.push_back(std::move(lit));
          }
          decl.matrix.push_back(std::move(row));
        }
        for (const BlockDecl& prev : g.blocks)
          if (prev.source == decl.source && prev.target == decl.target)
            ctx.fail(one, "duplicate block (" + decl.source + "," + decl.target + ")");
        g.blocks.push_back(std::move(decl));
      }
      data.generators.push_back(std::move(g));
    }
  }

  data.max_degree = detail::want_positive_int(ctx,
                                              detail::require_member(ctx, doc, root, "max_degree"),
                                              extend(root, std::string("max_degree")));

  if (doc.contains("options")) {
    const JsonPath path = extend(root, std::string("options"));
    const ordered_json& opt = doc["options"];
    if (!opt.is_object()) ctx.fail(path, "options must be an object");
    detail::reject_unknown(ctx, opt, path, {"field", "closure_cap", "stabilization_window"});
    if (opt.contains("field")) {
      const JsonPath fp = extend(path, std::string("field"));
      data.options.field = detail::parse_field_option(
          ctx, detail::want_string(ctx, opt["field"], fp), fp);
    }
    if (opt.contains("closure_cap"))
      data.options.closure_cap = detail::want_positive_int(
          ctx, opt["closure_cap"], extend(path, std::string("closure_cap")));
    if (opt.contains("stabilization_window"))
      data.options.stabilization_window = detail::want_positive_int(
          ctx, opt["stabilization_window"], extend(path, std::string("stabilization_window")));
  }

  return data;
}

inline Quiver build_quiver(const InstanceData& data) {
  Quiver q(data.vertices);
  for (const ArrowSpaceDecl& a : data.arrow_spaces)
    q.set_arrow_dim(q.index_of(a.source), q.index_of(a.target), a.dim);
  return q;
}

namespace detail {

inline Rational entry_to_field(const std::string& lit, const FieldOption&, Rational*) {
  return parse_rational(lit);
}

inline Fp entry_to_field(const std::string& lit, const FieldOption& f, Fp*) {
  const Rational r = parse_rational(lit);
  const long long p = f.prime;
  const long long num = (r.num() % p).convert_to<long long>();
  const long long den = (r.den() % p).convert_to<long long>();
  if (den == 0)
    throw std::domain_error("denominator of \"" + lit + "\" is divisible by the modulus " +
                            std::to_string(p));
  return Fp::residue(num, p) / Fp::residue(den, p);
}

}  // namespace detail

// Converts the declared blocks to scalars of the requested field. Over a
// prime field a denominator divisible by the modulus is a parse error with
// the entry's position.
template <Field F>
HomogeneousAction<F> build_action(const InstanceData& data, std::string_view text) {
  detail::ParseCtx ctx{text};
  HomogeneousAction<F> action;
  action.quiver = build_quiver(data);
  for (std::size_t k = 0; k < data.generators.size(); ++k) {
    const GeneratorDecl& g = data.generators[k];
    GeneratorBlocks<F> gb;
    gb.name = g.name;
    for (std::size_t b = 0; b < g.blocks.size(); ++b) {
      const BlockDecl& decl = g.blocks[b];
      const std::size_t rows = decl.matrix.size();
      const std::size_t cols = decl.matrix[0].size();
      Matrix<F> m(rows, cols);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          try {
            m(r, c) = detail::entry_to_field(decl.matrix[r][c], data.options.field,
                                             static_cast<F*>(nullptr));
          } catch (const std::domain_error& e) {
            ctx.fail({std::string("generators"), k, std::string("blocks"), b,
                      std::string("matrix"), r, c},
                     e.what());
          }
        }
      gb.blocks.emplace(
          std::make_pair(action.quiver.index_of(decl.source), action.quiver.index_of(decl.target)),
          std::move(m));
    }
    action.generators.push_back(std::move(gb));
  }
  return action;
}

}  // namespace pathinv
